// Copyright 2026 The TFT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TFT_BUTTERFLY_HPP_
#define TFT_BUTTERFLY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

#include "tft/error.hpp"
#include "tft/ring.hpp"

namespace tft {

/// Arithmetic tally used to check transform costs. Negation is free and
/// division by two is tracked apart from twiddle products.
struct OpCounter {
  std::uint64_t additions = 0;        // additions and subtractions
  std::uint64_t multiplications = 0;  // products by a twiddle or its inverse
  std::uint64_t halvings = 0;         // divisions by two

  OpCounter& operator+=(const OpCounter& other) {
    additions += other.additions;
    multiplications += other.multiplications;
    halvings += other.halvings;
    return *this;
  }

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

/// Default trace sink for the forward transforms.
struct NoTrace {
  void butterfly(unsigned /*stage*/, std::size_t /*lo*/, std::size_t /*hi*/) {}
  void copy(unsigned /*stage*/, std::size_t /*from*/, std::size_t /*to*/) {}
};

// A butterfly at stage s links two stage-(s-1) inputs (u, v) to two stage-s
// outputs through
//
//   [out_left ]   [1   w] [u]
//   [out_right] = [1  -w] [v]
//
// Any two of the four values determine the other two. The helpers below are
// the specializations used by the transforms; butterfly_solve covers every
// pair.

struct ButterflyPair {
  FieldElement left;
  FieldElement right;
};

/// (u, v) -> (u + w v, u - w v). Two additions, one multiplication.
inline ButterflyPair butterfly(const PrimeField& f, FieldElement u, FieldElement v,
                               FieldElement w, OpCounter& ctr) {
  const FieldElement t = f.mul(w, v);
  ctr.additions += 2;
  ctr.multiplications += 1;
  return {f.add(u, t), f.sub(u, t)};
}

/// In-place forward butterfly on buf[lo], buf[hi].
inline void butterfly_forward(const PrimeField& f, std::span<FieldElement> buf, std::size_t lo,
                              std::size_t hi, FieldElement w, OpCounter& ctr) {
  const ButterflyPair out = butterfly(f, buf[lo], buf[hi], w, ctr);
  buf[lo] = out.left;
  buf[hi] = out.right;
}

/// Left output from both inputs: u + w v.
inline FieldElement push_down_left(const PrimeField& f, FieldElement u, FieldElement v,
                                   FieldElement w, OpCounter& ctr) {
  ctr.additions += 1;
  ctr.multiplications += 1;
  return f.add(u, f.mul(w, v));
}

/// Right output from both inputs: u - w v.
inline FieldElement push_down_right(const PrimeField& f, FieldElement u, FieldElement v,
                                    FieldElement w, OpCounter& ctr) {
  ctr.additions += 1;
  ctr.multiplications += 1;
  return f.sub(u, f.mul(w, v));
}

/// Both inputs from both outputs: ((a + b) / 2, (a - b) / (2 w)).
inline ButterflyPair push_up_pair(const PrimeField& f, FieldElement out_left,
                                  FieldElement out_right, FieldElement w_inv, OpCounter& ctr) {
  ctr.additions += 2;
  ctr.multiplications += 1;
  ctr.halvings += 2;
  return {f.half(f.add(out_left, out_right)), f.mul(f.half(f.sub(out_left, out_right)), w_inv)};
}

/// Given the left output and the right input, returns the left input
/// (out_left - w v) as `left` and the right output (out_left - 2 w v) as
/// `right`. Two additions, one multiplication.
inline ButterflyPair solve_from_left_output(const PrimeField& f, FieldElement out_left,
                                            FieldElement in_right, FieldElement w,
                                            OpCounter& ctr) {
  const FieldElement t = f.mul(w, in_right);
  const FieldElement in_left = f.sub(out_left, t);
  ctr.additions += 2;
  ctr.multiplications += 1;
  return {in_left, f.sub(in_left, t)};
}

/// Given the right output and the left input, returns the left output
/// (2 u - out_right) as `left` and the right input ((u - out_right) / w) as
/// `right`.
inline ButterflyPair solve_from_right_output(const PrimeField& f, FieldElement out_right,
                                             FieldElement in_left, FieldElement w_inv,
                                             OpCounter& ctr) {
  const FieldElement t = f.sub(in_left, out_right);  // w v
  ctr.additions += 2;
  ctr.multiplications += 1;
  return {f.add(in_left, t), f.mul(t, w_inv)};
}

enum class Slot { kInputLeft, kInputRight, kOutputLeft, kOutputRight };

struct ButterflyState {
  FieldElement input_left;
  FieldElement input_right;
  FieldElement output_left;
  FieldElement output_right;
};

/// Completes a butterfly from any two of its four values. Throws
/// ContractError when both known values name the same slot.
inline ButterflyState butterfly_solve(const PrimeField& f, Slot a, FieldElement va, Slot b,
                                      FieldElement vb, FieldElement w, FieldElement w_inv,
                                      OpCounter& ctr) {
  detail::require(a != b, "butterfly_solve needs two distinct known slots");
  if (static_cast<int>(a) > static_cast<int>(b)) {
    std::swap(a, b);
    std::swap(va, vb);
  }
  ButterflyState st;
  auto set = [&st](Slot slot, FieldElement v) {
    switch (slot) {
      case Slot::kInputLeft: st.input_left = v; break;
      case Slot::kInputRight: st.input_right = v; break;
      case Slot::kOutputLeft: st.output_left = v; break;
      case Slot::kOutputRight: st.output_right = v; break;
    }
  };
  set(a, va);
  set(b, vb);

  using enum Slot;
  if (a == kInputLeft && b == kInputRight) {
    const ButterflyPair out = butterfly(f, va, vb, w, ctr);
    st.output_left = out.left;
    st.output_right = out.right;
  } else if (a == kOutputLeft && b == kOutputRight) {
    const ButterflyPair in = push_up_pair(f, va, vb, w_inv, ctr);
    st.input_left = in.left;
    st.input_right = in.right;
  } else if (a == kInputRight && b == kOutputLeft) {
    const ButterflyPair r = solve_from_left_output(f, vb, va, w, ctr);
    st.input_left = r.left;
    st.output_right = r.right;
  } else if (a == kInputLeft && b == kOutputRight) {
    const ButterflyPair r = solve_from_right_output(f, vb, va, w_inv, ctr);
    st.output_left = r.left;
    st.input_right = r.right;
  } else if (a == kInputLeft && b == kOutputLeft) {
    // w v = out_left - u; out_right = u - w v.
    const FieldElement t = f.sub(vb, va);
    st.input_right = f.mul(t, w_inv);
    st.output_right = f.sub(va, t);
    ctr.additions += 2;
    ctr.multiplications += 1;
  } else {  // kInputRight, kOutputRight
    const FieldElement t = f.mul(w, va);
    st.input_left = f.add(vb, t);
    st.output_left = f.add(st.input_left, t);
    ctr.additions += 2;
    ctr.multiplications += 1;
  }
  return st;
}

}  // namespace tft

#endif  // TFT_BUTTERFLY_HPP_
