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

#ifndef TFT_TRANSFORM_HPP_
#define TFT_TRANSFORM_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tft/butterfly.hpp"
#include "tft/error.hpp"
#include "tft/plan.hpp"
#include "tft/ring.hpp"

namespace tft {

/// Working array for the in-place transforms; buffer position k holds
/// x_(s,k) for whatever stage s the schedule has reached there.
using Buffer = std::vector<FieldElement>;

namespace detail {

inline void require_length(std::span<const FieldElement> buf, const TransformPlan& plan) {
  require(buf.size() == plan.size(), "buffer length " + std::to_string(buf.size()) +
                                         " does not match transform size " +
                                         std::to_string(plan.size()));
}

}  // namespace detail

/// In-place decimation-in-time DFT. On return buf[i] = A(w^[i]_p), i.e. the
/// transform in bit-reversed order. Costs exactly n p additions and n p / 2
/// multiplications.
template <class Trace = NoTrace>
void dft_inplace(std::span<FieldElement> buf, const TransformPlan& plan, OpCounter& ctr,
                 Trace&& trace = {}) {
  detail::require_length(buf, plan);
  const PrimeField& f = plan.field();
  const std::size_t n = plan.size();
  for (unsigned s = 1; s <= plan.log_size(); ++s) {
    const std::size_t m = n >> s;
    for (std::size_t i = 0; i < n / m; i += 2) {
      const FieldElement w = plan.stage_twiddle(s, i);
      for (std::size_t j = 0; j < m; ++j) {
        butterfly_forward(f, buf, i * m + j, (i + 1) * m + j, w, ctr);
        trace.butterfly(s, i * m + j, (i + 1) * m + j);
      }
    }
  }
}

/// O(n^2) evaluation a_hat_i = sum_j a_j omega^(ij), natural order. The
/// length of `a` is the transform size; omega must have that order.
inline Buffer dft_naive(std::span<const FieldElement> a, const PrimeField& f, FieldElement omega) {
  const std::size_t n = a.size();
  Buffer out(n);
  FieldElement root_i = f.one();  // omega^i
  for (std::size_t i = 0; i < n; ++i) {
    FieldElement acc = f.zero();
    FieldElement x = f.one();  // omega^(ij)
    for (std::size_t j = 0; j < n; ++j) {
      acc = f.add(acc, f.mul(a[j], x));
      x = f.mul(x, root_i);
    }
    out[i] = acc;
    root_i = f.mul(root_i, omega);
  }
  return out;
}

inline Buffer dft_naive(std::span<const FieldElement> a, const TransformPlan& plan) {
  detail::require_length(a, plan);
  return dft_naive(a, plan.field(), plan.omega());
}

/// Inverts dft_inplace: takes the bit-reversed transform back to the
/// coefficients. Each stage undoes its butterflies with a halving push-up, so
/// the 1/n scaling is spread over the p stages.
inline void idft_inplace(std::span<FieldElement> buf, const TransformPlan& plan, OpCounter& ctr) {
  detail::require_length(buf, plan);
  const PrimeField& f = plan.field();
  const std::size_t n = plan.size();
  for (unsigned s = plan.log_size(); s >= 1; --s) {
    const std::size_t m = n >> s;
    for (std::size_t i = 0; i < n / m; i += 2) {
      const FieldElement w_inv = plan.stage_twiddle_inv(s, i);
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t lo = i * m + j;
        const std::size_t hi = lo + m;
        const ButterflyPair in = push_up_pair(f, buf[lo], buf[hi], w_inv, ctr);
        buf[lo] = in.left;
        buf[hi] = in.right;
      }
    }
  }
}

}  // namespace tft

#endif  // TFT_TRANSFORM_HPP_
