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

#ifndef TFT_INVERSE_TRUNCATED_HPP_
#define TFT_INVERSE_TRUNCATED_HPP_

#include <bit>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>

#include "tft/butterfly.hpp"
#include "tft/error.hpp"
#include "tft/plan.hpp"
#include "tft/ring.hpp"
#include "tft/transform.hpp"
#include "tft/truncated.hpp"

namespace tft {

/// One call of the inverse recursion. Positions head..tail hold stage-p
/// values, tail+1..last hold stage-(stage-1) values, and [head, last] is an
/// aligned block of width m_(stage-1). A one-position frame carries
/// stage = p + 1; such frames are always base cases.
struct InvocationFrame {
  std::size_t head = 0;
  std::size_t tail = 0;
  std::size_t last = 0;
  unsigned stage = 1;

  std::size_t left_middle() const { return (last - head) / 2 + head; }
  std::size_t right_middle() const { return left_middle() + 1; }
};

/// Default observer for the inverse. `produced(k, s)` fires whenever
/// position k has just been brought to stage s.
struct NoObserver {
  void entered(const InvocationFrame& /*frame*/, unsigned /*depth*/) {}
  void produced(std::size_t /*k*/, unsigned /*stage*/) {}
};

namespace detail {

// Stage-(s-1) value at position q is known to vanish: its column
// q mod m_(s-1) only collects coefficients at indices >= ell.
inline bool known_zero(std::size_t q, std::size_t width_before, std::size_t ell) {
  return q % width_before >= ell;
}

inline void require_range(const TransformPlan& plan, std::size_t from, std::size_t to,
                          unsigned s) {
  require(s >= 1 && s <= plan.log_size(), "stage " + std::to_string(s) + " out of range");
  require(from > to || to < plan.size(), "range end " + std::to_string(to) + " out of bounds");
}

}  // namespace detail

/// Brings the aligned block buf[start, start + len) from stage p to stage
/// p - log2(len) by undoing, inside the block, the last log2(len) stages of
/// the forward transform. No value outside the block is read.
template <class Observer = NoObserver>
void self_contained_push_up(std::span<FieldElement> buf, std::size_t start, std::size_t len,
                            const TransformPlan& plan, OpCounter& ctr, Observer&& obs = {}) {
  detail::require_length(buf, plan);
  detail::require(std::has_single_bit(len) && len <= plan.size(),
                  "block length " + std::to_string(len) + " is not a power of two <= n");
  detail::require(start % len == 0 && start + len <= plan.size(),
                  "block [" + std::to_string(start) + ", +" + std::to_string(len) +
                      ") is not aligned");
  const PrimeField& f = plan.field();
  const unsigned p = plan.log_size();
  const unsigned levels = static_cast<unsigned>(std::countr_zero(len));
  for (unsigned t = p; t > p - levels; --t) {
    const std::size_t m = plan.size() >> t;
    for (std::size_t k = start; k < start + len; ++k) {
      if ((k / m) % 2 != 0) continue;
      const ButterflyPair in = push_up_pair(f, buf[k], buf[k + m], plan.twiddle_inv_at(k, m), ctr);
      buf[k] = in.left;
      buf[k + m] = in.right;
      obs.produced(k, t - 1);
      obs.produced(k + m, t - 1);
    }
  }
}

/// Brings positions from..to (inclusive) from stage s-1 to stage s. A
/// position in an even block of width m_s combines with its stage-(s-1)
/// partner k + m_s; a position in an odd block is solved against the
/// stage-s left output already sitting at k - m_s. With ell < n, operands
/// known to vanish are skipped.
template <class Observer = NoObserver>
void push_down_range(std::span<FieldElement> buf, std::size_t from, std::size_t to, unsigned s,
                     const TransformPlan& plan, OpCounter& ctr, std::size_t ell,
                     Observer&& obs = {}) {
  detail::require_length(buf, plan);
  detail::require_range(plan, from, to, s);
  if (from > to) return;
  const PrimeField& f = plan.field();
  const std::size_t m = plan.width(s);
  for (std::size_t k = from; k <= to; ++k) {
    const bool left = (k / m) % 2 == 0;
    if (left) {
      if (!detail::known_zero(k + m, 2 * m, ell)) {
        buf[k] = push_down_left(f, buf[k], buf[k + m], plan.twiddle_at(k, m), ctr);
      }
    } else if (detail::known_zero(k, 2 * m, ell)) {
      buf[k] = buf[k - m];
    } else {
      buf[k] = solve_from_left_output(f, buf[k - m], buf[k], plan.twiddle_at(k - m, m), ctr).right;
    }
    obs.produced(k, s);
  }
}

template <class Observer = NoObserver>
void push_down_range(std::span<FieldElement> buf, std::size_t from, std::size_t to, unsigned s,
                     const TransformPlan& plan, OpCounter& ctr) {
  push_down_range(buf, from, to, s, plan, ctr, plan.size(), Observer{});
}

/// Brings the left positions from..to (inclusive, all in even blocks of
/// width m_s) from stage s back to stage s-1.
///
/// paired: the partners k + m_s also hold stage-s values and both slots are
///   restored together.
/// otherwise: the partners already hold stage-(s-1) values and only the left
///   slot is solved, as out_left - w v.
template <class Observer = NoObserver>
void push_up_range(std::span<FieldElement> buf, std::size_t from, std::size_t to, unsigned s,
                   const TransformPlan& plan, OpCounter& ctr, bool paired, std::size_t ell,
                   Observer&& obs = {}) {
  detail::require_length(buf, plan);
  detail::require_range(plan, from, to, s);
  if (from > to) return;
  const PrimeField& f = plan.field();
  const std::size_t m = plan.width(s);
  for (std::size_t k = from; k <= to; ++k) {
    detail::require((k / m) % 2 == 0, "push_up_range: position " + std::to_string(k) +
                                          " is not a left slot at stage " + std::to_string(s));
    const std::size_t partner = k + m;
    const bool zero_partner = detail::known_zero(partner, 2 * m, ell);
    if (paired) {
      if (zero_partner) {
        // Zero right input: both outputs equal the left input.
        buf[partner] = f.zero();
      } else {
        const ButterflyPair in =
            push_up_pair(f, buf[k], buf[partner], plan.twiddle_inv_at(k, m), ctr);
        buf[k] = in.left;
        buf[partner] = in.right;
      }
      obs.produced(k, s - 1);
      obs.produced(partner, s - 1);
    } else {
      if (!zero_partner) {
        buf[k] = f.sub(buf[k], f.mul(plan.twiddle_at(k, m), buf[partner]));
        ctr.additions += 1;
        ctr.multiplications += 1;
      }
      obs.produced(k, s - 1);
    }
  }
}

template <class Observer = NoObserver>
void push_up_range(std::span<FieldElement> buf, std::size_t from, std::size_t to, unsigned s,
                   const TransformPlan& plan, OpCounter& ctr, bool paired) {
  push_up_range(buf, from, to, s, plan, ctr, paired, plan.size(), Observer{});
}

namespace detail {

template <class Observer>
class InverseTft {
 public:
  InverseTft(std::span<FieldElement> buf, std::size_t ell, const TransformPlan& plan,
             OpCounter& ctr, Observer& obs)
      : buf_(buf), ell_(ell), plan_(plan), ctr_(ctr), obs_(obs) {}

  void run() { step({0, ell_ - 1, plan_.size() - 1, 1}, 0); }

 private:
  void step(const InvocationFrame& frame, unsigned depth) {
    obs_.entered(frame, depth);
    if (frame.head > frame.tail) return;  // nothing here is at stage p
    if (frame.head == frame.last) return;  // a lone position: stage p is its own start

    const unsigned s = frame.stage;
    const std::size_t m = plan_.width(s);
    ensure(frame.last - frame.head + 1 == 2 * m && frame.head % (2 * m) == 0,
           "inverse TFT frame is not an aligned block of width 2 m_s");
    const std::size_t left_middle = frame.left_middle();
    const std::size_t right_middle = frame.right_middle();

    if (frame.tail >= left_middle) {
      // Left half fully at stage p: undo it alone, which makes the right
      // half solvable from the left outputs.
      self_contained_push_up(buf_, frame.head, m, plan_, ctr_, obs_);
      push_down_range(buf_, frame.tail + 1, frame.last, s, plan_, ctr_, ell_, obs_);
      step({right_middle, frame.tail, frame.last, s + 1}, depth + 1);
      const std::size_t block = left_middle - frame.head + 1;
      ensure(std::has_single_bit(block), "left half width is not a power of two");
      const unsigned s_up = plan_.log_size() - static_cast<unsigned>(std::countr_zero(block));
      ensure(s_up == s, "stage recomputed from the left half disagrees with the frame");
      push_up_range(buf_, frame.head, left_middle, s_up, plan_, ctr_, true, ell_, obs_);
    } else {
      push_down_range(buf_, frame.tail + 1, left_middle, s, plan_, ctr_, ell_, obs_);
      step({frame.head, frame.tail, left_middle, s + 1}, depth + 1);
      push_up_range(buf_, frame.head, left_middle, s, plan_, ctr_, false, ell_, obs_);
    }
  }

  std::span<FieldElement> buf_;
  std::size_t ell_;
  const TransformPlan& plan_;
  OpCounter& ctr_;
  Observer& obs_;
};

}  // namespace detail

/// Inverse truncated Fourier transform. Expects buf = (x_(p,0), ...,
/// x_(p,ell-1), 0, ..., 0) as produced by tft_forward (with the tail
/// cleared) and restores buf = (a_0, ..., a_(ell-1), 0, ..., 0).
template <class Observer = NoObserver>
void inv_tft(std::span<FieldElement> buf, std::size_t ell, const TransformPlan& plan,
             OpCounter& ctr, Observer&& obs = {}) {
  detail::require_length(buf, plan);
  detail::require_zero_tail(buf, ell, "inv_tft");
  detail::InverseTft<std::remove_reference_t<Observer>> run(buf, ell, plan, ctr, obs);
  run.run();
}

}  // namespace tft

#endif  // TFT_INVERSE_TRUNCATED_HPP_
