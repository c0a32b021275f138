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

#ifndef TFT_TRUNCATED_HPP_
#define TFT_TRUNCATED_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "tft/butterfly.hpp"
#include "tft/error.hpp"
#include "tft/plan.hpp"
#include "tft/ring.hpp"
#include "tft/transform.hpp"

namespace tft {

/// Upper bound on the work of tft_forward for length ell at size n = 2^p:
/// ell p + n additions and floor((ell p + n) / 2) twiddle products.
struct CostBound {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
};

inline CostBound tft_cost_bound(std::size_t n, std::size_t ell) {
  detail::require(std::has_single_bit(n), "transform size must be a power of two");
  detail::require(ell >= 1 && ell <= n, "ell must lie in [1, n]");
  const std::uint64_t p = static_cast<std::uint64_t>(std::countr_zero(n));
  const std::uint64_t adds = ell * p + n;
  return {adds, adds / 2};
}

namespace detail {

inline void require_zero_tail(std::span<const FieldElement> buf, std::size_t ell,
                              const char* who) {
  require(ell >= 1 && ell <= buf.size(), std::string(who) + ": ell = " + std::to_string(ell) +
                                             " outside [1, " + std::to_string(buf.size()) + "]");
  for (std::size_t k = ell; k < buf.size(); ++k) {
    require(buf[k].value() == 0, std::string(who) + ": position " + std::to_string(k) +
                                     " is beyond ell = " + std::to_string(ell) +
                                     " but nonzero");
  }
}

}  // namespace detail

/// Truncated Fourier transform. Expects buf = (a_0, ..., a_(ell-1), 0, ...)
/// and leaves buf[i] = A(w^[i]_p) for i < ell.
///
/// Stage s only produces the prefix x_(s,0..c m_s - 1) with c = ceil(ell / m_s),
/// which is all the later stages read. A butterfly overlapping that prefix
/// runs in full. Inside a width-m_s block the column j = k mod m_s of a
/// stage-(s-1) value is zero whenever j >= ell, since it only depends on the
/// zero inputs a_(j + t m_(s-1)). A butterfly with a zero right operand is
/// replaced by a copy of the left one and one with two zero operands is
/// skipped.
///
/// Positions >= ell end up holding the intermediate values x_(s,k) of the
/// last stage that wrote them (zero if none did).
template <class Trace = NoTrace>
void tft_forward(std::span<FieldElement> buf, std::size_t ell, const TransformPlan& plan,
                 OpCounter& ctr, Trace&& trace = {}) {
  detail::require_length(buf, plan);
  detail::require_zero_tail(buf, ell, "tft_forward");
  const PrimeField& f = plan.field();
  const std::size_t n = plan.size();
  for (unsigned s = 1; s <= plan.log_size(); ++s) {
    const std::size_t m = n >> s;
    const std::size_t prefix = (ell + m - 1) / m * m;
    const std::size_t live_columns = std::min(m, ell);
    for (std::size_t i = 0; i * m < prefix; i += 2) {
      const FieldElement w = plan.stage_twiddle(s, i);
      for (std::size_t j = 0; j < live_columns; ++j) {
        const std::size_t lo = i * m + j;
        const std::size_t hi = lo + m;
        if (m + j >= ell) {
          buf[hi] = buf[lo];
          trace.copy(s, lo, hi);
        } else {
          butterfly_forward(f, buf, lo, hi, w, ctr);
          trace.butterfly(s, lo, hi);
        }
      }
    }
  }
}

}  // namespace tft

#endif  // TFT_TRUNCATED_HPP_
