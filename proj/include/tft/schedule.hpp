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

#ifndef TFT_SCHEDULE_HPP_
#define TFT_SCHEDULE_HPP_

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "tft/butterfly.hpp"
#include "tft/error.hpp"
#include "tft/plan.hpp"
#include "tft/ring.hpp"
#include "tft/transform.hpp"
#include "tft/truncated.hpp"

namespace tft {

enum class ScheduleMode { kDft, kTft };

/// Which butterflies a forward transform executes, recorded by running it.
/// grid[s][k] is 'x' when position k is written by a butterfly at stage s,
/// '=' when it is written by a zero-operand copy and ' ' otherwise. Row 0
/// marks inputs: 'o' for a_k with k < ell and '.' for the zero padding.
struct Schedule {
  ScheduleMode mode = ScheduleMode::kTft;
  std::size_t n = 0;
  std::size_t ell = 0;
  std::vector<std::string> grid;
  std::vector<std::size_t> butterflies_per_stage;  // index 0 unused
  std::size_t butterflies = 0;
  std::size_t copies = 0;
  OpCounter counter;
};

namespace detail {

struct ScheduleRecorder {
  Schedule* out;
  void butterfly(unsigned s, std::size_t lo, std::size_t hi) {
    out->grid[s][lo] = out->grid[s][hi] = 'x';
    ++out->butterflies_per_stage[s];
    ++out->butterflies;
  }
  void copy(unsigned s, std::size_t /*from*/, std::size_t to) {
    out->grid[s][to] = '=';
    ++out->copies;
  }
};

}  // namespace detail

inline Schedule trace_schedule(std::size_t n, std::size_t ell, ScheduleMode mode,
                               const PrimeField& field = PrimeField()) {
  const TransformPlan plan(field, n);
  detail::require(ell >= 1 && ell <= n, "ell must lie in [1, n]");
  Schedule sched;
  sched.mode = mode;
  sched.n = n;
  sched.ell = ell;
  sched.grid.assign(plan.log_size() + 1, std::string(n, ' '));
  sched.butterflies_per_stage.assign(plan.log_size() + 1, 0);
  for (std::size_t k = 0; k < n; ++k) sched.grid[0][k] = k < ell ? 'o' : '.';

  Buffer buf(n, field.zero());
  for (std::size_t k = 0; k < ell; ++k) buf[k] = field.element(static_cast<std::uint64_t>(k + 1));
  detail::ScheduleRecorder rec{&sched};
  if (mode == ScheduleMode::kDft) {
    dft_inplace(buf, plan, sched.counter, rec);
  } else {
    tft_forward(buf, ell, plan, sched.counter, rec);
  }
  return sched;
}

inline std::string render_schedule(const Schedule& sched) {
  std::ostringstream out;
  out << "schedule mode=" << (sched.mode == ScheduleMode::kDft ? "dft" : "tft")
      << " n=" << sched.n << " ell=" << sched.ell << '\n';
  for (std::size_t s = 0; s < sched.grid.size(); ++s) {
    std::string line = "s=" + std::to_string(s);
    line.resize(6, ' ');
    for (std::size_t k = 0; k < sched.n; ++k) {
      line += sched.grid[s][k];
      line += ' ';
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
  out << "butterflies: " << sched.butterflies << " (per stage:";
  for (std::size_t s = 1; s < sched.butterflies_per_stage.size(); ++s) {
    out << ' ' << sched.butterflies_per_stage[s];
  }
  out << ")\n";
  out << "copies: " << sched.copies << '\n';
  out << "ops: add=" << sched.counter.additions << " mul=" << sched.counter.multiplications
      << '\n';
  return out.str();
}

}  // namespace tft

#endif  // TFT_SCHEDULE_HPP_
