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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tft/tft.hpp"

namespace {

using namespace tft;
using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Shared sweep over n in {4, ..., 1024} and every ell in [1, n].
struct SweepResult {
  std::size_t cases = 0;
  std::size_t oracle_mismatches = 0;
  std::size_t bound_violations = 0;
  std::size_t round_trip_failures = 0;
  double millis = 0;
  std::string first_problem;
};

const SweepResult& full_sweep() {
  static const SweepResult result = [] {
    SweepResult r;
    const auto start = Clock::now();
    const PrimeField f;
    std::mt19937_64 rng(2024);
    for (std::size_t n = 4; n <= 1024; n *= 2) {
      const TransformPlan plan(f, n);
      for (std::size_t ell = 1; ell <= n; ++ell) {
        ++r.cases;
        const Buffer a = testing::random_with_zero_tail(f, n, ell, rng);
        const Buffer naive = dft_naive(a, plan);
        Buffer buf = a;
        OpCounter ctr;
        tft_forward(buf, ell, plan, ctr);
        auto note = [&](const char* what) {
          if (r.first_problem.empty()) {
            r.first_problem = std::string(what) + " at n=" + std::to_string(n) +
                              " ell=" + std::to_string(ell);
          }
        };
        for (std::size_t i = 0; i < ell; ++i) {
          if (buf[i] != naive[bit_reverse(i, plan.log_size())]) {
            ++r.oracle_mismatches;
            note("oracle mismatch");
            break;
          }
        }
        const CostBound bound = tft_cost_bound(n, ell);
        if (ctr.additions > bound.additions || ctr.multiplications > bound.multiplications) {
          ++r.bound_violations;
          note("bound violation");
        }
        std::fill(buf.begin() + static_cast<std::ptrdiff_t>(ell), buf.end(), f.zero());
        OpCounter inv;
        inv_tft(buf, ell, plan, inv);
        if (buf != a) {
          ++r.round_trip_failures;
          note("round trip failure");
        }
      }
    }
    r.millis = millis_since(start);
    return r;
  }();
  return result;
}

// Each check returns an empty string on success or a failure description.
using Check = std::function<std::string()>;

std::string bit_reversal_golden() {
  const auto start = Clock::now();
  const bool ok = bit_reverse(3, 5) == 24 && bit_reverse(11, 5) == 26;
  const double ms = millis_since(start);
  if (!ok) return "wrong values";
  if (ms >= 1.0) return "took " + std::to_string(ms) + " ms";
  return {};
}

std::string worked_example_forward() {
  const PrimeField f(13);
  const TransformPlan plan(f, 4);
  if (plan.omega() != FieldElement(5)) return "root is not 5";
  const std::vector<std::vector<std::uint64_t>> expected = {{1, 1, 1}, {1, 12, 5}, {1, 1, 12}};
  for (std::size_t unit = 0; unit < 3; ++unit) {
    Buffer buf(4);
    buf[unit] = f.one();
    OpCounter ctr;
    tft_forward(buf, 3, plan, ctr);
    for (std::size_t i = 0; i < 3; ++i) {
      if (buf[i].value() != expected[unit][i]) {
        return "probe " + std::to_string(unit) + " slot " + std::to_string(i);
      }
    }
  }
  return {};
}

std::string worked_example_not_self_inverse() {
  const PrimeField f(13);
  const TransformPlan forward(f, 4);
  const TransformPlan backward(f, 4, FieldElement(8));
  // Columns of (3a0 + 5a1 + a2, a0 - 6a1 - a2, -5a0 + a1 - 3a2).
  const std::vector<std::vector<std::int64_t>> expected = {{3, 1, -5}, {5, -6, 1}, {1, -1, -3}};
  for (std::size_t unit = 0; unit < 3; ++unit) {
    Buffer buf(4);
    buf[unit] = f.one();
    const Buffer a = buf;
    OpCounter ctr;
    tft_forward(buf, 3, forward, ctr);
    buf[3] = f.zero();
    tft_forward(buf, 3, backward, ctr);
    for (std::size_t i = 0; i < 3; ++i) {
      if (buf[i] != f.element(expected[unit][i])) {
        return "probe " + std::to_string(unit) + " slot " + std::to_string(i);
      }
    }
    for (std::uint64_t c = 0; c < 13; ++c) {
      bool multiple = true;
      for (std::size_t i = 0; i < 3; ++i) {
        multiple = multiple && buf[i] == f.mul(FieldElement(c), a[i]);
      }
      if (multiple) return "probe " + std::to_string(unit) + " is a multiple of a";
    }
  }
  return {};
}

std::string inverse_dft_identity() {
  const PrimeField f;
  std::mt19937_64 rng(4);
  for (std::size_t n = 2; n <= 1024; n *= 2) {
    const TransformPlan plan(f, n);
    const Buffer a = testing::random_vector(f, n, rng);
    const Buffer back = dft_naive(dft_naive(a, plan), f, plan.omega_inv());
    const FieldElement scale = f.element(static_cast<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (back[i] != f.mul(scale, a[i])) return "naive composition at n=" + std::to_string(n);
    }
    Buffer buf = a;
    OpCounter ctr;
    dft_inplace(buf, plan, ctr);
    idft_inplace(buf, plan, ctr);
    if (buf != a) return "in-place round trip at n=" + std::to_string(n);
  }
  return {};
}

std::string tft_oracle_equivalence() {
  const SweepResult& r = full_sweep();
  if (r.oracle_mismatches != 0) return r.first_problem;
  if (r.millis >= 60000.0) return "sweep took " + std::to_string(r.millis) + " ms";
  return {};
}

std::string theorem_bound() {
  const SweepResult& r = full_sweep();
  if (r.bound_violations != 0) {
    return std::to_string(r.bound_violations) + " violations, first: " + r.first_problem;
  }
  return {};
}

std::string inverse_round_trip() {
  const SweepResult& r = full_sweep();
  if (r.round_trip_failures != 0) {
    return std::to_string(r.round_trip_failures) + " failures, first: " + r.first_problem;
  }
  const PrimeField f;
  const TransformPlan plan(f, 16);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Buffer a = testing::random_with_zero_tail(f, 16, 11, rng);
    Buffer buf = a;
    OpCounter ctr;
    tft_forward(buf, 11, plan, ctr);
    std::fill(buf.begin() + 11, buf.end(), f.zero());
    inv_tft(buf, 11, plan, ctr);
    if (buf != a) return "n=16 ell=11 trial " + std::to_string(trial);
  }
  return {};
}

struct SnapshotObserver {
  const std::vector<std::vector<FieldElement>>* grid;
  const Buffer* buf;
  std::size_t mismatches = 0;
  std::size_t checks = 0;
  void entered(const InvocationFrame&, unsigned) {}
  void produced(std::size_t k, unsigned stage) {
    ++checks;
    if ((*grid)[stage][k] != (*buf)[k]) ++mismatches;
  }
};

std::string row_snapshots() {
  const PrimeField f;
  std::mt19937_64 rng(8);
  for (std::size_t n = 2; n <= 64; n *= 2) {
    const TransformPlan plan(f, n);
    for (std::size_t ell = 1; ell <= n; ++ell) {
      const Buffer a = testing::random_with_zero_tail(f, n, ell, rng);
      const auto grid = testing::butterfly_grid(a, f, plan.omega());
      Buffer buf = a;
      OpCounter ctr;
      tft_forward(buf, ell, plan, ctr);
      std::fill(buf.begin() + static_cast<std::ptrdiff_t>(ell), buf.end(), f.zero());
      SnapshotObserver obs{&grid, &buf};
      inv_tft(buf, ell, plan, ctr, obs);
      if (obs.mismatches != 0 || obs.checks == 0) {
        return "n=" + std::to_string(n) + " ell=" + std::to_string(ell) + ": " +
               std::to_string(obs.mismatches) + " of " + std::to_string(obs.checks);
      }
    }
  }
  return {};
}

std::string polynomial_multiplication() {
  const PrimeField f;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> total(0, 1023 - 1);  // deg P + deg Q < 2^10
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = total(rng);
    const std::size_t dp = std::uniform_int_distribution<std::size_t>(0, d)(rng);
    auto pc = testing::random_vector(f, dp + 1, rng);
    auto qc = testing::random_vector(f, d - dp + 1, rng);
    pc.back() = qc.back() = f.one();
    const Polynomial p(pc), q(qc);
    if (multiply_tft(p, q, f) != multiply_schoolbook(p, q, f)) {
      return "pair " + std::to_string(trial) + " (deg " + std::to_string(dp) + ", " +
             std::to_string(d - dp) + ")";
    }
  }
  return {};
}

std::string half_length_savings() {
  const PrimeField f;
  const std::size_t n = 1024;
  const std::size_t ell = n / 2 + 1;
  const TransformPlan plan(f, n);
  std::mt19937_64 rng(10);
  Buffer buf = testing::random_with_zero_tail(f, n, ell, rng);
  Buffer full = buf;
  OpCounter tft_ops, dft_ops;
  tft_forward(buf, ell, plan, tft_ops);
  dft_inplace(full, plan, dft_ops);
  const double ratio =
      static_cast<double>(tft_ops.multiplications) / static_cast<double>(dft_ops.multiplications);
  std::printf("        (tft mul=%llu, dft mul=%llu, ratio=%.4f)\n",
              static_cast<unsigned long long>(tft_ops.multiplications),
              static_cast<unsigned long long>(dft_ops.multiplications), ratio);
  if (!(ratio <= 0.6)) return "ratio " + std::to_string(ratio) + " > 0.6";
  return {};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria = {
      {"bit-reversal golden values", bit_reversal_golden},
      {"Z/13 length-3 forward probes", worked_example_forward},
      {"Z/13 forward with inverse root is not an inverse", worked_example_not_self_inverse},
      {"inverse DFT identity and in-place round trip", inverse_dft_identity},
      {"TFT equals bit-reversed naive DFT prefix", tft_oracle_equivalence},
      {"TFT operation counts within ell*p + n bound", theorem_bound},
      {"inverse TFT round trip", inverse_round_trip},
      {"inverse TFT row snapshots (n <= 64)", row_snapshots},
      {"TFT multiplication equals schoolbook (200 pairs)", polynomial_multiplication},
      {"half-length multiplication savings <= 0.6", half_length_savings},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = Clock::now();
    std::string problem;
    try {
      problem = criteria[k].second();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double ms = millis_since(start);
    std::printf("[%s] %2zu %s (%.1f ms)%s%s\n", problem.empty() ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), ms, problem.empty() ? "" : ": ", problem.c_str());
    if (!problem.empty()) ++failures;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
