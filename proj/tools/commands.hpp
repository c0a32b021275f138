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

#ifndef TFT_TOOLS_COMMANDS_HPP_
#define TFT_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "tft/tft.hpp"

// Implementations of the tft_cli subcommands. Each writes its primary
// result to `out` and human-oriented statistics to `report`, and returns a
// process exit code. ContractError / InvariantError propagate to the caller.
namespace tft::cli {

enum ExitCode : int { kOk = 0, kContractViolation = 1, kInvariantFailure = 2 };

namespace detail {

inline Buffer padded_values(const CoefficientFile& in, std::size_t n) {
  Buffer buf(n);
  std::copy(in.values.begin(), in.values.end(), buf.begin());
  return buf;
}

inline std::size_t resolve_ell(const CoefficientFile& in, std::optional<std::size_t> ell,
                               std::size_t n) {
  const std::size_t out = ell.value_or(in.values.size());
  tft::detail::require(out >= 1 && out <= n, "ell = " + std::to_string(out) +
                                                 " must lie in [1, " + std::to_string(n) + "]");
  return out;
}

inline void print_ops(std::ostream& report, const OpCounter& ctr) {
  report << "ops: add=" << ctr.additions << " mul=" << ctr.multiplications << '\n';
}

}  // namespace detail

inline int run_tft(const CoefficientFile& in, std::optional<std::size_t> ell_opt,
                   std::ostream& out, std::ostream& report) {
  const PrimeField field(in.modulus);
  const std::size_t n = in.transform_size();
  const std::size_t ell = detail::resolve_ell(in, ell_opt, n);
  const TransformPlan plan(field, n);
  Buffer buf = detail::padded_values(in, n);
  OpCounter ctr;
  tft_forward(buf, ell, plan, ctr);
  buf.resize(ell);
  write_coefficient_file(out, {in.modulus, n, buf});

  const CostBound bound = tft_cost_bound(n, ell);
  report << "tft n=" << n << " ell=" << ell << " omega=" << plan.omega().value() << '\n';
  detail::print_ops(report, ctr);
  report << "bound: add<=" << bound.additions << " mul<=" << bound.multiplications << '\n';
  return kOk;
}

inline int run_invtft(const CoefficientFile& in, std::optional<std::size_t> ell_opt,
                      std::ostream& out, std::ostream& report) {
  const PrimeField field(in.modulus);
  const std::size_t n = in.transform_size();
  const std::size_t ell = detail::resolve_ell(in, ell_opt, n);
  const TransformPlan plan(field, n);
  Buffer buf = detail::padded_values(in, n);
  OpCounter ctr;
  inv_tft(buf, ell, plan, ctr);
  buf.resize(ell);
  write_coefficient_file(out, {in.modulus, n, buf});

  report << "invtft n=" << n << " ell=" << ell << " omega=" << plan.omega().value() << '\n';
  detail::print_ops(report, ctr);
  return kOk;
}

inline int run_mul(const CoefficientFile& a, const CoefficientFile& b, bool verify,
                   std::ostream& out, std::ostream& report) {
  tft::detail::require(a.modulus == b.modulus, "operands use different moduli (" +
                                                   std::to_string(a.modulus) + " vs " +
                                                   std::to_string(b.modulus) + ")");
  const PrimeField field(a.modulus);
  const Polynomial pa(a.values);
  const Polynomial pb(b.values);
  OpCounter ctr;
  const Polynomial product = multiply_tft(pa, pb, field, &ctr);

  CoefficientFile result{a.modulus, std::nullopt, product.coeffs()};
  if (result.values.empty()) result.values.push_back(field.zero());
  write_coefficient_file(out, result);

  report << "mul length=" << product.coeffs().size() << '\n';
  detail::print_ops(report, ctr);
  if (verify) {
    const bool ok = product == multiply_schoolbook(pa, pb, field);
    report << "verify: " << (ok ? "ok" : "MISMATCH") << '\n';
    if (!ok) return kInvariantFailure;
  }
  return kOk;
}

struct SweepOptions {
  std::size_t n = 16;
  std::uint64_t seed = 1;
  std::uint64_t modulus = PrimeField::kDefaultModulus;
  std::optional<std::size_t> inject_failure;  // corrupt the round trip at this ell
};

/// Forward + inverse TFT on random data for every ell in [1, n], checking
/// the round trip and the operation-count bound.
inline int run_sweep(const SweepOptions& opt, std::ostream& out) {
  const PrimeField field(opt.modulus);
  const TransformPlan plan(field, opt.n);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint64_t> residue(0, field.modulus() - 1);

  out << "sweep n=" << opt.n << " modulus=" << opt.modulus << " seed=" << opt.seed << '\n';
  out << std::left << std::setw(8) << "ell" << std::setw(10) << "adds" << std::setw(11)
      << "add-bound" << std::setw(10) << "muls" << std::setw(11) << "mul-bound"
      << "status\n";
  std::size_t passed = 0;
  for (std::size_t ell = 1; ell <= opt.n; ++ell) {
    Buffer a(opt.n, field.zero());
    for (std::size_t k = 0; k < ell; ++k) a[k] = FieldElement(residue(rng));
    Buffer buf = a;
    OpCounter fwd;
    tft_forward(buf, ell, plan, fwd);
    std::fill(buf.begin() + static_cast<std::ptrdiff_t>(ell), buf.end(), field.zero());
    if (opt.inject_failure == ell) buf[0] = field.add(buf[0], field.one());
    OpCounter inv;
    inv_tft(buf, ell, plan, inv);

    const CostBound bound = tft_cost_bound(opt.n, ell);
    std::string status = "ok";
    if (buf != a) {
      status = "FAIL round-trip";
    } else if (fwd.additions > bound.additions || fwd.multiplications > bound.multiplications) {
      status = "FAIL bound";
    } else {
      ++passed;
    }
    out << std::setw(8) << ell << std::setw(10) << fwd.additions << std::setw(11)
        << bound.additions << std::setw(10) << fwd.multiplications << std::setw(11)
        << bound.multiplications << status << '\n';
  }
  out << "summary: " << passed << "/" << opt.n << " passed\n";
  return passed == opt.n ? kOk : kInvariantFailure;
}

inline int run_schedule(std::size_t n, std::optional<std::size_t> ell, ScheduleMode mode,
                        std::ostream& out) {
  out << render_schedule(trace_schedule(n, ell.value_or(n), mode));
  return kOk;
}

}  // namespace tft::cli

#endif  // TFT_TOOLS_COMMANDS_HPP_
