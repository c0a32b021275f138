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

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

// Runs `body` against stdout or the file named by `path`.
template <class Body>
int with_output(const std::string& path, Body&& body) {
  if (path.empty()) return body(std::cout);
  std::ofstream file(path);
  if (!file) throw tft::ContractError("cannot write " + path);
  return body(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated Fourier transform toolkit"};
  app.require_subcommand(1);

  std::string input, input_b, output;
  std::optional<std::size_t> ell;
  bool verify = false;
  tft::cli::SweepOptions sweep;
  std::size_t sched_n = 16;
  tft::ScheduleMode sched_mode = tft::ScheduleMode::kTft;
  const std::map<std::string, tft::ScheduleMode> modes{{"dft", tft::ScheduleMode::kDft},
                                                       {"tft", tft::ScheduleMode::kTft}};

  auto* tft_cmd = app.add_subcommand("tft", "forward truncated transform of a coefficient file");
  tft_cmd->add_option("input", input, "coefficient file")->required()->check(CLI::ExistingFile);
  tft_cmd->add_option("--ell", ell, "number of outputs (default: number of input values)");
  tft_cmd->add_option("-o,--output", output, "output file (default: stdout)");

  auto* inv_cmd = app.add_subcommand("invtft", "inverse truncated transform");
  inv_cmd->add_option("input", input, "coefficient file")->required()->check(CLI::ExistingFile);
  inv_cmd->add_option("--ell", ell, "number of known values (default: number of input values)");
  inv_cmd->add_option("-o,--output", output, "output file (default: stdout)");

  auto* mul_cmd = app.add_subcommand("mul", "multiply two polynomials");
  mul_cmd->add_option("a", input, "first factor")->required()->check(CLI::ExistingFile);
  mul_cmd->add_option("b", input_b, "second factor")->required()->check(CLI::ExistingFile);
  mul_cmd->add_flag("--verify", verify, "cross-check against schoolbook multiplication");
  mul_cmd->add_option("-o,--output", output, "output file (default: stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "round-trip and cost check for every ell");
  sweep_cmd->add_option("--n", sweep.n, "transform size")->required();
  sweep_cmd->add_option("--seed", sweep.seed, "random seed")->capture_default_str();
  sweep_cmd->add_option("--modulus", sweep.modulus, "prime modulus")->capture_default_str();
  sweep_cmd->add_option("--inject-failure", sweep.inject_failure,
                        "corrupt the round trip at this ell (reporter self-test)");

  auto* sched_cmd = app.add_subcommand("schedule", "text diagram of executed butterflies");
  sched_cmd->add_option("--n", sched_n, "transform size")->required();
  sched_cmd->add_option("--ell", ell, "truncation length (default: n)");
  sched_cmd->add_option("--mode", sched_mode, "dft or tft")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? tft::cli::kOk : tft::cli::kContractViolation;
  }

  try {
    if (*tft_cmd) {
      const auto in = tft::load_coefficient_file(input);
      return with_output(output, [&](std::ostream& out) {
        return tft::cli::run_tft(in, ell, out, std::cerr);
      });
    }
    if (*inv_cmd) {
      const auto in = tft::load_coefficient_file(input);
      return with_output(output, [&](std::ostream& out) {
        return tft::cli::run_invtft(in, ell, out, std::cerr);
      });
    }
    if (*mul_cmd) {
      const auto a = tft::load_coefficient_file(input);
      const auto b = tft::load_coefficient_file(input_b);
      return with_output(output, [&](std::ostream& out) {
        return tft::cli::run_mul(a, b, verify, out, std::cerr);
      });
    }
    if (*sweep_cmd) return tft::cli::run_sweep(sweep, std::cout);
    if (*sched_cmd) return tft::cli::run_schedule(sched_n, ell, sched_mode, std::cout);
  } catch (const tft::ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return tft::cli::kContractViolation;
  } catch (const tft::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return tft::cli::kInvariantFailure;
  }
  return tft::cli::kOk;
}
