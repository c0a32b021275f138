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

#ifndef TFT_COEFFICIENT_FILE_HPP_
#define TFT_COEFFICIENT_FILE_HPP_

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tft/error.hpp"
#include "tft/ring.hpp"

namespace tft {

// Text format, '#' starts a comment line:
//
//   modulus <P>
//   n <power of two>          (optional)
//   <residue> <residue> ...   (whitespace separated, lowest degree first)
//
// Residues may be negative or exceed P; they are reduced on load.
struct CoefficientFile {
  std::uint64_t modulus = PrimeField::kDefaultModulus;
  std::optional<std::size_t> n;
  std::vector<FieldElement> values;

  /// The declared n, or the smallest power of two >= max(2, #values).
  std::size_t transform_size() const {
    return n.value_or(std::bit_ceil(std::max<std::size_t>(2, values.size())));
  }

  friend bool operator==(const CoefficientFile&, const CoefficientFile&) = default;
};

namespace detail {

template <class T>
T parse_unsigned(std::string_view token, const std::string& what) {
  T out{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  require(ec == std::errc() && ptr == token.data() + token.size(),
          "invalid " + what + " '" + std::string(token) + "'");
  return out;
}

inline FieldElement parse_residue(std::string_view token, const PrimeField& f) {
  const bool negative = !token.empty() && token.front() == '-';
  if (negative) token.remove_prefix(1);
  const auto magnitude = parse_unsigned<std::uint64_t>(token, "residue");
  const FieldElement r = f.element(magnitude);
  return negative ? f.neg(r) : r;
}

}  // namespace detail

inline CoefficientFile read_coefficient_file(std::istream& in) {
  CoefficientFile file;
  std::optional<PrimeField> field;
  std::string line;
  std::size_t line_no = 0;
  bool expect_n = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string first;
    if (!(words >> first) || first.front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (!field) {
      std::string value, extra;
      detail::require(first == "modulus" && (words >> value) && !(words >> extra),
                      where + "expected 'modulus <P>'");
      file.modulus = detail::parse_unsigned<std::uint64_t>(value, "modulus");
      field.emplace(file.modulus);
      expect_n = true;
      continue;
    }
    if (expect_n) {
      expect_n = false;
      if (first == "n") {
        std::string value, extra;
        detail::require((words >> value) && !(words >> extra), where + "expected 'n <size>'");
        const auto n = detail::parse_unsigned<std::size_t>(value, "transform size");
        detail::require(std::has_single_bit(n) && n >= 2,
                        where + "n must be a power of two >= 2, got " + value);
        file.n = n;
        continue;
      }
    }
    std::string token = first;
    do {
      try {
        file.values.push_back(detail::parse_residue(token, *field));
      } catch (const ContractError& e) {
        throw ContractError(where + e.what());
      }
    } while (words >> token);
  }
  detail::require(field.has_value(), "missing 'modulus <P>' header");
  detail::require(!file.n || file.values.size() <= *file.n,
                  std::to_string(file.values.size()) + " values do not fit in n = " +
                      std::to_string(file.n.value_or(0)));
  return file;
}

inline CoefficientFile load_coefficient_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  detail::require(in.good(), "cannot open " + path.string());
  try {
    return read_coefficient_file(in);
  } catch (const ContractError& e) {
    throw ContractError(path.string() + ": " + e.what());
  }
}

inline void write_coefficient_file(std::ostream& out, const CoefficientFile& file) {
  out << "modulus " << file.modulus << '\n';
  if (file.n) out << "n " << *file.n << '\n';
  for (std::size_t k = 0; k < file.values.size(); ++k) {
    out << (k == 0 ? "" : " ") << file.values[k].value();
  }
  out << '\n';
}

}  // namespace tft

#endif  // TFT_COEFFICIENT_FILE_HPP_
