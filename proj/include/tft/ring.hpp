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

#ifndef TFT_RING_HPP_
#define TFT_RING_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <string>

#include "tft/error.hpp"

namespace tft {

/// A residue modulo the prime of some PrimeField, always held in canonical
/// form [0, P). The element does not carry its modulus; arithmetic goes
/// through the owning PrimeField.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint64_t canonical) : value_(canonical) {}

  constexpr std::uint64_t value() const { return value_; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint64_t value_ = 0;
};

/// Z/PZ for an odd prime P < 2^32, so every product of two residues fits in
/// 64 bits before reduction.
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultModulus = 2013265921;  // 15 * 2^27 + 1

  explicit PrimeField(std::uint64_t modulus = kDefaultModulus) : modulus_(modulus) {
    detail::require(modulus > 2 && modulus < (std::uint64_t{1} << 32),
                    "modulus must be an odd prime below 2^32, got " + std::to_string(modulus));
    detail::require(is_prime(modulus), "modulus " + std::to_string(modulus) + " is not prime");
    two_inv_ = FieldElement((modulus + 1) / 2);
  }

  std::uint64_t modulus() const { return modulus_; }
  FieldElement two_inv() const { return two_inv_; }

  /// Largest p such that 2^p divides P - 1, i.e. the largest supported
  /// power-of-two transform is 2^max_log2_order().
  unsigned max_log2_order() const { return static_cast<unsigned>(std::countr_zero(modulus_ - 1)); }

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }
  FieldElement minus_one() const { return FieldElement(modulus_ - 1); }

  FieldElement element(std::uint64_t v) const { return FieldElement(v % modulus_); }
  FieldElement element(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(modulus_);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return FieldElement(static_cast<std::uint64_t>(r));
  }
  FieldElement element(int v) const { return element(static_cast<std::int64_t>(v)); }

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint64_t r = a.value() + b.value();
    if (r >= modulus_) r -= modulus_;
    return FieldElement(r);
  }

  FieldElement sub(FieldElement a, FieldElement b) const {
    return FieldElement(a.value() >= b.value() ? a.value() - b.value()
                                               : a.value() + modulus_ - b.value());
  }

  FieldElement neg(FieldElement a) const {
    return FieldElement(a.value() == 0 ? 0 : modulus_ - a.value());
  }

  FieldElement mul(FieldElement a, FieldElement b) const {
    return FieldElement((a.value() * b.value()) % modulus_);
  }

  FieldElement pow(FieldElement base, std::uint64_t exponent) const {
    FieldElement result = one();
    while (exponent != 0) {
      if (exponent & 1) result = mul(result, base);
      base = mul(base, base);
      exponent >>= 1;
    }
    return result;
  }

  /// Fermat inverse a^(P-2). Throws ContractError for a = 0.
  FieldElement inv(FieldElement a) const {
    detail::require(a.value() != 0, "inverse of zero is undefined");
    return pow(a, modulus_ - 2);
  }

  /// a / 2.
  FieldElement half(FieldElement a) const { return mul(a, two_inv_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.modulus_ == b.modulus_;
  }

 private:
  static bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint64_t d = 3; d * d <= m; d += 2) {
      if (m % d == 0) return false;
    }
    return true;
  }

  std::uint64_t modulus_;
  FieldElement two_inv_;
};

/// Returns an element of exact multiplicative order n (n a power of two,
/// n >= 2, n | P - 1). Among all such elements the numerically smallest
/// residue is chosen, so the result is canonical: P = 13, n = 4 gives 5.
///
/// Cost is O(n) multiplications: one element w0 of order n is located by
/// raising candidates g = 2, 3, ... to (P - 1) / n, then every other element
/// of order n is an odd power of w0.
inline FieldElement find_primitive_root(const PrimeField& field, std::uint64_t n) {
  detail::require(std::has_single_bit(n) && n >= 2,
                  "root order must be a power of two >= 2, got " + std::to_string(n));
  const std::uint64_t p_minus_1 = field.modulus() - 1;
  detail::require(p_minus_1 % n == 0, "no element of order " + std::to_string(n) + " modulo " +
                                          std::to_string(field.modulus()));

  FieldElement w0;
  for (std::uint64_t g = 2;; ++g) {
    FieldElement w = field.pow(field.element(g), p_minus_1 / n);
    if (field.pow(w, n / 2) == field.minus_one()) {
      w0 = w;
      break;
    }
  }

  FieldElement best = w0;
  FieldElement current = w0;
  const FieldElement step = field.mul(w0, w0);
  for (std::uint64_t k = 1; k < n / 2; ++k) {
    current = field.mul(current, step);
    if (current < best) best = current;
  }
  return best;
}

}  // namespace tft

#endif  // TFT_RING_HPP_
