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

#ifndef TFT_PLAN_HPP_
#define TFT_PLAN_HPP_

#include <bit>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tft/error.hpp"
#include "tft/ring.hpp"

namespace tft {

/// Reverses the low `bits` bits of i. Requires i < 2^bits.
inline std::size_t bit_reverse(std::size_t i, unsigned bits) {
  detail::require(bits < 64 && (i >> bits) == 0,
                  "bit_reverse: " + std::to_string(i) + " does not fit in " +
                      std::to_string(bits) + " bits");
  std::size_t r = 0;
  for (unsigned b = 0; b < bits; ++b) {
    r = (r << 1) | (i & 1);
    i >>= 1;
  }
  return r;
}

/// Precomputed context for transforms of size n = 2^p over one field with
/// one fixed root of unity. Immutable after construction.
///
/// Stage s (1 <= s <= p) works on blocks of width m_s = 2^(p-s) and pairs
/// block i with block i+1 for every even i, using the twiddle
/// w^([i]_s * m_s). Since i is even its top reversed bit is zero, and
/// [i]_s * m_s = [i/2]_(s-1) * 2^(p-s) = [i/2]_(p-1). Every stage therefore
/// reads the same table, twiddles_[k] = w^([k]_(p-1)) for k < n/2, at
/// index k = i/2.
class TransformPlan {
 public:
  /// Uses the canonical root returned by find_primitive_root.
  TransformPlan(const PrimeField& field, std::size_t n)
      : TransformPlan(field, n, checked_root(field, n)) {}

  /// Uses a caller-chosen root, which must have exact order n.
  TransformPlan(const PrimeField& field, std::size_t n, FieldElement omega)
      : field_(field), n_(n), omega_(omega) {
    detail::require(std::has_single_bit(n) && n >= 2,
                    "transform size must be a power of two >= 2, got " + std::to_string(n));
    detail::require(omega.value() < field.modulus(), "root is not a canonical residue");
    detail::require(field.pow(omega, n / 2) == field.minus_one(),
                    "root " + std::to_string(omega.value()) + " does not have order " +
                        std::to_string(n));
    log_n_ = static_cast<unsigned>(std::countr_zero(n));
    omega_inv_ = field.inv(omega);

    const std::size_t half = n / 2;
    const unsigned table_bits = log_n_ - 1;
    std::vector<FieldElement> powers(half);
    std::vector<FieldElement> inv_powers(half);
    powers[0] = inv_powers[0] = field.one();
    for (std::size_t e = 1; e < half; ++e) {
      powers[e] = field.mul(powers[e - 1], omega_);
      inv_powers[e] = field.mul(inv_powers[e - 1], omega_inv_);
    }
    twiddles_.resize(half);
    inverse_twiddles_.resize(half);
    for (std::size_t k = 0; k < half; ++k) {
      const std::size_t e = bit_reverse(k, table_bits);
      twiddles_[k] = powers[e];
      inverse_twiddles_[k] = inv_powers[e];
    }
  }

  const PrimeField& field() const { return field_; }
  std::size_t size() const { return n_; }
  unsigned log_size() const { return log_n_; }
  FieldElement omega() const { return omega_; }
  FieldElement omega_inv() const { return omega_inv_; }

  /// m_s = 2^(p-s) for 0 <= s <= p.
  std::size_t width(unsigned s) const {
    detail::require(s <= log_n_, "stage " + std::to_string(s) + " out of range");
    return n_ >> s;
  }

  /// w^([i]_s * m_s) for stage s and even block index i < n / m_s.
  FieldElement stage_twiddle(unsigned s, std::size_t i) const {
    check_stage_block(s, i);
    return twiddles_[i / 2];
  }

  FieldElement stage_twiddle_inv(unsigned s, std::size_t i) const {
    check_stage_block(s, i);
    return inverse_twiddles_[i / 2];
  }

  /// Twiddle of the butterfly that owns buffer position k at a stage of
  /// width m; the block index is k quo m, rounded down to even.
  FieldElement twiddle_at(std::size_t k, std::size_t m) const { return twiddles_[k / m / 2]; }
  FieldElement twiddle_inv_at(std::size_t k, std::size_t m) const {
    return inverse_twiddles_[k / m / 2];
  }

  std::span<const FieldElement> twiddles() const { return twiddles_; }
  std::span<const FieldElement> inverse_twiddles() const { return inverse_twiddles_; }

 private:
  static FieldElement checked_root(const PrimeField& field, std::size_t n) {
    detail::require(std::has_single_bit(n) && n >= 2,
                    "transform size must be a power of two >= 2, got " + std::to_string(n));
    return find_primitive_root(field, n);
  }

  void check_stage_block(unsigned s, std::size_t i) const {
    detail::require(s >= 1 && s <= log_n_, "stage " + std::to_string(s) + " out of range");
    detail::require(i % 2 == 0 && i < (std::size_t{1} << s),
                    "block index " + std::to_string(i) + " invalid at stage " + std::to_string(s));
  }

  PrimeField field_;
  std::size_t n_ = 0;
  unsigned log_n_ = 0;
  FieldElement omega_;
  FieldElement omega_inv_;
  std::vector<FieldElement> twiddles_;
  std::vector<FieldElement> inverse_twiddles_;
};

inline TransformPlan make_plan(const PrimeField& field, std::size_t n) {
  return TransformPlan(field, n);
}

}  // namespace tft

#endif  // TFT_PLAN_HPP_
