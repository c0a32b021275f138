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

#ifndef TFT_POLYMUL_HPP_
#define TFT_POLYMUL_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tft/butterfly.hpp"
#include "tft/error.hpp"
#include "tft/inverse_truncated.hpp"
#include "tft/plan.hpp"
#include "tft/ring.hpp"
#include "tft/transform.hpp"
#include "tft/truncated.hpp"

namespace tft {

/// Dense polynomial a_0 + a_1 x + ..., lowest degree first. Trailing zeros
/// are allowed and ignored by degree() and equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<FieldElement>& coeffs() const { return coeffs_; }

  /// Index of the last nonzero coefficient; empty for the zero polynomial.
  std::optional<std::size_t> degree() const {
    for (std::size_t k = coeffs_.size(); k > 0; --k) {
      if (coeffs_[k - 1].value() != 0) return k - 1;
    }
    return std::nullopt;
  }

  bool is_zero() const { return !degree().has_value(); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    const std::size_t la = a.degree() ? *a.degree() + 1 : 0;
    const std::size_t lb = b.degree() ? *b.degree() + 1 : 0;
    return la == lb && std::equal(a.coeffs_.begin(), a.coeffs_.begin() + la, b.coeffs_.begin());
  }

 private:
  std::vector<FieldElement> coeffs_;
};

inline Polynomial add(const Polynomial& a, const Polynomial& b, const PrimeField& f) {
  std::vector<FieldElement> out(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) out[k] = a.coeffs()[k];
  for (std::size_t k = 0; k < b.coeffs().size(); ++k) out[k] = f.add(out[k], b.coeffs()[k]);
  return Polynomial(std::move(out));
}

inline Polynomial multiply_schoolbook(const Polynomial& a, const Polynomial& b,
                                      const PrimeField& f) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (!da || !db) return {};
  std::vector<FieldElement> out(*da + *db + 1, f.zero());
  for (std::size_t i = 0; i <= *da; ++i) {
    for (std::size_t j = 0; j <= *db; ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return Polynomial(std::move(out));
}

namespace detail {

struct ProductShape {
  std::size_t length;  // deg a + deg b + 1
  std::size_t n;       // transform size
};

inline std::optional<ProductShape> product_shape(const Polynomial& a, const Polynomial& b,
                                                 const PrimeField& f) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (!da || !db) return std::nullopt;
  const std::size_t length = *da + *db + 1;
  const std::size_t n = std::max<std::size_t>(2, std::bit_ceil(length));
  require(std::countr_zero(n) <= static_cast<int>(f.max_log2_order()),
          "product of length " + std::to_string(length) + " needs a transform of size " +
              std::to_string(n) + ", beyond what modulus " + std::to_string(f.modulus()) +
              " supports");
  return ProductShape{length, n};
}

inline Buffer padded(const Polynomial& a, std::size_t n, const PrimeField& f) {
  Buffer buf(n, f.zero());
  const std::size_t len = a.degree() ? *a.degree() + 1 : 0;
  std::copy(a.coeffs().begin(), a.coeffs().begin() + len, buf.begin());
  return buf;
}

}  // namespace detail

/// Product via the truncated transform. With ell = deg a + deg b + 1 and n
/// the next power of two, both operands are transformed to their first ell
/// bit-reversed evaluations, multiplied pointwise, and the product
/// (which has exactly ell coefficients) is recovered by inv_tft from those
/// evaluations plus a zero tail.
inline Polynomial multiply_tft(const Polynomial& a, const Polynomial& b, const PrimeField& f,
                               OpCounter* counter = nullptr) {
  const auto shape = detail::product_shape(a, b, f);
  if (!shape) return {};
  const TransformPlan plan(f, shape->n);
  OpCounter local;
  OpCounter& ctr = counter ? *counter : local;

  Buffer x = detail::padded(a, shape->n, f);
  Buffer y = detail::padded(b, shape->n, f);
  tft_forward(x, shape->length, plan, ctr);
  tft_forward(y, shape->length, plan, ctr);
  for (std::size_t k = 0; k < shape->length; ++k) x[k] = f.mul(x[k], y[k]);
  ctr.multiplications += shape->length;
  std::fill(x.begin() + static_cast<std::ptrdiff_t>(shape->length), x.end(), f.zero());
  inv_tft(x, shape->length, plan, ctr);
  x.resize(shape->length);
  return Polynomial(std::move(x));
}

/// Same product through full padded transforms of size n, for comparison.
inline Polynomial multiply_dft(const Polynomial& a, const Polynomial& b, const PrimeField& f,
                               OpCounter* counter = nullptr) {
  const auto shape = detail::product_shape(a, b, f);
  if (!shape) return {};
  const TransformPlan plan(f, shape->n);
  OpCounter local;
  OpCounter& ctr = counter ? *counter : local;

  Buffer x = detail::padded(a, shape->n, f);
  Buffer y = detail::padded(b, shape->n, f);
  dft_inplace(x, plan, ctr);
  dft_inplace(y, plan, ctr);
  for (std::size_t k = 0; k < shape->n; ++k) x[k] = f.mul(x[k], y[k]);
  ctr.multiplications += shape->n;
  idft_inplace(x, plan, ctr);
  x.resize(shape->length);
  return Polynomial(std::move(x));
}

}  // namespace tft

#endif  // TFT_POLYMUL_HPP_
