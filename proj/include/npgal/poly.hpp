// Copyright 2026 The npgal Authors
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

#ifndef NPGAL_POLY_HPP
#define NPGAL_POLY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "npgal/exact.hpp"

namespace npgal {

/// Dense univariate polynomial over Q. Coefficient j multiplies x^j.
/// Trailing zeros are stripped on construction, so the zero polynomial is
/// the empty coefficient vector and degree() == -1 for it.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(const Rational& c, std::size_t power);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of x^j; zero beyond the degree.
  Rational coeff(std::size_t j) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  Polynomial derivative() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& f);

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

/// Integer polynomial with content 1 and positive leading coefficient.
struct IntegerPolynomial {
  std::vector<Integer> coeffs;

  long degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }
  Polynomial to_rational() const;
  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;
};

struct PrimitiveScaling {
  IntegerPolynomial primitive;
  Rational scalar;  // f = scalar * primitive
};

/// f = x^multiplicity * remainder with remainder(0) != 0.
struct XPowerSplit {
  std::size_t multiplicity = 0;
  Polynomial remainder;
};

Polynomial poly_from_coeffs(std::vector<Rational> coeffs);

/// g(x) = f(x - mu), by repeated synthetic division.
Polynomial shift(const Polynomial& f, const Rational& mu);

/// g(x) = f(c x).
Polynomial scale_argument(const Polynomial& f, const Rational& c);

PrimitiveScaling primitive_scale(const Polynomial& f);

XPowerSplit strip_x_powers(const Polynomial& f);

/// Sylvester resultant. Degree-0 arguments follow the usual convention
/// Res(f, c) = c^deg f.
Rational resultant(const Polynomial& f, const Polynomial& g);

/// (-1)^(n(n-1)/2) Res(f, f') / a_n.
Rational discriminant(const Polynomial& f);

/// Determinant of a square integer matrix by fraction-free elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

/// Comma-separated ascending coefficients, e.g. "2,-4,1" for x^2 - 4x + 2.
/// The zero polynomial renders as "0".
Polynomial parse_polynomial(std::string_view text);
std::string render_polynomial(const Polynomial& f);

}  // namespace npgal

#endif  // NPGAL_POLY_HPP
