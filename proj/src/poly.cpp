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

#include "npgal/poly.hpp"

#include <algorithm>
#include <utility>

namespace npgal {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  strip();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : Rational(0);
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = coeffs_[j] * static_cast<unsigned long>(j);
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(j) + b.coeff(j);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(j) - b.coeff(j);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& k, const Polynomial& f) {
  std::vector<Rational> c = f.coeffs_;
  for (auto& x : c) x *= k;
  return Polynomial(std::move(c));
}

Polynomial IntegerPolynomial::to_rational() const {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& z : coeffs) c.emplace_back(z);
  return Polynomial(std::move(c));
}

Polynomial poly_from_coeffs(std::vector<Rational> coeffs) { return Polynomial(std::move(coeffs)); }

Polynomial shift(const Polynomial& f, const Rational& mu) {
  if (f.is_zero()) throw DomainError("shift of the zero polynomial");
  std::vector<Rational> a = f.coefficients();
  const Rational c = -mu;
  if (c == 0) return f;
  const std::size_t n = a.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n; j-- > i;) a[j] += c * a[j + 1];
  }
  return Polynomial(std::move(a));
}

Polynomial scale_argument(const Polynomial& f, const Rational& c) {
  std::vector<Rational> a = f.coefficients();
  Rational power = 1;
  for (auto& x : a) {
    x *= power;
    power *= c;
  }
  return Polynomial(std::move(a));
}

PrimitiveScaling primitive_scale(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("primitive scaling of the zero polynomial");
  Integer den_lcm = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());

  std::vector<Integer> ints;
  ints.reserve(f.coefficients().size());
  Integer content = 0;
  for (const auto& c : f.coefficients()) {
    Integer z = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    ints.push_back(std::move(z));
  }
  if (ints.back() < 0) content = -content;
  for (auto& z : ints) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
  return {IntegerPolynomial{std::move(ints)}, make_rational(content, den_lcm)};
}

XPowerSplit strip_x_powers(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("cannot strip x-powers from the zero polynomial");
  const auto& c = f.coefficients();
  std::size_t k = 0;
  while (c[k] == 0) ++k;
  return {k, Polynomial(std::vector<Rational>(c.begin() + static_cast<long>(k), c.end()))};
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

// Rows: deg g shifted copies of f, then deg f shifted copies of g, with
// coefficients in descending order.
std::vector<std::vector<Integer>> sylvester(const IntegerPolynomial& f, const IntegerPolynomial& g) {
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;
  std::vector<std::vector<Integer>> rows(size, std::vector<Integer>(size));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) rows[r][r + k] = f.coeffs[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) rows[n + r][r + k] = g.coeffs[n - k];
  }
  return rows;
}

}  // namespace

Rational resultant(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant with the zero polynomial");
  const auto fs = primitive_scale(f);
  const auto gs = primitive_scale(g);
  const auto m = static_cast<unsigned long>(f.degree());
  const auto n = static_cast<unsigned long>(g.degree());
  Rational scale;
  Rational a, b;
  mpz_pow_ui(a.get_num_mpz_t(), fs.scalar.get_num_mpz_t(), n);
  mpz_pow_ui(a.get_den_mpz_t(), fs.scalar.get_den_mpz_t(), n);
  mpz_pow_ui(b.get_num_mpz_t(), gs.scalar.get_num_mpz_t(), m);
  mpz_pow_ui(b.get_den_mpz_t(), gs.scalar.get_den_mpz_t(), m);
  a.canonicalize();
  b.canonicalize();
  scale = a * b;
  return scale * Rational(bareiss_determinant(sylvester(fs.primitive, gs.primitive)));
}

Rational discriminant(const Polynomial& f) {
  if (f.degree() < 1) throw DomainError("discriminant requires degree >= 1");
  const auto n = static_cast<unsigned long>(f.degree());
  Rational d = resultant(f, f.derivative()) / f.leading();
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

Polynomial parse_polynomial(std::string_view text) {
  if (text.empty()) throw ParseError("empty polynomial text");
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) throw ParseError("empty coefficient in '" + std::string(text) + "'");
    coeffs.push_back(parse_rational(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

std::string render_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& c : f.coefficients()) {
    if (!out.empty()) out += ',';
    out += to_string(c);
  }
  return out;
}

}  // namespace npgal
