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

#include <doctest.h>

#include "npgal/poly.hpp"
#include "test_support.hpp"

using namespace npgal;
using npgal::testing::nonzero_rational;
using npgal::testing::random_poly;
using npgal::testing::uniform;

namespace {

Polynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

Polynomial random_rational_poly(long degree) {
  std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = make_rational(uniform(-9, 9), uniform(1, 5));
  c.back() = nonzero_rational(9);
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("rational text parsing") {
  CHECK(parse_rational("5/3") == Rational(5, 3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("+7")) == "7");
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("poly_from_coeffs strips trailing zeros") {
  const auto f = poly_from_coeffs({2, -4, 1});
  CHECK(f.degree() == 2);
  CHECK(f.coeff(0) == 2);
  CHECK(f.coeff(1) == -4);
  CHECK(f.leading() == 1);

  CHECK(poly_from_coeffs({}).is_zero());
  CHECK(poly_from_coeffs({}).degree() == -1);

  const auto c = poly_from_coeffs({Rational(1, 2), 0, 0});
  CHECK(c.degree() == 0);
  CHECK(c.coeff(0) == Rational(1, 2));
}

TEST_CASE("polynomial text round trip") {
  CHECK(render_polynomial(parse_polynomial("2,-4,1")) == "2,-4,1");
  CHECK(render_polynomial(parse_polynomial("1/2, 0, -6/4")) == "1/2,0,-3/2");
  CHECK(parse_polynomial("0").is_zero());
  CHECK(render_polynomial(Polynomial()) == "0");
  CHECK(parse_polynomial("3,0,0") == P({3}));
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1,2,"), ParseError);

  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_rational_poly(uniform(0, 8));
    CHECK(parse_polynomial(render_polynomial(f)) == f);
  }
}

TEST_CASE("shift") {
  const auto f = P({2, -4, 1});
  CHECK(shift(f, 0) == f);
  CHECK(shift(P({0, 0, 1}), 1) == P({1, -2, 1}));
  CHECK(shift(f, -2) == P({-2, 0, 1}));
  CHECK_THROWS_AS(shift(Polynomial(), 1), DomainError);

  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_rational_poly(uniform(0, 9));
    const Rational mu = make_rational(uniform(-7, 7), uniform(1, 4));
    const auto h = shift(g, mu);
    CHECK(h.degree() == g.degree());
    CHECK(shift(h, -mu) == g);
    const Rational x = make_rational(uniform(-5, 5), uniform(1, 3));
    CHECK(h.evaluate(x) == g.evaluate(x - mu));
  }
}

TEST_CASE("primitive_scale") {
  const auto a = primitive_scale(poly_from_coeffs({1, -2, Rational(1, 2)}));
  CHECK(a.primitive.coeffs == std::vector<Integer>{2, -4, 1});
  CHECK(a.scalar == Rational(1, 2));

  const auto b = primitive_scale(P({2, -4, 1}));
  CHECK(b.primitive.coeffs == std::vector<Integer>{2, -4, 1});
  CHECK(b.scalar == 1);

  const auto c = primitive_scale(P({6, -3}));
  CHECK(c.primitive.coeffs == std::vector<Integer>{-2, 1});
  CHECK(c.scalar == -3);

  CHECK_THROWS_AS(primitive_scale(Polynomial()), DomainError);

  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_rational_poly(uniform(0, 8));
    const auto s = primitive_scale(f);
    CHECK(s.scalar * s.primitive.to_rational() == f);
    CHECK(s.primitive.coeffs.back() > 0);
    Integer content = 0;
    for (const auto& z : s.primitive.coeffs) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    CHECK(content == 1);
  }
}

TEST_CASE("strip_x_powers") {
  const auto s = strip_x_powers(P({0, 0, 3, 1}));
  CHECK(s.multiplicity == 2);
  CHECK(s.remainder == P({3, 1}));
  CHECK(strip_x_powers(P({1, 1})).multiplicity == 0);
}

TEST_CASE("bareiss determinant against rational elimination") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(1, 7));
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        // sparse entries exercise the pivoting path
        const long v = uniform(0, 3) == 0 ? 0 : uniform(-20, 20);
        m[i][j] = v;
        q[i][j] = v;
      }
    }
    CHECK(Rational(bareiss_determinant(m)) == testing::rational_determinant(q));
  }
  CHECK(bareiss_determinant({}) == 1);
}

TEST_CASE("resultant") {
  CHECK(resultant(P({-3, 1}), P({-1, 1})) == 2);
  CHECK(resultant(P({1, 0, 1}), P({0, 1})) == 1);
  // Direct 3x3 Sylvester determinant: rows [1,-4,2], [2,-4,0], [0,2,-4].
  const auto oracle = testing::rational_determinant({{1, -4, 2}, {2, -4, 0}, {0, 2, -4}});
  CHECK(oracle == -8);
  CHECK(resultant(P({2, -4, 1}), P({-4, 2})) == oracle);

  CHECK(resultant(P({5}), P({1, 2, 3})) == 25);
  CHECK(resultant(P({1, 2, 3}), P({5})) == 25);
  CHECK(resultant(P({5}), P({7})) == 1);
  CHECK_THROWS_AS(resultant(Polynomial(), P({1})), DomainError);

  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_rational_poly(uniform(1, 5));
    const auto g = random_rational_poly(uniform(1, 5));
    const Rational r = resultant(f, g);
    CHECK(r == testing::sylvester_resultant(f, g));
    const long sign = (f.degree() * g.degree()) % 2 == 0 ? 1 : -1;
    CHECK(r == sign * resultant(g, f));
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(P({2, -4, 1})) == 8);
  CHECK(discriminant(P({1, 0, 1})) == -4);
  CHECK(discriminant(P({6, 18, 9, 1})) == 1944);
  CHECK(discriminant(P({3, 5})) == 1);
  CHECK_THROWS_AS(discriminant(P({4})), DomainError);
  CHECK_THROWS_AS(discriminant(Polynomial()), DomainError);

  for (int trial = 0; trial < 100; ++trial) {
    // quadratic: b^2 - 4ac
    const Rational a = nonzero_rational(9), b = make_rational(uniform(-9, 9), uniform(1, 4)),
                   c = make_rational(uniform(-9, 9), uniform(1, 4));
    CHECK(discriminant(Polynomial({c, b, a})) == b * b - 4 * a * c);
    // depressed cubic: -4p^3 - 27q^2
    const Rational p = make_rational(uniform(-9, 9), uniform(1, 4)), q = make_rational(uniform(-9, 9), uniform(1, 4));
    CHECK(discriminant(Polynomial({q, p, 0, 1})) == -4 * p * p * p - 27 * q * q);
  }

  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_rational_poly(uniform(1, 7));
    const Rational mu = make_rational(uniform(-6, 6), uniform(1, 3));
    CHECK(discriminant(shift(f, mu)) == discriminant(f));
  }
}

TEST_CASE("arithmetic helpers") {
  const auto f = P({1, 1});
  const auto g = P({-1, 1});
  CHECK(f * g == P({-1, 0, 1}));
  CHECK(f + g == P({0, 2}));
  CHECK((f - f).is_zero());
  CHECK(P({1, 2, 3}).derivative() == P({2, 6}));
  CHECK(scale_argument(P({1, 1, 1}), 2) == P({1, 2, 4}));
  CHECK(random_poly(4, 10).degree() == 4);
}
