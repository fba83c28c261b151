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

#include "npgal/newton.hpp"
#include "npgal/primes.hpp"
#include "test_support.hpp"

using namespace npgal;
using npgal::testing::uniform;

namespace {

Polynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

}  // namespace

TEST_CASE("newton_polygon examples") {
  SUBCASE("x^2 + 4x + 2 at 2") {
    const auto np = newton_polygon(P({2, 4, 1}), Integer(2));
    CHECK(np.points == std::vector<LatticePoint>{{0, 1}, {1, 2}, {2, 0}});
    CHECK(np.vertices == std::vector<LatticePoint>{{0, 1}, {2, 0}});
    REQUIRE(np.segments.size() == 1);
    CHECK(np.segments[0].slope == Rational(-1, 2));
    CHECK(np.segments[0].length == 2);
  }
  SUBCASE("x^3 + 9x^2 + 18x + 6 at 3") {
    const auto np = newton_polygon(P({6, 18, 9, 1}), Integer(3));
    CHECK(np.points == std::vector<LatticePoint>{{0, 1}, {1, 2}, {2, 2}, {3, 0}});
    REQUIRE(np.segments.size() == 1);
    CHECK(np.segments[0].slope == Rational(-1, 3));
    CHECK(np.segments[0].length == 3);
  }
  SUBCASE("x^2 + x + 1 at 5") {
    const auto np = newton_polygon(P({1, 1, 1}), Integer(5));
    REQUIRE(np.segments.size() == 1);
    CHECK(np.segments[0].slope == 0);
  }
  SUBCASE("zero coefficients are skipped") {
    const auto np = newton_polygon(P({4, 0, 0, 1}), Integer(2));
    CHECK(np.points.size() == 2);
    CHECK(np.segments[0].slope == Rational(-2, 3));
  }
  SUBCASE("collinear points are not corners") {
    const auto np = newton_polygon(P({8, 4, 2, 1}), Integer(2));
    CHECK(np.vertices == std::vector<LatticePoint>{{0, 3}, {3, 0}});
  }
  SUBCASE("rational coefficients give negative heights") {
    const auto np = newton_polygon(Polynomial({Rational(1), Rational(0), Rational(1, 4)}), Integer(2));
    CHECK(np.vertices == std::vector<LatticePoint>{{0, 0}, {2, -2}});
  }
}

TEST_CASE("newton_polygon preconditions") {
  CHECK_THROWS_AS(newton_polygon(Polynomial(), Integer(2)), DomainError);
  CHECK_THROWS_AS(newton_polygon(P({0, 1, 1}), Integer(2)), DomainError);
  CHECK_THROWS_AS(newton_polygon(P({1, 1}), Integer(9)), DomainError);
  const auto constant = newton_polygon(P({12}), Integer(2));
  CHECK(constant.segments.empty());
  CHECK(constant.vertices.size() == 1);
}

TEST_CASE("monotone chain matches the brute-force hull") {
  const auto primes = testing::plain_sieve(50);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = testing::random_poly(uniform(1, 12), 10000);
    const Integer p = primes[static_cast<std::size_t>(uniform(0, static_cast<long>(primes.size()) - 1))];
    const auto np = newton_polygon(f, p);
    CHECK(np.vertices == testing::brute_force_corners(np.points));
  }
}

TEST_CASE("newton_index examples") {
  const auto a = newton_index(P({-2, 0, 1}));
  CHECK(a.index == 2);
  CHECK(a.witnesses.at(Integer(2)) == std::vector<Rational>{Rational(-1, 2)});

  const auto b = newton_index(P({6, 18, 9, 1}));
  CHECK(b.index == 6);
  CHECK(b.witnesses.at(Integer(3)) == std::vector<Rational>{Rational(-1, 3)});
  CHECK(b.witnesses.at(Integer(2)) == std::vector<Rational>{Rational(-1, 2), Rational(0)});

  const auto c = newton_index(P({-1, 0, 1}));
  CHECK(c.index == 1);
  CHECK(c.witnesses.empty());

  const auto d = newton_index(P({0, 0, -2, 0, 1}));
  CHECK(d.x_power == 2);
  CHECK(d.index == 2);

  CHECK_THROWS_AS(newton_index(Polynomial()), DomainError);
}

TEST_CASE("newton_index invariances") {
  for (int trial = 0; trial < 100; ++trial) {
    const long n = uniform(1, 10);
    const auto f = testing::random_poly(n, 500);
    const auto base = newton_index(f).index;
    CHECK(mpz_divisible_p(lcm_up_to(n).get_mpz_t(), base.get_mpz_t()));
    CHECK(newton_index(testing::nonzero_rational(1000) * f).index == base);
    long c = 0;
    while (c == 0) c = uniform(-30, 30);
    CHECK(newton_index(scale_argument(f, c)).index == base);
  }
}

TEST_CASE("single-slope irreducibility evidence") {
  CHECK(single_slope_irreducibility_evidence(P({-2, 0, 1})));
  CHECK(single_slope_irreducibility_evidence(P({6, 18, 9, 1})));
  CHECK(*single_slope_witness(P({6, 18, 9, 1})) == 3);
  CHECK_FALSE(single_slope_irreducibility_evidence(P({-1, 0, 1})));
  CHECK_FALSE(single_slope_irreducibility_evidence(P({-4, 0, 1})));
  CHECK_THROWS_AS(single_slope_irreducibility_evidence(P({0, 1, 1})), DomainError);
}

TEST_CASE("lcm_up_to") {
  CHECK(lcm_up_to(1) == 1);
  CHECK(lcm_up_to(10) == 2520);
}
