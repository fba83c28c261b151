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

#include "npgal/newton.hpp"

#include <stdexcept>

#include "npgal/primes.hpp"

namespace npgal {
namespace {

// Cross product of (b - a) and (c - a); positive for a left turn.
long cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace

NewtonPolygon newton_polygon(const Polynomial& f, const Integer& p) {
  if (f.is_zero()) throw DomainError("Newton polygon of the zero polynomial");
  if (f.coeff(0) == 0) throw DomainError("Newton polygon requires a nonzero constant term (strip x-powers first)");
  if (!is_prime(p)) throw DomainError(to_string(p) + " is not prime");

  NewtonPolygon np;
  np.prime = p;
  const auto& c = f.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    np.points.push_back({static_cast<long>(j), ord_p(c[j], p).value()});
  }

  // Monotone chain; points are already sorted by x.
  for (const auto& pt : np.points) {
    while (np.vertices.size() >= 2 && cross(np.vertices[np.vertices.size() - 2], np.vertices.back(), pt) <= 0) {
      np.vertices.pop_back();
    }
    np.vertices.push_back(pt);
  }
  for (std::size_t i = 1; i < np.vertices.size(); ++i) {
    const auto& a = np.vertices[i - 1];
    const auto& b = np.vertices[i];
    np.segments.push_back({make_rational(b.y - a.y, b.x - a.x), b.x - a.x, a, b});
  }
  check_polygon_invariants(np);
  return np;
}

void check_polygon_invariants(const NewtonPolygon& np) {
  if (np.vertices.empty() || np.vertices.front().x != 0 || np.vertices.back().x != np.points.back().x) {
    throw std::logic_error("Newton polygon endpoints do not span the support");
  }
  long total = 0;
  for (std::size_t i = 0; i < np.segments.size(); ++i) {
    const auto& s = np.segments[i];
    total += s.length;
    if (i > 0 && !(np.segments[i - 1].slope < s.slope)) throw std::logic_error("Newton polygon slopes not increasing");
    for (const auto& pt : np.points) {
      // pt.y >= from.y + slope * (pt.x - from.x), scaled by length
      if ((pt.y - s.from.y) * s.length < (s.to.y - s.from.y) * (pt.x - s.from.x)) {
        throw std::logic_error("point below a Newton polygon segment");
      }
    }
  }
  if (total != np.points.back().x) throw std::logic_error("segment lengths do not sum to the degree");
}

Integer lcm_up_to(long n) {
  Integer r = 1;
  for (long k = 2; k <= n; ++k) mpz_lcm_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

NewtonIndexReport newton_index(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("Newton index of the zero polynomial");
  const auto split = strip_x_powers(f);
  const auto primitive = primitive_scale(split.remainder).primitive;
  const Polynomial g = primitive.to_rational();

  NewtonIndexReport report;
  report.x_power = split.multiplicity;
  for (const auto& p : candidate_primes(primitive)) {
    const auto np = newton_polygon(g, p);
    auto& slopes = report.witnesses[p];
    for (const auto& s : np.segments) {
      slopes.push_back(s.slope);
      mpz_lcm(report.index.get_mpz_t(), report.index.get_mpz_t(), s.slope.get_den_mpz_t());
    }
  }
  if (!mpz_divisible_p(lcm_up_to(f.degree()).get_mpz_t(), report.index.get_mpz_t())) {
    throw std::logic_error("Newton index does not divide lcm(1..n)");
  }
  return report;
}

std::optional<Integer> single_slope_witness(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  if (f.coeff(0) == 0) throw DomainError("requires a nonzero constant term");
  if (f.degree() < 1) return std::nullopt;
  const auto primitive = primitive_scale(f).primitive;
  const Polynomial g = primitive.to_rational();
  for (const auto& p : candidate_primes(primitive)) {
    const auto np = newton_polygon(g, p);
    if (np.segments.size() == 1 && np.segments.front().slope.get_den() == f.degree()) return p;
  }
  return std::nullopt;
}

bool single_slope_irreducibility_evidence(const Polynomial& f) { return single_slope_witness(f).has_value(); }

}  // namespace npgal
