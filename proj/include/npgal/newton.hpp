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

#ifndef NPGAL_NEWTON_HPP
#define NPGAL_NEWTON_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "npgal/exact.hpp"
#include "npgal/poly.hpp"

namespace npgal {

struct LatticePoint {
  long x = 0;
  long y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct Segment {
  Rational slope;  // lowest terms, positive denominator
  long length = 0;
  LatticePoint from;
  LatticePoint to;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Lower convex hull of {(j, ord_p(a_j)) : a_j != 0}. Collinear interior
/// points are not vertices, so segment slopes strictly increase.
struct NewtonPolygon {
  Integer prime;
  std::vector<LatticePoint> points;
  std::vector<LatticePoint> vertices;
  std::vector<Segment> segments;
};

/// Requires f nonzero with f(0) != 0 and p prime; throws DomainError otherwise.
NewtonPolygon newton_polygon(const Polynomial& f, const Integer& p);

/// Throws std::logic_error if any structural invariant of the polygon fails.
void check_polygon_invariants(const NewtonPolygon& np);

struct NewtonIndexReport {
  Integer index = 1;
  /// Every slope of NP_p for each candidate prime p, left to right.
  std::map<Integer, std::vector<Rational>> witnesses;
  /// Power of x removed before computing polygons.
  std::size_t x_power = 0;
};

/// lcm of slope denominators over all primes. Non-candidate primes give a
/// single slope-0 segment and are skipped. Constant scaling and x-powers are
/// removed first.
NewtonIndexReport newton_index(const Polynomial& f);

/// A prime whose polygon is one segment with slope denominator deg f,
/// which forces irreducibility over Q.
std::optional<Integer> single_slope_witness(const Polynomial& f);
bool single_slope_irreducibility_evidence(const Polynomial& f);

/// lcm(1, 2, ..., n).
Integer lcm_up_to(long n);

}  // namespace npgal

#endif  // NPGAL_NEWTON_HPP
