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

#ifndef NPGAL_MODP_HPP
#define NPGAL_MODP_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "npgal/poly.hpp"

namespace npgal {

/// Dense polynomials over F_p, ascending coefficients, no trailing zeros.
/// Requires 2 <= p < 2^63 so that sums of residues do not overflow.
namespace fp {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& f);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);
Poly multiply(const Poly& a, const Poly& b, std::uint64_t p);
/// Remainder of a by b (b nonzero).
Poly remainder(Poly a, const Poly& b, std::uint64_t p);
/// Exact quotient of a by b (b nonzero).
Poly quotient(Poly a, const Poly& b, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly derivative(const Poly& f, std::uint64_t p);
Poly make_monic(Poly f, std::uint64_t p);
/// base^e mod modulus.
Poly power_mod(Poly base, std::uint64_t e, const Poly& modulus, std::uint64_t p);

}  // namespace fp

/// Coefficientwise reduction of f modulo p. Throws DomainError if p divides a
/// coefficient denominator.
fp::Poly reduce_mod_p(const Polynomial& f, std::uint64_t p);

/// Degrees of the irreducible factors of f mod p (a Frobenius cycle type).
struct CycleType {
  std::uint64_t prime = 0;
  std::vector<long> degrees;  // ascending

  long degree_sum() const;
  /// A permutation with this cycle type is even iff n - #cycles is even.
  bool is_even() const;
};

/// True iff p divides no coefficient denominator, not the leading
/// coefficient and not the discriminant of f. The discriminant condition is
/// decided as gcd(f mod p, f' mod p) = 1, which is equivalent once the
/// leading coefficient survives reduction.
bool is_good_prime(const Polynomial& f, std::uint64_t p);

/// One distinct-degree block: the product of all degree-`degree` factors.
struct DegreeBlock {
  long degree = 0;
  fp::Poly product;
};

/// Distinct-degree factorization of the monic reduction of f. Throws
/// DomainError unless p is good for f.
std::vector<DegreeBlock> distinct_degree_blocks(const Polynomial& f, std::uint64_t p);

CycleType factor_degrees(const Polynomial& f, std::uint64_t p);

/// Intersection over the given primes of the subset-sum closures of the
/// mod-p factor degrees. Contains the degree of every rational factor of f.
std::set<long> degree_set_filter(const Polynomial& f, std::span<const std::uint64_t> primes);

enum class ParityVerdict { contains_odd_permutation, all_even_so_far };

/// An odd sample proves Gal(f) is not inside A_n; all-even is only evidence.
ParityVerdict parity_evidence(std::span<const CycleType> samples);

/// The first `count` good primes for f in ascending order, starting at 2.
/// Throws DomainError after 1000 consecutive bad primes (f is then almost
/// certainly not square-free).
std::vector<std::uint64_t> good_primes(const Polynomial& f, std::size_t count);

std::vector<CycleType> frobenius_samples(const Polynomial& f, std::size_t count);

}  // namespace npgal

#endif  // NPGAL_MODP_HPP
