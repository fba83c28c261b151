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

#ifndef NPGAL_PRIMES_HPP
#define NPGAL_PRIMES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "npgal/exact.hpp"
#include "npgal/poly.hpp"

namespace npgal {

/// p-adic valuation of a rational; +infinity only for zero.
class Valuation {
 public:
  Valuation() = default;  // infinity
  explicit Valuation(long v) : value_(v) {}

  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Precondition: !is_infinite().
  long value() const { return value_.value(); }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::optional<long> value_;
};

/// Primality test.
///
/// m < 2^16 is decided by trial division. Larger m is tested with strong
/// probable-prime rounds to the first 13 prime bases, which is proven
/// deterministic for m < 3.317e24 (covers all of 64-bit). Beyond that
/// bound 12 further prime bases are added and the answer is
/// probabilistic, with error below 4^-25 for any fixed input.
bool is_prime(const Integer& m);
bool is_prime(std::uint64_t m);

/// ord_p(a/b) = ord_p(a) - ord_p(b). Throws DomainError if p is not prime.
Valuation ord_p(const Rational& q, const Integer& p);
Valuation ord_p(const Integer& z, const Integer& p);

/// All primes p in [lo, hi] with p = lambda (mod mu), ascending.
/// Throws DomainError if mu < 1, gcd(lambda, mu) != 1 or lo > hi.
std::vector<std::int64_t> primes_in_ap_interval(std::int64_t lambda, std::int64_t mu, std::int64_t lo,
                                                std::int64_t hi);

/// Distinct prime factors of |z|, ascending. Trial division below 2^16,
/// Pollard-Brent above; throws DomainError if a cofactor resists splitting.
std::vector<Integer> prime_factors(const Integer& z);

/// Primes dividing a_0 * a_n of a primitive integer polynomial, ascending.
/// Outside this set every coefficient has valuation >= 0 and both end
/// coefficients valuation 0, so the Newton polygon is flat.
std::vector<Integer> candidate_primes(const IntegerPolynomial& g);

/// Primes below 2^16, computed once.
std::span<const std::uint32_t> small_primes();

}  // namespace npgal

#endif  // NPGAL_PRIMES_HPP
