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

#ifndef NPGAL_CERTIFY_HPP
#define NPGAL_CERTIFY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "npgal/exact.hpp"
#include "npgal/poly.hpp"

namespace npgal {

enum class Verdict { contains_An, index_divides_order_only, inconclusive };

/// How irreducibility over Q was obtained. `unverified` means neither a
/// proof nor a caller assertion is available; no Galois claim is made then.
enum class IrreducibilityBasis { assumed, single_slope, degree_set_filter, unverified };

/// Caller's stance on irreducibility. Verification is always attempted; an
/// assertion is only the fallback when it fails.
enum class IrreducibilityDeclaration { asserted, verify_only };

std::string_view to_string(Verdict v);
std::string_view to_string(IrreducibilityBasis b);

struct GaloisCertificate {
  Verdict verdict = Verdict::inconclusive;
  long n = 0;
  Rational shift_used;
  std::optional<Integer> valuation_prime;
  std::optional<Rational> slope;
  std::optional<Integer> window_prime;
  Integer newton_index = 1;
  IrreducibilityBasis irreducibility_basis = IrreducibilityBasis::unverified;
};

/// True iff n/2 < q < n - 2.
bool in_jordan_window(const Integer& q, long n);

/// Tries a single-slope polygon, then the degree-set filter over
/// `filter_primes` good primes, then falls back on the declaration.
IrreducibilityBasis establish_irreducibility(const Polynomial& f, IrreducibilityDeclaration declaration,
                                             std::size_t filter_primes = 10);

/// Newton-index criterion over g(x) = f(x - mu) for each listed shift. The
/// first shift reaching the strongest verdict wins. Throws DomainError if
/// shifts is empty, deg f < 2, or g(0) = 0 for every shift.
GaloisCertificate certify_large_galois(const Polynomial& f, std::span<const Rational> shifts,
                                       IrreducibilityDeclaration declaration);

/// Shortcut for f = sum binom(n, j) c_j x^j: checks
///   n/2 < p < n - 2,  ord_p(c_j) >= 0 for all j,
///   ord_p(c_j) = 1 for 1 <= j <= n - p,  ord_p(c_p) = 0.
/// Throws DomainError if p <= 2, p >= n, or c does not have n + 1 entries.
bool lemma_key_check(long n, std::span<const Rational> c, const Integer& p);

/// Builds the contains-A_n certificate for a polynomial whose c_j pass
/// lemma_key_check at p. The polygon at p is recomputed and must start with
/// the segment (0,1)-(p,0); a mismatch throws std::logic_error.
GaloisCertificate certify_via_lemma(const Polynomial& f, std::span<const Rational> c, const Integer& p,
                                    IrreducibilityDeclaration declaration);

/// Re-derives the recorded slope from NP_p(f(x - shift)) and checks the
/// window prime divides its denominator. Always true for non-A_n verdicts.
bool replay_certificate(const Polynomial& f, const GaloisCertificate& cert);

}  // namespace npgal

#endif  // NPGAL_CERTIFY_HPP
