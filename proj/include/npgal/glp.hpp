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

#ifndef NPGAL_GLP_HPP
#define NPGAL_GLP_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "npgal/certify.hpp"
#include "npgal/exact.hpp"
#include "npgal/modp.hpp"
#include "npgal/poly.hpp"

namespace npgal {

/// Degree n and parameter alpha = lambda / mu in lowest terms, mu >= 1.
class GlpParams {
 public:
  /// Throws DomainError if n < 1, alpha is a negative integer, or lambda/mu
  /// do not fit in a long.
  static GlpParams make(long n, const Rational& alpha);

  long n() const noexcept { return n_; }
  long lambda() const noexcept { return lambda_; }
  long mu() const noexcept { return mu_; }
  Rational alpha() const { return make_rational(lambda_, mu_); }

 private:
  GlpParams(long n, long lambda, long mu) : n_(n), lambda_(lambda), mu_(mu) {}
  long n_;
  long lambda_;
  long mu_;
};

/// L_n^(alpha)(x) = sum_j binom(n + alpha, n - j) (-x)^j / j!.
Polynomial glp(const GlpParams& params);

/// (-1)^n n! L_n^(alpha)(x), the monic form whose discriminant Schur computed.
Polynomial glp_monic(const GlpParams& params);

/// c_j = prod_{k=j+1}^{n} (k mu + lambda) for j = 0..n; c_n = 1.
std::vector<Integer> glp_c_values(const GlpParams& params);

/// mu^n n! L_n^(lambda/mu)(-x/mu) = sum_j binom(n, j) c_j x^j. Monic, integral.
Polynomial glp_normalized(const GlpParams& params);

/// prod_{j=2}^{n} j^j (alpha + j)^(j-1); 1 for n <= 1. Defined for every
/// rational alpha, so it can be evaluated where it vanishes.
Rational schur_discriminant(long n, const Rational& alpha);
Rational schur_discriminant(const GlpParams& params);

/// q >= 0 with numerator and denominator perfect squares.
bool is_rational_square(const Rational& q);

struct CriterionPrime {
  long p = 0;
  long ell = 0;  // p = mu * ell + lambda
};

/// Largest prime p = lambda (mod mu) with (n mu + mu + lambda)/(mu + 1) <= p <= n - 3
/// whose c_j pass lemma_key_check. For mu = 1 this is the window
/// ((n + alpha)/2, n - 2).
std::optional<CriterionPrime> find_criterion_prime(const GlpParams& params);

enum class GaloisGroup { alternating, symmetric, inconclusive };
std::string_view to_string(GaloisGroup g);

struct ClassifyOptions {
  IrreducibilityDeclaration irreducibility = IrreducibilityDeclaration::asserted;
  std::size_t frobenius_samples = 0;
};

struct Classification {
  explicit Classification(const GlpParams& p) : params(p) {}

  GlpParams params;
  GaloisGroup group = GaloisGroup::inconclusive;
  Rational discriminant;
  bool discriminant_is_square = false;
  GaloisCertificate certificate;
  std::optional<CriterionPrime> criterion;
  std::vector<CycleType> frobenius;
  std::optional<ParityVerdict> parity;
};

/// A_n when an A_n-containment certificate exists and the discriminant is a
/// square, S_n when it exists and the discriminant is not a square,
/// inconclusive otherwise. Throws std::logic_error if an A_n verdict meets an
/// odd Frobenius sample.
Classification classify(const GlpParams& params, const ClassifyOptions& options = {});

}  // namespace npgal

#endif  // NPGAL_GLP_HPP
