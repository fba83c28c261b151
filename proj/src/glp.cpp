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

#include "npgal/glp.hpp"

#include <algorithm>
#include <stdexcept>

#include "npgal/primes.hpp"

namespace npgal {
namespace {

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational power(const Rational& base, long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

}  // namespace

GlpParams GlpParams::make(long n, const Rational& alpha) {
  if (n < 1) throw DomainError("degree n must be positive");
  if (alpha.get_den() == 1 && alpha < 0) {
    throw DomainError("alpha = " + to_string(alpha) + " is a negative integer; L_n is divisible by x");
  }
  if (!mpz_fits_slong_p(alpha.get_num_mpz_t()) || !mpz_fits_slong_p(alpha.get_den_mpz_t())) {
    throw DomainError("alpha numerator/denominator out of range");
  }
  return GlpParams(n, alpha.get_num().get_si(), alpha.get_den().get_si());
}

Polynomial glp(const GlpParams& params) {
  const long n = params.n();
  const Rational alpha = params.alpha();
  std::vector<Rational> coeffs(static_cast<std::size_t>(n + 1));
  for (long j = 0; j <= n; ++j) {
    // binom(n + alpha, n - j) = (n + alpha)(n + alpha - 1)...(alpha + j + 1) / (n - j)!
    Rational b = 1;
    for (long i = j + 1; i <= n; ++i) b *= alpha + i;
    b /= factorial(n - j);
    b /= factorial(j);
    coeffs[static_cast<std::size_t>(j)] = (j % 2 == 0) ? b : Rational(-b);
  }
  return Polynomial(std::move(coeffs));
}

Polynomial glp_monic(const GlpParams& params) {
  Rational scale = factorial(params.n());
  if (params.n() % 2 == 1) scale = -scale;
  return scale * glp(params);
}

std::vector<Integer> glp_c_values(const GlpParams& params) {
  const long n = params.n();
  std::vector<Integer> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1;
  for (long j = n - 1; j >= 0; --j) {
    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j + 1)] * ((j + 1) * params.mu() + params.lambda());
  }
  return c;
}

Polynomial glp_normalized(const GlpParams& params) {
  const auto c = glp_c_values(params);
  std::vector<Rational> coeffs;
  coeffs.reserve(c.size());
  for (long j = 0; j <= params.n(); ++j) {
    coeffs.emplace_back(binomial(params.n(), j) * c[static_cast<std::size_t>(j)]);
  }
  Polynomial f(std::move(coeffs));
  if (f.leading() != 1) throw std::logic_error("normalized GLP is not monic");
  return f;
}

Rational schur_discriminant(long n, const Rational& alpha) {
  Rational d = 1;
  for (long j = 2; j <= n; ++j) {
    d *= power(Rational(j), j);
    d *= power(alpha + j, j - 1);
  }
  return d;
}

Rational schur_discriminant(const GlpParams& params) { return schur_discriminant(params.n(), params.alpha()); }

bool is_rational_square(const Rational& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

std::optional<CriterionPrime> find_criterion_prime(const GlpParams& params) {
  const long n = params.n();
  const long lambda = params.lambda();
  const long mu = params.mu();
  const long hi = n - 3;
  // ceil((n mu + mu + lambda) / (mu + 1))
  const Integer num = Integer(n) * mu + mu + lambda;
  Integer lo_z;
  mpz_cdiv_q_ui(lo_z.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(mu + 1));
  const long lo = std::max(3L, lo_z.get_si());
  if (lo > hi) return std::nullopt;

  std::vector<Rational> c;
  for (const auto& z : glp_c_values(params)) c.emplace_back(z);

  auto primes = primes_in_ap_interval(lambda, mu, lo, hi);
  for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
    if (lemma_key_check(n, c, Integer(*it))) return CriterionPrime{*it, (*it - lambda) / mu};
  }
  return std::nullopt;
}

std::string_view to_string(GaloisGroup g) {
  switch (g) {
    case GaloisGroup::alternating:
      return "A_n";
    case GaloisGroup::symmetric:
      return "S_n";
    case GaloisGroup::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Classification classify(const GlpParams& params, const ClassifyOptions& options) {
  const Polynomial f = glp_normalized(params);
  Classification out(params);
  out.criterion = find_criterion_prime(params);
  if (out.criterion) {
    std::vector<Rational> c;
    for (const auto& z : glp_c_values(params)) c.emplace_back(z);
    out.certificate = certify_via_lemma(f, c, Integer(out.criterion->p), options.irreducibility);
  } else if (params.n() >= 2) {
    const Rational zero = 0;
    out.certificate = certify_large_galois(f, std::span(&zero, 1), options.irreducibility);
  } else {
    out.certificate.n = params.n();
    out.certificate.irreducibility_basis = establish_irreducibility(f, options.irreducibility);
  }

  out.discriminant = schur_discriminant(params);
  out.discriminant_is_square = is_rational_square(out.discriminant);
  if (out.certificate.verdict == Verdict::contains_An) {
    out.group = out.discriminant_is_square ? GaloisGroup::alternating : GaloisGroup::symmetric;
  }

  if (options.frobenius_samples > 0) {
    out.frobenius = frobenius_samples(f, options.frobenius_samples);
    out.parity = parity_evidence(out.frobenius);
    if (out.group == GaloisGroup::alternating && *out.parity == ParityVerdict::contains_odd_permutation) {
      throw std::logic_error("A_n verdict contradicted by an odd Frobenius cycle type");
    }
  }
  return out;
}

}  // namespace npgal
