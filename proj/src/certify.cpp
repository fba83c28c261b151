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

#include "npgal/certify.hpp"

#include <algorithm>
#include <stdexcept>

#include "npgal/modp.hpp"
#include "npgal/newton.hpp"
#include "npgal/primes.hpp"

namespace npgal {
namespace {

int rank(Verdict v) {
  switch (v) {
    case Verdict::contains_An:
      return 2;
    case Verdict::index_divides_order_only:
      return 1;
    case Verdict::inconclusive:
      return 0;
  }
  return 0;
}

struct WindowWitness {
  Integer valuation_prime;
  Rational slope;
  Integer window_prime;
};

std::optional<WindowWitness> find_window_witness(const NewtonIndexReport& report, long n) {
  for (const auto& [p, slopes] : report.witnesses) {
    for (const auto& s : slopes) {
      if (s.get_den() == 1) continue;
      for (const auto& q : prime_factors(s.get_den())) {
        if (in_jordan_window(q, n)) return WindowWitness{p, s, q};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::contains_An:
      return "contains_An";
    case Verdict::index_divides_order_only:
      return "index_divides_order_only";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(IrreducibilityBasis b) {
  switch (b) {
    case IrreducibilityBasis::assumed:
      return "assumed";
    case IrreducibilityBasis::single_slope:
      return "single_slope";
    case IrreducibilityBasis::degree_set_filter:
      return "degree_set_filter";
    case IrreducibilityBasis::unverified:
      return "unverified";
  }
  return "unverified";
}

bool in_jordan_window(const Integer& q, long n) { return 2 * q > n && q < n - 2; }

IrreducibilityBasis establish_irreducibility(const Polynomial& f, IrreducibilityDeclaration declaration,
                                             std::size_t filter_primes) {
  const auto fallback = declaration == IrreducibilityDeclaration::asserted ? IrreducibilityBasis::assumed
                                                                           : IrreducibilityBasis::unverified;
  if (f.degree() < 1) return fallback;
  if (f.coeff(0) == 0) {
    // x divides f: reducible unless f is a multiple of x itself.
    return f.degree() == 1 ? IrreducibilityBasis::single_slope : IrreducibilityBasis::unverified;
  }
  if (single_slope_irreducibility_evidence(f)) return IrreducibilityBasis::single_slope;
  try {
    const auto primes = good_primes(f, filter_primes);
    if (degree_set_filter(f, primes) == std::set<long>{0, f.degree()}) return IrreducibilityBasis::degree_set_filter;
  } catch (const DomainError&) {
    // not square-free: no good primes
  }
  return fallback;
}

GaloisCertificate certify_large_galois(const Polynomial& f, std::span<const Rational> shifts,
                                       IrreducibilityDeclaration declaration) {
  if (shifts.empty()) throw DomainError("shift list is empty");
  if (f.degree() < 2) throw DomainError("certification requires degree >= 2");
  const long n = f.degree();
  const auto basis = establish_irreducibility(f, declaration);
  const bool irreducible = basis != IrreducibilityBasis::unverified;

  std::optional<GaloisCertificate> best;
  for (const auto& mu : shifts) {
    const Polynomial g = shift(f, mu);
    if (g.coeff(0) == 0) continue;
    const auto report = newton_index(g);

    GaloisCertificate cert;
    cert.n = n;
    cert.shift_used = mu;
    cert.newton_index = report.index;
    cert.irreducibility_basis = basis;
    if (irreducible) {
      if (const auto w = find_window_witness(report, n)) {
        cert.verdict = Verdict::contains_An;
        cert.valuation_prime = w->valuation_prime;
        cert.slope = w->slope;
        cert.window_prime = w->window_prime;
      } else if (report.index > 1) {
        cert.verdict = Verdict::index_divides_order_only;
      }
    }
    if (!best || rank(cert.verdict) > rank(best->verdict)) best = cert;
    if (best->verdict == Verdict::contains_An) break;
  }
  if (!best) throw DomainError("f(x - mu) has zero constant term for every shift");
  return *best;
}

bool lemma_key_check(long n, std::span<const Rational> c, const Integer& p) {
  if (p <= 2 || p >= n) throw DomainError("lemma check requires 2 < p < n");
  if (c.size() != static_cast<std::size_t>(n + 1)) throw DomainError("lemma check needs c_0..c_n");
  if (!in_jordan_window(p, n)) return false;
  const long pj = p.get_si();
  for (long j = 0; j <= n; ++j) {
    const auto v = ord_p(c[static_cast<std::size_t>(j)], p);
    if (v.is_infinite()) {
      // c_j = 0 only fails the exact-value conditions
      if ((j >= 1 && j <= n - pj) || j == pj) return false;
      continue;
    }
    if (v.value() < 0) return false;
    if (j >= 1 && j <= n - pj && v.value() != 1) return false;
    if (j == pj && v.value() != 0) return false;
  }
  return true;
}

GaloisCertificate certify_via_lemma(const Polynomial& f, std::span<const Rational> c, const Integer& p,
                                    IrreducibilityDeclaration declaration) {
  const long n = f.degree();
  if (!lemma_key_check(n, c, p)) throw DomainError("lemma conditions fail at p = " + to_string(p));
  const auto np = newton_polygon(f, p);
  const Rational expected_slope = make_rational(-1, p);
  if (np.vertices.size() < 2 || np.vertices[0] != LatticePoint{0, 1} ||
      np.vertices[1] != LatticePoint{p.get_si(), 0} || np.segments.front().slope != expected_slope) {
    throw std::logic_error("lemma conditions hold but the polygon does not start with (0,1)-(p,0)");
  }
  const auto report = newton_index(f);
  if (!mpz_divisible_p(report.index.get_mpz_t(), p.get_mpz_t())) {
    throw std::logic_error("lemma prime does not divide the Newton index");
  }

  GaloisCertificate cert;
  cert.n = n;
  cert.shift_used = 0;
  cert.newton_index = report.index;
  cert.irreducibility_basis = establish_irreducibility(f, declaration);
  if (cert.irreducibility_basis != IrreducibilityBasis::unverified) {
    cert.verdict = Verdict::contains_An;
    cert.valuation_prime = p;
    cert.slope = expected_slope;
    cert.window_prime = p;
  } else {
    cert.verdict = Verdict::inconclusive;
  }
  return cert;
}

bool replay_certificate(const Polynomial& f, const GaloisCertificate& cert) {
  if (cert.verdict != Verdict::contains_An) return true;
  if (!cert.valuation_prime || !cert.slope || !cert.window_prime) return false;
  if (!is_prime(*cert.window_prime) || !in_jordan_window(*cert.window_prime, f.degree())) return false;
  if (!mpz_divisible_p(cert.slope->get_den_mpz_t(), cert.window_prime->get_mpz_t())) return false;
  if (!mpz_divisible_p(cert.newton_index.get_mpz_t(), cert.window_prime->get_mpz_t())) return false;
  const auto np = newton_polygon(shift(f, cert.shift_used), *cert.valuation_prime);
  return std::any_of(np.segments.begin(), np.segments.end(),
                     [&](const Segment& s) { return s.slope == *cert.slope; });
}

}  // namespace npgal
