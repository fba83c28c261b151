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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "npgal/certify.hpp"
#include "npgal/glp.hpp"
#include "npgal/modp.hpp"
#include "npgal/newton.hpp"
#include "npgal/poly.hpp"
#include "npgal/primes.hpp"
#include "test_support.hpp"

namespace {

using namespace npgal;
using npgal::testing::uniform;

struct Outcome {
  long cases = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 10) failures.push_back(what);
    if (!ok && failures.size() == 10) failures.push_back("...");
  }
};

bool run(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    std::ostringstream msg;
    msg << "took " << secs << " s, limit " << limit_seconds << " s";
    out.failures.push_back(msg.str());
  }
  const bool pass = out.failures.empty();
  std::printf("%s %d: %s (%ld cases, %.2f s)\n", pass ? "PASS" : "FAIL", id, title, out.cases, secs);
  for (const auto& f : out.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  return pass;
}

std::string label(long n, const Rational& alpha) {
  return "n=" + std::to_string(n) + " alpha=" + to_string(alpha);
}

std::vector<Rational> c_values(const GlpParams& params) {
  std::vector<Rational> c;
  for (const auto& v : glp_c_values(params)) c.emplace_back(v);
  return c;
}

// Every (n, alpha) examined by criteria 2 and 3.
std::vector<GlpParams> window_instances() {
  std::vector<GlpParams> out;
  for (long n = 9; n <= 40; ++n) out.push_back(GlpParams::make(n, Rational(0)));
  for (long n = 9; n <= 39; n += 2) out.push_back(GlpParams::make(n, Rational(1)));
  for (long alpha : {0L, 1L, 2L, 5L}) {
    const long lo = std::max<long>(48 - alpha, (8 * 3 + 5 * alpha + 2) / 3);
    for (long n = lo; n <= 120; ++n) out.push_back(GlpParams::make(n, Rational(alpha)));
  }
  return out;
}

// Rational root test for integer polynomials of small height.
bool has_rational_root(const Polynomial& f) {
  const auto g = primitive_scale(f).primitive;
  const long a0 = std::abs(g.coeffs.front().get_si());
  const long an = std::abs(g.coeffs.back().get_si());
  if (a0 == 0) return true;
  for (long d = 1; d <= a0; ++d) {
    if (a0 % d != 0) continue;
    for (long e = 1; e <= an; ++e) {
      if (an % e != 0) continue;
      for (long s : {1L, -1L}) {
        if (f.evaluate(make_rational(s * d, e)) == 0) return true;
      }
    }
  }
  return false;
}

// Galois group order of an irreducible quadratic or cubic from first principles.
long galois_order_oracle(const Polynomial& f) {
  if (f.degree() == 2) return 2;
  const Rational a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
  const Rational disc = b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
  return is_rational_square(disc) ? 3 : 6;
}

// A permutation is odd iff it has an odd number of even-length cycles.
bool even_by_cycle_lengths(const CycleType& t) {
  return std::count_if(t.degrees.begin(), t.degrees.end(), [](long d) { return d % 2 == 0; }) % 2 == 0;
}

fp::Poly product_mod(const std::vector<DegreeBlock>& blocks, std::uint64_t p) {
  fp::Poly acc{1};
  for (const auto& b : blocks) acc = fp::multiply(acc, b.product, p);
  return acc;
}

}  // namespace

int main() {
  bool all = true;

  all &= run(1, "Schur discriminant equals the resultant discriminant", 5.0, [](Outcome& out) {
    const Rational alphas[] = {Rational(0), Rational(1), Rational(2), Rational(7),
                               make_rational(-1, 2), make_rational(5, 3), make_rational(-7, 3)};
    // n = 1 is the empty-product case: both sides are 1
    for (long n = 1; n <= 12; ++n) {
      for (const auto& alpha : alphas) {
        ++out.cases;
        const auto params = GlpParams::make(n, alpha);
        const auto f = glp_monic(params);
        const Rational schur = schur_discriminant(params);
        out.expect(schur == discriminant(f), label(n, alpha) + ": library resultant");
        if (n <= 7) {
          // Sylvester determinant over Q, straight from the definition
          const long sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
          const Rational oracle = sign * testing::sylvester_resultant(f, f.derivative()) / f.leading();
          out.expect(schur == oracle, label(n, alpha) + ": Sylvester oracle");
        }
      }
    }
  });

  all &= run(2, "Schur cases: alpha=0 gives S_n, alpha=1 odd n gives square discriminant and A_n", 30.0,
             [](Outcome& out) {
               for (long n = 9; n <= 40; ++n) {
                 const auto params = GlpParams::make(n, Rational(0));
                 const auto cls = classify(params);
                 if (!cls.criterion) continue;
                 ++out.cases;
                 out.expect(cls.group == GaloisGroup::symmetric, label(n, 0) + ": expected S_n");
                 out.expect(!is_rational_square(cls.discriminant), label(n, 0) + ": square discriminant");
               }
               for (long n = 9; n <= 39; n += 2) {
                 ++out.cases;
                 const auto params = GlpParams::make(n, Rational(1));
                 const auto cls = classify(params);
                 out.expect(cls.discriminant_is_square && is_rational_square(schur_discriminant(n, Rational(1))),
                            label(n, 1) + ": discriminant not a square");
                 if (cls.criterion) {
                   out.expect(cls.group == GaloisGroup::alternating, label(n, 1) + ": expected A_n");
                 }
               }
             });

  all &= run(3, "criterion prime exists for integer alpha on the guaranteed range", 30.0, [](Outcome& out) {
    for (long alpha : {0L, 1L, 2L, 5L}) {
      const long lo = std::max<long>(48 - alpha, (8 * 3 + 5 * alpha + 2) / 3);
      for (long n = lo; n <= 120; ++n) {
        ++out.cases;
        const auto params = GlpParams::make(n, Rational(alpha));
        const auto cp = find_criterion_prime(params);
        if (!cp) {
          out.expect(false, label(n, alpha) + ": no criterion prime");
          continue;
        }
        // independent window check: (n + alpha)/2 < p < n - 2, p prime
        out.expect(2 * cp->p > n + alpha && cp->p < n - 2 && testing::trial_division_prime(cp->p),
                   label(n, alpha) + ": prime outside window");
        out.expect(cp->ell == cp->p - alpha, label(n, alpha) + ": ell");
      }
    }
  });

  all &= run(4, "monotone-chain polygon equals brute-force lower hull", 10.0, [](Outcome& out) {
    const auto primes = testing::plain_sieve(50);
    for (int trial = 0; trial < 1000; ++trial) {
      ++out.cases;
      const auto f = testing::random_poly(uniform(1, 12), 10000);
      const long p = static_cast<long>(primes[static_cast<std::size_t>(uniform(0, static_cast<long>(primes.size()) - 1))]);
      const auto np = newton_polygon(f, Integer(p));
      std::vector<LatticePoint> pts;
      for (long j = 0; j <= f.degree(); ++j) {
        const Rational c = f.coeff(static_cast<std::size_t>(j));
        if (c != 0) pts.push_back({j, testing::naive_valuation(c.get_num(), p)});
      }
      const std::string tag = "trial " + std::to_string(trial) + " p=" + std::to_string(p);
      out.expect(np.vertices == testing::brute_force_corners(pts), tag + ": vertices differ");
      try {
        check_polygon_invariants(np);
      } catch (const std::logic_error& e) {
        out.expect(false, tag + ": " + e.what());
      }
      bool ok = !np.segments.empty() && np.segments.front().from == pts.front() && np.segments.back().to == pts.back();
      long total = 0;
      for (std::size_t i = 0; i < np.segments.size(); ++i) {
        const auto& s = np.segments[i];
        total += s.length;
        ok &= s.length == s.to.x - s.from.x;
        ok &= s.slope == make_rational(s.to.y - s.from.y, s.to.x - s.from.x);
        if (i > 0) ok &= np.segments[i - 1].slope < s.slope && np.segments[i - 1].to == s.from;
      }
      ok &= total == f.degree();
      out.expect(ok, tag + ": convexity or endpoint invariant");
    }
  });

  all &= run(5, "Newton index invariant under scaling and x -> c x, divides lcm(1..n)", 0, [](Outcome& out) {
    for (int trial = 0; trial < 200; ++trial) {
      ++out.cases;
      const long n = uniform(1, 10);
      const auto f = testing::random_poly(n, 1000);
      const Integer base = newton_index(f).index;
      const std::string tag = "trial " + std::to_string(trial);
      const Rational s = testing::nonzero_rational(1000);
      out.expect(newton_index(s * f).index == base, tag + ": scaling");
      long c = 0;
      while (c == 0) c = uniform(-60, 60);
      out.expect(newton_index(scale_argument(f, Rational(c))).index == base, tag + ": x -> c x");
      Integer l = 1;
      for (long k = 1; k <= n; ++k) l = lcm(l, Integer(k));
      out.expect(l % base == 0, tag + ": does not divide lcm(1..n)");
    }
  });

  all &= run(6, "Newton index divides the Galois group order (quadratics and cubics)", 0, [](Outcome& out) {
    struct Case {
      std::vector<long> coeffs;  // ascending
      long order;
      long index;  // 0 when not pinned
    };
    const Case corpus[] = {
        {{-2, 0, 1}, 2, 2},      {{1, 0, 1}, 2, 0},      {{2, -4, 1}, 2, 0},      {{-3, 0, 1}, 2, 0},
        {{1, 1, 1}, 2, 0},       {{10, 5, 1}, 2, 0},     {{6, 18, 9, 1}, 6, 6},   {{-2, 0, 0, 1}, 6, 3},
        {{1, -3, 0, 1}, 3, 0},   {{-1, -1, 0, 1}, 6, 0}, {{3, 3, 0, 1}, 6, 0},    {{7, -7, 0, 1}, 3, 0},
        {{2, 2, 0, 1}, 6, 0},    {{9, 0, 3, 2}, 6, 0},   {{-5, 0, 0, 1}, 6, 3},   {{12, 0, 1}, 2, 0},
    };
    for (const auto& c : corpus) {
      ++out.cases;
      std::vector<Rational> r(c.coeffs.begin(), c.coeffs.end());
      const Polynomial f(std::move(r));
      const std::string tag = render_polynomial(f);
      out.expect(!has_rational_root(f), tag + ": reducible");
      out.expect(galois_order_oracle(f) == c.order, tag + ": oracle order differs from corpus");
      const Integer idx = newton_index(f).index;
      if (c.index != 0) out.expect(idx == c.index, tag + ": index " + to_string(idx));
      out.expect(c.order % idx == 0, tag + ": index " + to_string(idx) + " does not divide order");
    }
  });

  all &= run(7, "lemma success pins polygon corners (0,1), (p,0) with slope -1/p", 0, [](Outcome& out) {
    for (const auto& params : window_instances()) {
      const long n = params.n();
      const auto c = c_values(params);
      const auto f = glp_normalized(params);
      for (long p = 3; p < n; ++p) {
        if (!testing::trial_division_prime(static_cast<std::uint64_t>(p))) continue;
        if (!lemma_key_check(n, c, Integer(p))) continue;
        ++out.cases;
        const auto np = newton_polygon(f, Integer(p));
        const bool ok = np.vertices.size() >= 2 && np.vertices[0] == LatticePoint{0, 1} &&
                        np.vertices[1] == LatticePoint{p, 0} && np.segments[0].slope == make_rational(-1, p);
        out.expect(ok, label(n, params.alpha()) + " p=" + std::to_string(p));
      }
    }
  });

  all &= run(8, "mod-p factor degrees, x^2+1 splitting, A_n Frobenius parity", 0, [](Outcome& out) {
    const auto primes = testing::plain_sieve(400);
    int instances = 0;
    while (instances < 500) {
      const auto f = testing::random_poly(uniform(1, 10), 50);
      const auto p = primes[static_cast<std::size_t>(uniform(0, static_cast<long>(primes.size()) - 1))];
      if (!is_good_prime(f, p)) continue;
      ++instances;
      ++out.cases;
      const std::string tag = render_polynomial(f) + " p=" + std::to_string(p);
      const auto blocks = distinct_degree_blocks(f, p);
      out.expect(product_mod(blocks, p) == fp::make_monic(reduce_mod_p(f, p), p), tag + ": reconstruction");
      for (const auto& b : blocks) {
        out.expect(static_cast<long>(b.product.size()) - 1 > 0 &&
                       (static_cast<long>(b.product.size()) - 1) % b.degree == 0,
                   tag + ": block degree");
      }
      const auto type = factor_degrees(f, p);
      out.expect(type.degree_sum() == f.degree(), tag + ": degree sum");
      out.expect(std::is_sorted(type.degrees.begin(), type.degrees.end()), tag + ": ordering");
      const long linear = std::count(type.degrees.begin(), type.degrees.end(), 1L);
      out.expect(linear == testing::count_roots_mod_p(f, static_cast<long>(p)), tag + ": root count");
    }

    const Polynomial x2p1({Rational(1), Rational(0), Rational(1)});
    for (const auto p : testing::plain_sieve(200)) {
      if (!is_good_prime(x2p1, p)) {
        out.expect(p == 2, "x^2+1: p=" + std::to_string(p) + " reported bad");
        continue;
      }
      ++out.cases;
      const bool splits = factor_degrees(x2p1, p).degrees == std::vector<long>{1, 1};
      out.expect(splits == (p % 4 == 1), "x^2+1: p=" + std::to_string(p));
    }

    for (long n = 9; n <= 39; n += 2) {
      const auto params = GlpParams::make(n, Rational(1));
      const auto cls = classify(params);
      if (cls.group != GaloisGroup::alternating) continue;
      const auto f = glp_normalized(params);
      for (const auto p : good_primes(f, 50)) {
        ++out.cases;
        const auto type = factor_degrees(f, p);
        out.expect(even_by_cycle_lengths(type) && type.is_even(),
                   label(n, 1) + ": odd Frobenius at p=" + std::to_string(p));
      }
    }
  });

  all &= run(9, "every concrete verdict carries a replayable per-instance certificate", 0, [](Outcome& out) {
    for (const auto& params : window_instances()) {
      const auto cls = classify(params);
      if (cls.group == GaloisGroup::inconclusive) continue;
      ++out.cases;
      out.expect(replay_certificate(glp_normalized(params), cls.certificate),
                 label(params.n(), params.alpha()) + ": certificate does not replay");
    }
  });

  return all ? 0 : 1;
}
