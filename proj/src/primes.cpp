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

#include "npgal/primes.hpp"

#include <algorithm>
#include <numeric>

namespace npgal {
namespace {

constexpr std::uint32_t kTrialBound = 1u << 16;

// First 13 primes: deterministic strong-pseudoprime bases below 3.317e24.
constexpr std::uint32_t kDeterministicBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr std::uint32_t kExtraBases[] = {43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

std::vector<std::uint32_t> sieve(std::uint32_t bound) {
  std::vector<bool> composite(bound, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

bool trial_division(std::uint32_t m) {
  if (m < 2) return false;
  for (std::uint32_t p : small_primes()) {
    if (std::uint64_t{p} * p > m) return true;
    if (m % p == 0) return m == p;
  }
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const Integer& n, unsigned long a) {
  const Integer n_minus_1 = n - 1;
  Integer d = n_minus_1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x;
  const Integer base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (mp_bitcnt_t i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
  }
  return false;
}

long valuation_of_integer(const Integer& z, const Integer& p) {
  if (mpz_divisible_p(z.get_mpz_t(), p.get_mpz_t()) == 0) return 0;
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

Integer pollard_brent(const Integer& n, unsigned long c) {
  const Integer cc = c;
  auto step = [&](const Integer& v) {
    Integer r = v * v + cc;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return r;
  };
  Integer y = 2, x, ys, q = 1, g = 1;
  unsigned long r = 1;
  constexpr unsigned long kBlock = 128;
  constexpr unsigned long kLimit = 1ul << 22;
  while (g == 1 && r < kLimit) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    for (unsigned long k = 0; k < r && g == 1; k += kBlock) {
      ys = y;
      for (unsigned long i = 0; i < std::min(kBlock, r - k); ++i) {
        y = step(y);
        Integer diff = x - y;
        q *= abs(diff);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = step(ys);
      Integer diff = x - ys;
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void split_cofactor(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2;; ++k) {
      Integer root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        split_cofactor(root, out);
        return;
      }
    }
  }
  for (unsigned long c = 1; c < 16; ++c) {
    const Integer d = pollard_brent(n, c);
    if (d != 1 && d != n) {
      split_cofactor(d, out);
      split_cofactor(n / d, out);
      return;
    }
  }
  throw DomainError("unable to factor " + to_string(n));
}

}  // namespace

std::span<const std::uint32_t> small_primes() {
  static const std::vector<std::uint32_t> primes = sieve(kTrialBound);
  return primes;
}

bool is_prime(std::uint64_t m) {
  if (m < kTrialBound) return trial_division(static_cast<std::uint32_t>(m));
  for (std::uint32_t p : small_primes().first(64)) {
    if (m % p == 0) return false;
  }
  for (std::uint32_t a : kDeterministicBases) {
    if (!strong_probable_prime(m, a)) return false;
  }
  return true;
}

bool is_prime(const Integer& m) {
  if (m < 2) return false;
  if (mpz_fits_ulong_p(m.get_mpz_t()) && sizeof(unsigned long) == 8) return is_prime(std::uint64_t{m.get_ui()});
  for (std::uint32_t p : small_primes().first(64)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
  }
  for (std::uint32_t a : kDeterministicBases) {
    if (!strong_probable_prime(m, a)) return false;
  }
  static const Integer deterministic_bound("3317044064679887385961981", 10);
  if (m >= deterministic_bound) {
    for (std::uint32_t a : kExtraBases) {
      if (!strong_probable_prime(m, a)) return false;
    }
  }
  return true;
}

Valuation ord_p(const Integer& z, const Integer& p) {
  if (!is_prime(p)) throw DomainError("ord_p: " + to_string(p) + " is not prime");
  if (z == 0) return Valuation::infinity();
  return Valuation(valuation_of_integer(z, p));
}

Valuation ord_p(const Rational& q, const Integer& p) {
  if (!is_prime(p)) throw DomainError("ord_p: " + to_string(p) + " is not prime");
  if (q == 0) return Valuation::infinity();
  return Valuation(valuation_of_integer(q.get_num(), p) - valuation_of_integer(q.get_den(), p));
}

std::vector<std::int64_t> primes_in_ap_interval(std::int64_t lambda, std::int64_t mu, std::int64_t lo,
                                                std::int64_t hi) {
  if (mu < 1) throw DomainError("modulus must be positive");
  if (std::gcd(lambda, mu) != 1) throw DomainError("gcd(lambda, mu) must be 1");
  if (lo > hi) throw DomainError("empty interval: lo > hi");
  std::vector<std::int64_t> out;
  const std::int64_t start = std::max<std::int64_t>(lo, 2);
  if (start > hi) return out;
  const std::int64_t offset = ((lambda - start) % mu + mu) % mu;
  for (std::int64_t r = start + offset; r <= hi; r += mu) {
    if (is_prime(static_cast<std::uint64_t>(r))) out.push_back(r);
  }
  return out;
}

std::vector<Integer> prime_factors(const Integer& z) {
  Integer n = abs(z);
  std::vector<Integer> out;
  if (n == 0) throw DomainError("prime_factors of zero");
  for (std::uint32_t p : small_primes()) {
    if (n == 1) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.emplace_back(p);
      mpz_remove(n.get_mpz_t(), n.get_mpz_t(), Integer(p).get_mpz_t());
    }
  }
  split_cofactor(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Integer> candidate_primes(const IntegerPolynomial& g) {
  if (g.coeffs.empty()) throw DomainError("candidate_primes of the zero polynomial");
  if (g.coeffs.front() == 0) throw DomainError("candidate_primes requires a nonzero constant term");
  std::vector<Integer> out = prime_factors(g.coeffs.front());
  const auto lead = prime_factors(g.coeffs.back());
  out.insert(out.end(), lead.begin(), lead.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace npgal
