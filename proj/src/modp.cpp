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

#include "npgal/modp.hpp"

#include <algorithm>
#include <stdexcept>

#include "npgal/primes.hpp"

namespace npgal {
namespace fp {
namespace {

constexpr std::uint64_t kHalfWord = std::uint64_t{1} << 32;

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (p <= kHalfWord) return a * b % p;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }

// Returns quotient, leaves remainder in a.
Poly divide(Poly& a, const Poly& b, std::uint64_t p) {
  if (b.empty()) throw DomainError("division by the zero polynomial mod p");
  trim(a);
  if (a.size() < b.size()) return {};
  const std::uint64_t inv_lead = inverse(b.back(), p);
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = a.size() - 1;; --i) {
    const std::uint64_t factor = mul(a[i], inv_lead, p);
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = factor;
    if (factor != 0) {
      for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = sub(a[shift + k], mul(factor, b[k], p), p);
    }
    if (i + 1 == b.size()) break;
  }
  trim(a);
  trim(q);
  return q;
}

}  // namespace

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid in signed 128-bit arithmetic.
  __int128 t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw DomainError("residue is not invertible mod p");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

Poly multiply(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  if (p <= kHalfWord) {
    // each product is below 2^64, so a 128-bit column sum cannot overflow
    for (std::size_t k = 0; k < c.size(); ++k) {
      const std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
      const std::size_t hi = std::min(k, a.size() - 1);
      unsigned __int128 acc = 0;
      for (std::size_t i = lo; i <= hi; ++i) acc += static_cast<unsigned __int128>(a[i] * b[k - i]);
      c[k] = static_cast<std::uint64_t>(acc % p);
    }
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = add(c[i + j], mul(a[i], b[j], p), p);
    }
  }
  trim(c);
  return c;
}

Poly remainder(Poly a, const Poly& b, std::uint64_t p) {
  divide(a, b, p);
  return a;
}

Poly quotient(Poly a, const Poly& b, std::uint64_t p) { return divide(a, b, p); }

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

Poly derivative(const Poly& f, std::uint64_t p) {
  if (f.size() <= 1) return {};
  Poly d(f.size() - 1);
  for (std::size_t j = 1; j < f.size(); ++j) d[j - 1] = mul(f[j], j % p, p);
  trim(d);
  return d;
}

Poly make_monic(Poly f, std::uint64_t p) {
  trim(f);
  if (f.empty() || f.back() == 1) return f;
  const std::uint64_t inv = inverse(f.back(), p);
  for (auto& c : f) c = mul(c, inv, p);
  return f;
}

Poly power_mod(Poly base, std::uint64_t e, const Poly& modulus, std::uint64_t p) {
  Poly result = remainder(Poly{1}, modulus, p);
  base = remainder(std::move(base), modulus, p);
  while (e) {
    if (e & 1) result = remainder(multiply(result, base, p), modulus, p);
    e >>= 1;
    if (e) base = remainder(multiply(base, base, p), modulus, p);
  }
  return result;
}

}  // namespace fp

namespace {

void check_modulus(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 63)) throw DomainError("modulus too large for word-sized field arithmetic");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

std::uint64_t residue(const Integer& z, std::uint64_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

// Rows x^(i p) mod f for i < deg f; h(x)^p mod f is then a linear map of h.
class FrobeniusMap {
 public:
  FrobeniusMap(const fp::Poly& f, std::uint64_t p) : p_(p), n_(f.size() - 1) {
    const fp::Poly xp = fp::power_mod(fp::Poly{0, 1}, p, f, p);
    rows_.reserve(n_);
    rows_.push_back(fp::Poly{1});
    for (std::size_t i = 1; i < n_; ++i) rows_.push_back(fp::remainder(fp::multiply(rows_.back(), xp, p), f, p));
  }

  fp::Poly apply(const fp::Poly& h) const {
    std::vector<unsigned __int128> acc(n_, 0);
    const bool small = p_ <= (std::uint64_t{1} << 32);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] == 0) continue;
      const auto& row = rows_[i];
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (small) {
          acc[k] += static_cast<unsigned __int128>(h[i] * row[k]);
        } else {
          acc[k] = (acc[k] + static_cast<unsigned __int128>(h[i]) * row[k] % p_) % p_;
        }
      }
    }
    fp::Poly out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = static_cast<std::uint64_t>(acc[k] % p_);
    fp::trim(out);
    return out;
  }

 private:
  std::uint64_t p_;
  std::size_t n_;
  std::vector<fp::Poly> rows_;
};

}  // namespace

fp::Poly reduce_mod_p(const Polynomial& f, std::uint64_t p) {
  check_modulus(p);
  fp::Poly out;
  out.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) {
    const std::uint64_t den = residue(c.get_den(), p);
    if (den == 0) throw DomainError("p divides a coefficient denominator");
    out.push_back(fp::mul(residue(c.get_num(), p), fp::inverse(den, p), p));
  }
  fp::trim(out);
  return out;
}

long CycleType::degree_sum() const {
  long s = 0;
  for (long d : degrees) s += d;
  return s;
}

bool CycleType::is_even() const { return (degree_sum() - static_cast<long>(degrees.size())) % 2 == 0; }

bool is_good_prime(const Polynomial& f, std::uint64_t p) {
  if (f.degree() < 1) throw DomainError("good-prime test requires degree >= 1");
  check_modulus(p);
  for (const auto& c : f.coefficients()) {
    if (residue(c.get_den(), p) == 0) return false;
  }
  const fp::Poly fbar = reduce_mod_p(f, p);
  if (static_cast<long>(fbar.size()) - 1 != f.degree()) return false;
  return fp::gcd(fbar, fp::derivative(fbar, p), p).size() == 1;
}

std::vector<DegreeBlock> distinct_degree_blocks(const Polynomial& f, std::uint64_t p) {
  if (!is_good_prime(f, p)) throw DomainError(std::to_string(p) + " is not a good prime for this polynomial");
  const fp::Poly target = fp::make_monic(reduce_mod_p(f, p), p);
  fp::Poly rest = target;
  const FrobeniusMap frobenius(target, p);
  fp::Poly h = fp::remainder(fp::Poly{0, 1}, target, p);
  std::vector<DegreeBlock> blocks;
  for (long d = 1; 2 * d <= static_cast<long>(rest.size()) - 1; ++d) {
    h = frobenius.apply(h);  // x^(p^d) mod f
    fp::Poly diff = fp::remainder(h, rest, p);
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = fp::sub(diff[1], 1, p);
    fp::trim(diff);
    fp::Poly g = fp::gcd(rest, diff, p);
    if (g.size() > 1) {
      rest = fp::quotient(rest, g, p);
      blocks.push_back({d, std::move(g)});
    }
  }
  if (rest.size() > 1) blocks.push_back({static_cast<long>(rest.size()) - 1, rest});

  fp::Poly product = {1};
  for (const auto& b : blocks) product = fp::multiply(product, b.product, p);
  if (product != target) throw std::logic_error("distinct-degree blocks do not reconstruct f mod p");
  return blocks;
}

CycleType factor_degrees(const Polynomial& f, std::uint64_t p) {
  CycleType type;
  type.prime = p;
  for (const auto& block : distinct_degree_blocks(f, p)) {
    const long size = static_cast<long>(block.product.size()) - 1;
    if (size % block.degree != 0) throw std::logic_error("degree block size not a multiple of its degree");
    type.degrees.insert(type.degrees.end(), static_cast<std::size_t>(size / block.degree), block.degree);
  }
  std::sort(type.degrees.begin(), type.degrees.end());
  if (type.degree_sum() != f.degree()) throw std::logic_error("factor degrees do not sum to deg f");
  return type;
}

std::set<long> degree_set_filter(const Polynomial& f, std::span<const std::uint64_t> primes) {
  const long n = f.degree();
  if (n < 1) throw DomainError("degree-set filter requires degree >= 1");
  std::vector<bool> allowed(static_cast<std::size_t>(n + 1), true);
  for (std::uint64_t p : primes) {
    std::vector<bool> reachable(static_cast<std::size_t>(n + 1), false);
    reachable[0] = true;
    for (long d : factor_degrees(f, p).degrees) {
      for (long s = n; s >= d; --s) {
        if (reachable[static_cast<std::size_t>(s - d)]) reachable[static_cast<std::size_t>(s)] = true;
      }
    }
    long surviving = 0;
    for (std::size_t s = 0; s < allowed.size(); ++s) {
      allowed[s] = allowed[s] && reachable[s];
      surviving += allowed[s] ? 1 : 0;
    }
    if (surviving == 2) break;  // only 0 and n remain
  }
  std::set<long> out;
  for (std::size_t s = 0; s < allowed.size(); ++s) {
    if (allowed[s]) out.insert(static_cast<long>(s));
  }
  return out;
}

ParityVerdict parity_evidence(std::span<const CycleType> samples) {
  if (samples.empty()) throw DomainError("parity evidence needs at least one sample");
  for (const auto& s : samples) {
    if (!s.is_even()) return ParityVerdict::contains_odd_permutation;
  }
  return ParityVerdict::all_even_so_far;
}

std::vector<std::uint64_t> good_primes(const Polynomial& f, std::size_t count) {
  std::vector<std::uint64_t> out;
  int consecutive_bad = 0;
  for (std::uint64_t p = 2; out.size() < count; ++p) {
    if (!is_prime(p)) continue;
    if (is_good_prime(f, p)) {
      out.push_back(p);
      consecutive_bad = 0;
    } else if (++consecutive_bad >= 1000) {
      throw DomainError("no good primes found; the polynomial appears to have repeated roots");
    }
  }
  return out;
}

std::vector<CycleType> frobenius_samples(const Polynomial& f, std::size_t count) {
  std::vector<CycleType> out;
  for (std::uint64_t p : good_primes(f, count)) out.push_back(factor_degrees(f, p));
  return out;
}

}  // namespace npgal
