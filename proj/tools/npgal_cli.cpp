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

// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "npgal/npgal.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Failure {
  npgal_status status;
  std::string message;
};

int exit_code(npgal_status s) { return s == NPGAL_ERR_PARSE || s == NPGAL_ERR_INVALID_ARGUMENT ? kExitUsage : kExitDomain; }

void check(npgal_status s) {
  if (s != NPGAL_OK) throw Failure{s, npgal_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { npgal_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <typename T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* h) const { Free(h); }
};
using Poly = std::unique_ptr<npgal_poly, HandleDeleter<npgal_poly, npgal_poly_free>>;
using Polygon = std::unique_ptr<npgal_polygon, HandleDeleter<npgal_polygon, npgal_polygon_free>>;
using Certificate = std::unique_ptr<npgal_certificate, HandleDeleter<npgal_certificate, npgal_certificate_free>>;
using Classification =
    std::unique_ptr<npgal_classification, HandleDeleter<npgal_classification, npgal_classification_free>>;

npgal_format format_of(bool json) { return json ? NPGAL_FORMAT_JSON : NPGAL_FORMAT_TEXT; }

npgal_irreducibility irreducibility_of(bool asserted) {
  return asserted ? NPGAL_IRREDUCIBILITY_ASSERTED : NPGAL_IRREDUCIBILITY_VERIFY;
}

Poly parse_poly(const std::string& text) {
  npgal_poly* raw = nullptr;
  check(npgal_poly_parse(text.c_str(), &raw));
  return Poly(raw);
}

std::string classify_one(std::int64_t n, const std::string& alpha, bool assume, std::size_t samples,
                         npgal_format format) {
  npgal_classification* raw = nullptr;
  check(npgal_glp_classify(n, alpha.c_str(), irreducibility_of(assume), samples, &raw));
  Classification c(raw);
  char* out = nullptr;
  check(npgal_classification_render(c.get(), format, &out));
  return OwnedString(out).get();
}

std::string shift_scan(long bound) {
  std::string out = "0";
  for (long k = 1; k <= bound; ++k) out += "," + std::to_string(k) + "," + std::to_string(-k);
  return out;
}

// Classifies n_from..n_to on a worker pool and prints one JSON object per
// line in ascending n as soon as each prefix is complete.
int run_scan(std::int64_t n_from, std::int64_t n_to, const std::string& alpha, bool assume, std::size_t samples,
             unsigned jobs) {
  if (n_from > n_to) throw Failure{NPGAL_ERR_INVALID_ARGUMENT, "--n-from must not exceed --n-to"};
  const auto count = static_cast<std::size_t>(n_to - n_from + 1);
  std::vector<std::optional<std::string>> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> any_error{false};
  std::mutex mutex;
  std::condition_variable ready;

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const std::int64_t n = n_from + static_cast<std::int64_t>(i);
      std::string line;
      try {
        line = classify_one(n, alpha, assume, samples, NPGAL_FORMAT_JSON);
      } catch (const Failure& f) {
        any_error = true;
        std::string escaped;
        for (char ch : f.message) {
          if (ch == '"' || ch == '\\') escaped += '\\';
          escaped += ch;
        }
        line = "{\"n\":" + std::to_string(n) + ",\"alpha\":\"" + alpha + "\",\"error\":\"" + escaped + "\"}\n";
      }
      {
        std::lock_guard lock(mutex);
        results[i] = std::move(line);
      }
      ready.notify_one();
    }
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::jthread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (std::size_t i = 0; i < count; ++i) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return results[i].has_value(); });
    std::cout << *results[i] << std::flush;
    results[i] = std::string();
  }
  return any_error ? kExitDomain : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"npgal: Newton polygons, Newton indices and large Galois group certificates"};
  app.require_subcommand(1);

  std::string poly;
  std::string prime;
  std::string shifts;
  std::string alpha;
  std::int64_t n = 0;
  std::int64_t n_from = 0;
  std::int64_t n_to = 0;
  long shift_bound = -1;
  bool json = false;
  bool assume = false;
  bool verify = false;
  std::size_t samples = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* np = app.add_subcommand("np", "Newton polygon of a polynomial at a prime");
  np->add_option("--poly", poly, "ascending coefficients, e.g. 6,18,9,1")->required();
  np->add_option("--prime", prime, "prime p")->required();
  np->add_flag("--json", json);

  auto* index = app.add_subcommand("index", "Newton index over all primes");
  index->add_option("--poly", poly)->required();
  index->add_flag("--json", json);

  auto* certify = app.add_subcommand("certify", "large Galois group certificate");
  certify->add_option("--poly", poly)->required();
  auto* shifts_opt = certify->add_option("--shifts", shifts, "comma-separated rational shifts (default 0)");
  certify->add_option("--shift-scan", shift_bound, "scan integer shifts 0, 1, -1, ..., B, -B")
      ->check(CLI::NonNegativeNumber)
      ->excludes(shifts_opt);
  certify->add_flag("--assume-irreducible", assume);
  certify->add_flag("--json", json);

  auto* frobenius = app.add_subcommand("frobenius", "cycle types of Frobenius elements at good primes");
  frobenius->add_option("--poly", poly)->required();
  auto* prime_opt = frobenius->add_option("--prime", prime, "a single good prime");
  frobenius->add_option("--frobenius-samples", samples, "number of good primes to sample (default 10)")
      ->excludes(prime_opt);
  frobenius->add_flag("--json", json);

  auto* classify = app.add_subcommand("glp-classify", "A_n / S_n decision for a generalized Laguerre polynomial");
  classify->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  classify->add_option("--alpha", alpha, "integer or lambda/mu")->required();
  classify->add_flag("--assume-irreducible", assume);
  classify->add_option("--frobenius-samples", samples, "good primes to sample for parity evidence");
  classify->add_flag("--json", json);

  auto* disc = app.add_subcommand("glp-disc", "Schur discriminant of a generalized Laguerre polynomial");
  disc->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  disc->add_option("--alpha", alpha)->required();
  disc->add_flag("--verify-resultant", verify);
  disc->add_flag("--json", json);

  auto* scan = app.add_subcommand("glp-scan", "classify a range of degrees, one JSON object per line");
  scan->add_option("--n-from", n_from)->required()->check(CLI::PositiveNumber);
  scan->add_option("--n-to", n_to)->required()->check(CLI::PositiveNumber);
  scan->add_option("--alpha", alpha)->required();
  scan->add_flag("--assume-irreducible", assume);
  scan->add_option("--frobenius-samples", samples);
  scan->add_option("--jobs", jobs, "worker threads (default: number of processors)")->check(CLI::PositiveNumber);
  scan->add_flag("--json", json, "accepted for symmetry; output is always JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const npgal_format format = format_of(json);
    char* raw = nullptr;
    if (*np) {
      const Poly f = parse_poly(poly);
      npgal_polygon* polygon = nullptr;
      check(npgal_newton_polygon(f.get(), prime.c_str(), &polygon));
      const Polygon owned(polygon);
      check(npgal_polygon_render(owned.get(), format, &raw));
    } else if (*index) {
      const Poly f = parse_poly(poly);
      check(npgal_newton_index(f.get(), format, nullptr, &raw));
    } else if (*certify) {
      const Poly f = parse_poly(poly);
      const std::string list = shift_bound >= 0 ? shift_scan(shift_bound) : shifts;
      npgal_certificate* cert = nullptr;
      check(npgal_certify(f.get(), list.c_str(), irreducibility_of(assume), &cert));
      const Certificate owned(cert);
      check(npgal_certificate_render(owned.get(), format, &raw));
    } else if (*frobenius) {
      const Poly f = parse_poly(poly);
      const std::size_t k = samples > 0 ? samples : 10;
      check(npgal_frobenius(f.get(), prime.empty() ? nullptr : prime.c_str(), k, format, &raw));
    } else if (*classify) {
      std::cout << classify_one(n, alpha, assume, samples, format);
      return 0;
    } else if (*disc) {
      check(npgal_glp_discriminant(n, alpha.c_str(), verify ? 1 : 0, format, &raw));
    } else if (*scan) {
      return run_scan(n_from, n_to, alpha, assume, samples, jobs);
    }
    std::cout << OwnedString(raw).get();
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return exit_code(f.status);
  }
}
