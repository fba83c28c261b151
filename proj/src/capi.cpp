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

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "npgal/certify.hpp"
#include "npgal/glp.hpp"
#include "npgal/modp.hpp"
#include "npgal/newton.hpp"
#include "npgal/npgal.h"
#include "npgal/poly.hpp"
#include "npgal/render.hpp"

struct npgal_poly {
  npgal::Polynomial value;
};
struct npgal_polygon {
  npgal::NewtonPolygon value;
};
struct npgal_certificate {
  npgal::GaloisCertificate value;
};
struct npgal_classification {
  npgal::Classification value;
};

namespace {

thread_local std::string last_error;

npgal_status fail(npgal_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
npgal_status guarded(Fn&& fn) {
  try {
    fn();
    return NPGAL_OK;
  } catch (const npgal::ParseError& e) {
    return fail(NPGAL_ERR_PARSE, e.what());
  } catch (const npgal::DomainError& e) {
    return fail(NPGAL_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NPGAL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NPGAL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NPGAL_ERR_INTERNAL, "unknown error");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string render_json_or_text(const npgal::render::Json& json, const std::string& text, npgal_format format) {
  return format == NPGAL_FORMAT_JSON ? json.dump() + "\n" : text;
}

npgal::Integer parse_prime(const char* text) {
  const auto p = npgal::parse_integer(text);
  if (p < 2) throw npgal::DomainError(std::string(text) + " is not prime");
  return p;
}

std::uint64_t parse_word_prime(const char* text) {
  const auto p = parse_prime(text);
  if (!mpz_fits_ulong_p(p.get_mpz_t())) throw npgal::DomainError("prime out of range");
  return p.get_ui();
}

std::vector<npgal::Rational> parse_shifts(const char* text) {
  if (!text || !*text) return {npgal::Rational(0)};
  std::vector<npgal::Rational> out;
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(npgal::parse_rational(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

npgal::IrreducibilityDeclaration declaration(npgal_irreducibility i) {
  return i == NPGAL_IRREDUCIBILITY_ASSERTED ? npgal::IrreducibilityDeclaration::asserted
                                            : npgal::IrreducibilityDeclaration::verify_only;
}

npgal::GlpParams glp_params(int64_t n, const char* alpha) {
  return npgal::GlpParams::make(static_cast<long>(n), npgal::parse_rational(alpha));
}

#define NPGAL_REQUIRE(cond)                                                     \
  do {                                                                          \
    if (!(cond)) return fail(NPGAL_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* npgal_version(void) { return "1.0.0"; }

const char* npgal_last_error(void) { return last_error.c_str(); }

void npgal_string_free(char* s) { std::free(s); }

npgal_status npgal_poly_parse(const char* text, npgal_poly** out) {
  NPGAL_REQUIRE(text && out);
  return guarded([&] { *out = new npgal_poly{npgal::parse_polynomial(text)}; });
}

npgal_status npgal_poly_glp_normalized(int64_t n, const char* alpha, npgal_poly** out) {
  NPGAL_REQUIRE(alpha && out);
  return guarded([&] { *out = new npgal_poly{npgal::glp_normalized(glp_params(n, alpha))}; });
}

void npgal_poly_free(npgal_poly* poly) { delete poly; }

npgal_status npgal_poly_degree(const npgal_poly* poly, int64_t* out) {
  NPGAL_REQUIRE(poly && out);
  *out = poly->value.degree();
  return NPGAL_OK;
}

npgal_status npgal_poly_render(const npgal_poly* poly, char** out) {
  NPGAL_REQUIRE(poly && out);
  return guarded([&] { *out = duplicate(npgal::render_polynomial(poly->value)); });
}

npgal_status npgal_poly_discriminant(const npgal_poly* poly, char** out) {
  NPGAL_REQUIRE(poly && out);
  return guarded([&] { *out = duplicate(npgal::to_string(npgal::discriminant(poly->value))); });
}

npgal_status npgal_newton_polygon(const npgal_poly* poly, const char* prime, npgal_polygon** out) {
  NPGAL_REQUIRE(poly && prime && out);
  return guarded([&] { *out = new npgal_polygon{npgal::newton_polygon(poly->value, parse_prime(prime))}; });
}

void npgal_polygon_free(npgal_polygon* polygon) { delete polygon; }

npgal_status npgal_polygon_segment_count(const npgal_polygon* polygon, size_t* out) {
  NPGAL_REQUIRE(polygon && out);
  *out = polygon->value.segments.size();
  return NPGAL_OK;
}

npgal_status npgal_polygon_segment(const npgal_polygon* polygon, size_t index, char** slope, int64_t* length,
                                   int64_t from[2], int64_t to[2]) {
  NPGAL_REQUIRE(polygon && slope && length && from && to);
  NPGAL_REQUIRE(index < polygon->value.segments.size());
  return guarded([&] {
    const auto& s = polygon->value.segments[index];
    *slope = duplicate(npgal::to_string(s.slope));
    *length = s.length;
    from[0] = s.from.x;
    from[1] = s.from.y;
    to[0] = s.to.x;
    to[1] = s.to.y;
  });
}

npgal_status npgal_polygon_render(const npgal_polygon* polygon, npgal_format format, char** out) {
  NPGAL_REQUIRE(polygon && out);
  return guarded([&] {
    *out = duplicate(render_json_or_text(npgal::render::polygon_json(polygon->value),
                                         npgal::render::polygon_text(polygon->value), format));
  });
}

npgal_status npgal_newton_index(const npgal_poly* poly, npgal_format format, char** index_out, char** rendered) {
  NPGAL_REQUIRE(poly && (index_out || rendered));
  return guarded([&] {
    const auto report = npgal::newton_index(poly->value);
    char* index = duplicate(npgal::to_string(report.index));
    char* text = nullptr;
    if (rendered) {
      try {
        text = duplicate(render_json_or_text(npgal::render::index_json(report), npgal::render::index_text(report),
                                             format));
      } catch (...) {
        std::free(index);
        throw;
      }
    }
    if (index_out) {
      *index_out = index;
    } else {
      std::free(index);
    }
    if (rendered) *rendered = text;
  });
}

npgal_status npgal_certify(const npgal_poly* poly, const char* shifts, npgal_irreducibility irreducibility,
                           npgal_certificate** out) {
  NPGAL_REQUIRE(poly && out);
  return guarded([&] {
    const auto list = parse_shifts(shifts);
    *out = new npgal_certificate{npgal::certify_large_galois(poly->value, list, declaration(irreducibility))};
  });
}

void npgal_certificate_free(npgal_certificate* cert) { delete cert; }

npgal_status npgal_certificate_verdict(const npgal_certificate* cert, npgal_verdict* out) {
  NPGAL_REQUIRE(cert && out);
  switch (cert->value.verdict) {
    case npgal::Verdict::contains_An:
      *out = NPGAL_VERDICT_CONTAINS_AN;
      break;
    case npgal::Verdict::index_divides_order_only:
      *out = NPGAL_VERDICT_INDEX_DIVIDES_ORDER_ONLY;
      break;
    case npgal::Verdict::inconclusive:
      *out = NPGAL_VERDICT_INCONCLUSIVE;
      break;
  }
  return NPGAL_OK;
}

npgal_status npgal_certificate_render(const npgal_certificate* cert, npgal_format format, char** out) {
  NPGAL_REQUIRE(cert && out);
  return guarded([&] {
    *out = duplicate(render_json_or_text(npgal::render::certificate_json(cert->value),
                                         npgal::render::certificate_text(cert->value), format));
  });
}

npgal_status npgal_frobenius(const npgal_poly* poly, const char* prime, size_t samples, npgal_format format,
                             char** out) {
  NPGAL_REQUIRE(poly && out);
  NPGAL_REQUIRE(prime || samples > 0);
  return guarded([&] {
    const auto& f = poly->value;
    std::vector<std::uint64_t> primes;
    if (prime) {
      primes.push_back(parse_word_prime(prime));
    } else {
      primes = npgal::good_primes(f, samples);
    }
    std::vector<npgal::CycleType> types;
    for (auto p : primes) types.push_back(npgal::factor_degrees(f, p));
    const auto degrees = npgal::degree_set_filter(f, primes);
    *out = duplicate(render_json_or_text(npgal::render::frobenius_json(types, degrees),
                                         npgal::render::frobenius_text(types, degrees), format));
  });
}

npgal_status npgal_glp_classify(int64_t n, const char* alpha, npgal_irreducibility irreducibility,
                                size_t frobenius_samples, npgal_classification** out) {
  NPGAL_REQUIRE(alpha && out);
  return guarded([&] {
    npgal::ClassifyOptions options;
    options.irreducibility = declaration(irreducibility);
    options.frobenius_samples = frobenius_samples;
    *out = new npgal_classification{npgal::classify(glp_params(n, alpha), options)};
  });
}

void npgal_classification_free(npgal_classification* c) { delete c; }

npgal_status npgal_classification_group(const npgal_classification* c, npgal_group* out) {
  NPGAL_REQUIRE(c && out);
  switch (c->value.group) {
    case npgal::GaloisGroup::alternating:
      *out = NPGAL_GROUP_ALTERNATING;
      break;
    case npgal::GaloisGroup::symmetric:
      *out = NPGAL_GROUP_SYMMETRIC;
      break;
    case npgal::GaloisGroup::inconclusive:
      *out = NPGAL_GROUP_INCONCLUSIVE;
      break;
  }
  return NPGAL_OK;
}

npgal_status npgal_classification_criterion_prime(const npgal_classification* c, int64_t* out) {
  NPGAL_REQUIRE(c && out);
  *out = c->value.criterion ? c->value.criterion->p : 0;
  return NPGAL_OK;
}

npgal_status npgal_classification_render(const npgal_classification* c, npgal_format format, char** out) {
  NPGAL_REQUIRE(c && out);
  return guarded([&] {
    *out = duplicate(render_json_or_text(npgal::render::classification_json(c->value),
                                         npgal::render::classification_text(c->value), format));
  });
}

npgal_status npgal_glp_discriminant(int64_t n, const char* alpha, int verify, npgal_format format, char** out) {
  NPGAL_REQUIRE(alpha && out);
  return guarded([&] {
    const auto params = glp_params(n, alpha);
    npgal::render::DiscriminantReport report;
    report.discriminant = npgal::schur_discriminant(params);
    report.square = npgal::is_rational_square(report.discriminant);
    if (verify) {
      const auto monic = npgal::glp_monic(params);
      report.verified = monic.degree() < 1 ? report.discriminant == 1
                                           : npgal::discriminant(monic) == report.discriminant;
    }
    *out = duplicate(render_json_or_text(npgal::render::discriminant_json(report),
                                         npgal::render::discriminant_text(report), format));
  });
}

}  // extern "C"
