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

#include "npgal/render.hpp"

#include <sstream>

namespace npgal::render {
namespace {

std::string point_text(const LatticePoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

Json point_json(const LatticePoint& p) { return Json::array({p.x, p.y}); }

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string_view parity_name(ParityVerdict v) {
  return v == ParityVerdict::contains_odd_permutation ? "contains_odd_permutation" : "all_even_so_far";
}

Json optional_integer(const std::optional<Integer>& z) { return z ? integer(*z) : Json(nullptr); }

template <typename Range>
std::string bracketed(const Range& items) {
  std::string out = "[";
  bool first = true;
  for (const auto& x : items) {
    if (!first) out += ',';
    out += x;
    first = false;
  }
  return out + "]";
}

}  // namespace

Json integer(const Integer& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return Json(z.get_si());
  return Json(to_string(z));
}

Json polygon_json(const NewtonPolygon& np) {
  Json segments = Json::array();
  for (const auto& s : np.segments) {
    segments.push_back({{"slope", to_string(s.slope)},
                        {"length", s.length},
                        {"from", point_json(s.from)},
                        {"to", point_json(s.to)}});
  }
  Json vertices = Json::array();
  for (const auto& v : np.vertices) vertices.push_back(point_json(v));
  return {{"prime", integer(np.prime)}, {"segments", segments}, {"vertices", vertices}};
}

std::string polygon_text(const NewtonPolygon& np) {
  std::string out = "prime=" + to_string(np.prime) + "\n";
  for (const auto& s : np.segments) {
    out += "slope=" + to_string(s.slope) + " length=" + std::to_string(s.length) + " from=" + point_text(s.from) +
           " to=" + point_text(s.to) + "\n";
  }
  out += "vertices=";
  for (std::size_t i = 0; i < np.vertices.size(); ++i) {
    if (i) out += ' ';
    out += point_text(np.vertices[i]);
  }
  return out + "\n";
}

Json index_json(const NewtonIndexReport& report) {
  Json witnesses = Json::array();
  for (const auto& [p, slopes] : report.witnesses) {
    Json s = Json::array();
    for (const auto& q : slopes) s.push_back(to_string(q));
    witnesses.push_back({{"prime", integer(p)}, {"slopes", s}});
  }
  return {{"index", integer(report.index)}, {"x_power", report.x_power}, {"witnesses", witnesses}};
}

std::string index_text(const NewtonIndexReport& report) {
  std::string out = "index=" + to_string(report.index) + "\n";
  out += "x_power=" + std::to_string(report.x_power) + "\n";
  for (const auto& [p, slopes] : report.witnesses) {
    std::vector<std::string> s;
    for (const auto& q : slopes) s.push_back(to_string(q));
    out += "p=" + to_string(p) + " slopes=" + bracketed(s) + "\n";
  }
  return out;
}

Json certificate_json(const GaloisCertificate& cert) {
  return {{"verdict", std::string(to_string(cert.verdict))},
          {"n", cert.n},
          {"shift", to_string(cert.shift_used)},
          {"valuation_prime", optional_integer(cert.valuation_prime)},
          {"slope", cert.slope ? Json(to_string(*cert.slope)) : Json(nullptr)},
          {"window_prime", optional_integer(cert.window_prime)},
          {"newton_index", integer(cert.newton_index)},
          {"irreducibility_basis", std::string(to_string(cert.irreducibility_basis))}};
}

std::string certificate_text(const GaloisCertificate& cert, std::string_view prefix) {
  const Json j = certificate_json(cert);
  std::string out;
  for (const auto& [key, value] : j.items()) {
    out += std::string(prefix) + key + "=" + scalar_text(value) + "\n";
  }
  return out;
}

std::string cycle_type_line(const CycleType& t) {
  std::vector<std::string> d;
  for (long x : t.degrees) d.push_back(std::to_string(x));
  return "p=" + std::to_string(t.prime) + " type=" + bracketed(d) + " parity=" + (t.is_even() ? "even" : "odd");
}

Json frobenius_json(std::span<const CycleType> samples, const std::set<long>& degree_set) {
  Json s = Json::array();
  for (const auto& t : samples) {
    s.push_back({{"prime", t.prime}, {"type", t.degrees}, {"parity", t.is_even() ? "even" : "odd"}});
  }
  return {{"samples", s},
          {"parity_evidence", std::string(parity_name(parity_evidence(samples)))},
          {"degree_set", degree_set}};
}

std::string frobenius_text(std::span<const CycleType> samples, const std::set<long>& degree_set) {
  std::string out;
  for (const auto& t : samples) out += cycle_type_line(t) + "\n";
  out += "parity_evidence=" + std::string(parity_name(parity_evidence(samples))) + "\n";
  std::vector<std::string> d;
  for (long x : degree_set) d.push_back(std::to_string(x));
  return out + "degree_set=" + bracketed(d) + "\n";
}

Json classification_json(const Classification& c) {
  Json out = {{"n", c.params.n()},
              {"alpha", to_string(c.params.alpha())},
              {"group", std::string(to_string(c.group))},
              {"disc_is_square", c.discriminant_is_square},
              {"criterion_prime", c.criterion ? Json(c.criterion->p) : Json(nullptr)},
              {"ell", c.criterion ? Json(c.criterion->ell) : Json(nullptr)},
              {"certificate", certificate_json(c.certificate)},
              {"irreducibility_basis", std::string(to_string(c.certificate.irreducibility_basis))}};
  if (c.parity) {
    Json s = Json::array();
    for (const auto& t : c.frobenius) {
      s.push_back({{"prime", t.prime}, {"type", t.degrees}, {"parity", t.is_even() ? "even" : "odd"}});
    }
    out["frobenius"] = {{"samples", s}, {"parity_evidence", std::string(parity_name(*c.parity))}};
  }
  return out;
}

std::string classification_text(const Classification& c) {
  const Json j = classification_json(c);
  std::string out;
  for (const auto& [key, value] : j.items()) {
    if (key == "certificate" || key == "frobenius") continue;
    out += key + "=" + scalar_text(value) + "\n";
  }
  out += certificate_text(c.certificate, "certificate.");
  if (c.parity) {
    for (const auto& t : c.frobenius) out += "frobenius " + cycle_type_line(t) + "\n";
    out += "frobenius.parity_evidence=" + std::string(parity_name(*c.parity)) + "\n";
  }
  return out;
}

Json discriminant_json(const DiscriminantReport& d) {
  Json out = {{"discriminant", to_string(d.discriminant)},
              {"square", d.square}};
  if (d.verified) out["verified"] = *d.verified;
  return out;
}

std::string discriminant_text(const DiscriminantReport& d) {
  std::string out = to_string(d.discriminant) + " square=" + (d.square ? "true" : "false");
  if (d.verified) out += std::string(" verified=") + (*d.verified ? "true" : "false");
  return out + "\n";
}

}  // namespace npgal::render
