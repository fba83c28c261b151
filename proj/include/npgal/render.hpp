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

#ifndef NPGAL_RENDER_HPP
#define NPGAL_RENDER_HPP

#include <set>
#include <span>
#include <string>

#include <json.hpp>

#include "npgal/certify.hpp"
#include "npgal/glp.hpp"
#include "npgal/modp.hpp"
#include "npgal/newton.hpp"

// Text and JSON renderings used by the C API and the CLI. Each text form
// carries exactly the fields of its JSON form. Integers that fit in 64 bits
// are JSON numbers, larger ones JSON strings; rationals are always "a/b"
// strings.

namespace npgal::render {

using Json = nlohmann::ordered_json;

Json integer(const Integer& z);

Json polygon_json(const NewtonPolygon& np);
std::string polygon_text(const NewtonPolygon& np);

Json index_json(const NewtonIndexReport& report);
std::string index_text(const NewtonIndexReport& report);

Json certificate_json(const GaloisCertificate& cert);
std::string certificate_text(const GaloisCertificate& cert, std::string_view prefix = "");

/// "p=<prime> type=[d1,d2,...] parity=<even|odd>"
std::string cycle_type_line(const CycleType& t);

Json frobenius_json(std::span<const CycleType> samples, const std::set<long>& degree_set);
std::string frobenius_text(std::span<const CycleType> samples, const std::set<long>& degree_set);

Json classification_json(const Classification& c);
std::string classification_text(const Classification& c);

struct DiscriminantReport {
  Rational discriminant;
  bool square = false;
  std::optional<bool> verified;
};
Json discriminant_json(const DiscriminantReport& d);
/// "<disc> square=<bool>[ verified=<bool>]"
std::string discriminant_text(const DiscriminantReport& d);

}  // namespace npgal::render

#endif  // NPGAL_RENDER_HPP
