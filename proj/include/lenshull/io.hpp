#pragma once

#include <json.hpp>
#include <string>

#include "lenshull/verification.hpp"

namespace lenshull {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const GroupSpec& spec);
ordered_json to_json(const FareyPair& pair, int index);
ordered_json to_json(const CertificateReport& report);

// The triangulation document: spec, pairs, points, facets (with support
// and spherical cell when filled), ridges.
ordered_json triangulation_json(const Triangulation& tri, const Orbit& orbit, bool unit_sphere);

// The triangulation document extended with the verification report.
ordered_json report_json(const VerifyReport& report, const Orbit& orbit, bool unit_sphere);

// 4-dimensional OFF: "4OFF" header, vertex coordinates at 17 significant
// digits, one facet line per facet.
std::string to_off4(const Triangulation& tri, const Orbit& orbit, bool unit_sphere);

// Facet table: kind, gon, vertices, support level, cap radius.
std::string to_csv(const Triangulation& tri);

}  // namespace lenshull
