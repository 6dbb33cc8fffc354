#include "lenshull/io.hpp"

#include <cmath>
#include <cstdio>

namespace lenshull {

namespace {

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string turn_str(const Turn& t) {
  return std::to_string(t.num) + "/" + std::to_string(t.den);
}

ordered_json coords_json(const Vec4& c, bool unit_sphere) {
  const double s = unit_sphere ? 1.0 / std::sqrt(2.0) : 1.0;
  return ordered_json::array({c[0] * s, c[1] * s, c[2] * s, c[3] * s});
}

ordered_json facet_json(const Facet& f) {
  ordered_json j;
  j["vertices"] = f.vertices;
  j["kind"] = to_string(f.kind);
  j["pair"] = f.pair_index;
  j["gon"] = f.gon;
  if (f.axis) j["axis"] = *f.axis == CellAxis::NuGons ? "nu" : "mu";
  j["translate"] = f.translate;
  if (f.support) {
    const SupportForm& s = *f.support;
    j["support"] = {{"U", s.U}, {"Uprime", s.Uprime}, {"V", s.V}, {"Vprime", s.Vprime}, {"Z", s.Z}};
    const SphericalCell cell = spherical_cell(s);
    j["cell"] = {{"center", ordered_json::array({cell.center_direction[0], cell.center_direction[1],
                                                 cell.center_direction[2], cell.center_direction[3]})},
                 {"radius", cell.angular_radius}};
  }
  return j;
}

}  // namespace

ordered_json to_json(const GroupSpec& spec) {
  return ordered_json{{"p", spec.p},
                      {"q", spec.q},
                      {"mu", spec.mu},
                      {"nu", spec.nu},
                      {"order", spec.order()},
                      {"degeneracy", to_string(spec.degeneracy)}};
}

ordered_json to_json(const FareyPair& P, int index) {
  ordered_json j;
  j["index"] = index;
  j["kind"] = to_string(P.kind);
  j["A"] = P.A.str();
  j["B"] = P.B.str();
  j["a"] = P.a;
  j["b"] = P.b;
  j["a_prime"] = P.a_prime;
  j["b_prime"] = P.b_prime;
  j["x"] = P.x;
  j["y"] = P.y;
  j["x_prime"] = P.x_prime;
  j["y_prime"] = P.y_prime;
  return j;
}

ordered_json to_json(const CertificateReport& r) {
  ordered_json j;
  j["pair"] = r.pair_index;
  j["det_M"] = r.det_direct;
  j["det_factored"] = r.det_factored;
  j["Z"] = r.z_closed_form;
  j["det_nonzero"] = r.det_nonzero;
  j["det_forms_agree"] = r.det_forms_agree;
  j["z_positive"] = r.z_positive;
  j["z_upper"] = r.z_upper;
  j["z_lower"] = r.z_lower;
  j["z_forms_agree"] = r.z_forms_agree;
  j["max_at_center"] = r.max_at_center;
  j["factor_one_nonzero"] = r.factor_one_nonzero;
  j["factor_two_nonzero"] = r.factor_two_nonzero;
  j["sineratio_i"] = r.sineratio_i;
  j["sineratio_ii"] = r.sineratio_ii;
  j["enfin_int_i"] = r.enfin_int_i;
  j["enfin_int_ii"] = r.enfin_int_ii;
  j["enfin_ratio_i"] = r.enfin_ratio_i;
  j["enfin_ratio_ii"] = r.enfin_ratio_ii;
  j["level_curve_ok"] = r.level_curve_ok;
  j["lattice_ok"] = r.lattice_ok;
  j["lattice_margin"] = r.lattice_margin;
  j["all_passed"] = r.all_passed();
  return j;
}

ordered_json triangulation_json(const Triangulation& tri, const Orbit& orbit, bool unit_sphere) {
  ordered_json j;
  j["spec"] = to_json(tri.spec);
  ordered_json pairs = ordered_json::array();
  for (std::size_t i = 0; i < tri.pairs.size(); ++i)
    pairs.push_back(to_json(tri.pairs[i], static_cast<int>(i)));
  j["pairs"] = std::move(pairs);

  ordered_json points = ordered_json::array();
  for (const auto& p : orbit.points)
    points.push_back(ordered_json{{"index", p.index},
                                  {"s", turn_str(p.angles.s)},
                                  {"t", turn_str(p.angles.t)},
                                  {"coords", coords_json(p.coords, unit_sphere)}});
  j["points"] = std::move(points);

  ordered_json facets = ordered_json::array();
  for (const auto& f : tri.facets) facets.push_back(facet_json(f));
  j["facets"] = std::move(facets);

  ordered_json ridges = ordered_json::array();
  for (const auto& [verts, inc] : tri.ridges)
    ridges.push_back(ordered_json{{"vertices", verts}, {"facets", inc}});
  j["ridges"] = std::move(ridges);
  return j;
}

ordered_json report_json(const VerifyReport& r, const Orbit& orbit, bool unit_sphere) {
  ordered_json j = triangulation_json(r.tri, orbit, unit_sphere);
  ordered_json rep;
  rep["pseudo_manifold"] = r.pseudo_manifold;
  rep["ridge_connected"] = r.ridge_connected;
  rep["empty_caps"] = r.cells_ok;
  ordered_json certs = ordered_json::array();
  for (const auto& c : r.certificates) {
    ordered_json cj = to_json(c.report);
    cj["solve_agrees"] = c.solve_agrees;
    certs.push_back(std::move(cj));
  }
  rep["certificates"] = std::move(certs);
  rep["facets"] = static_cast<Int>(r.tri.facets.size());
  if (r.oracle_ran) {
    rep["oracle"] = ordered_json{{"dimension", r.oracle.dimension},
                                 {"facets", static_cast<Int>(r.oracle.facets.size())}};
    rep["diff"] = ordered_json{{"predicted_only", r.diff.predicted_only},
                               {"oracle_only", r.diff.oracle_only}};
  } else {
    rep["oracle"] = nullptr;
    rep["diff"] = nullptr;
  }
  rep["ok"] = r.ok();
  j["report"] = std::move(rep);
  return j;
}

std::string to_off4(const Triangulation& tri, const Orbit& orbit, bool unit_sphere) {
  const double s = unit_sphere ? 1.0 / std::sqrt(2.0) : 1.0;
  std::string out = "4OFF\n";
  out += std::to_string(orbit.points.size()) + " " + std::to_string(tri.facets.size()) + " 0\n";
  for (const auto& p : orbit.points) {
    out += g17(p.coords[0] * s);
    for (int i = 1; i < 4; ++i) out += " " + g17(p.coords[static_cast<std::size_t>(i)] * s);
    out += "\n";
  }
  for (const auto& f : tri.facets) {
    out += std::to_string(f.vertices.size());
    for (Int v : f.vertices) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string to_csv(const Triangulation& tri) {
  std::string out = "kind,gon,vertices,Z,angular_radius\n";
  for (const auto& f : tri.facets) {
    out += to_string(f.kind);
    out += "," + std::to_string(f.gon) + ",";
    for (std::size_t i = 0; i < f.vertices.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(f.vertices[i]);
    }
    if (f.support) {
      const SphericalCell cell = spherical_cell(*f.support);
      out += "," + g17(f.support->Z) + "," + g17(cell.angular_radius);
    } else {
      out += ",,";
    }
    out += "\n";
  }
  return out;
}

}  // namespace lenshull
