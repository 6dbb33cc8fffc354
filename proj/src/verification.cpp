#include "lenshull/verification.hpp"

#include <cmath>
#include <numeric>

namespace lenshull {

SphericalCell spherical_cell(const SupportForm& form) {
  const double n = form.norm();
  if (!(n > 0.0 && form.Z > 0.0)) throw std::invalid_argument("support form is not a cap");
  SphericalCell c;
  c.center_direction = scale4(form.rho(), 1.0 / n);
  const double cosr = form.Z / (std::sqrt(2.0) * n);
  if (!(cosr > 0.0 && cosr < 1.0)) throw std::invalid_argument("cap radius out of range");
  c.angular_radius = std::acos(cosr);
  return c;
}

bool empty_caps_ok(const Triangulation& tri, const Orbit& orbit) {
  for (const auto& f : tri.facets) {
    if (!f.support) return false;
    const SupportForm& s = *f.support;
    for (const auto& pt : orbit.points) {
      const double val = s.eval(pt.coords);
      const bool is_vertex = std::binary_search(f.vertices.begin(), f.vertices.end(), pt.index);
      if (is_vertex) {
        if (std::abs(val - s.Z) > tol::kCellVertex) return false;
      } else {
        if (!(val < s.Z - tol::kStrictMargin)) return false;
      }
    }
  }
  return true;
}

bool VerifyReport::certificates_ok() const {
  if (certificates.empty()) return false;
  for (const auto& c : certificates)
    if (!c.report.all_passed() || !c.solve_agrees) return false;
  return true;
}

bool VerifyReport::ok() const {
  return certificates_ok() && pseudo_manifold && ridge_connected && cells_ok &&
         (!oracle_ran || diff.empty());
}

namespace {

bool forms_agree(const SupportForm& a, const SupportForm& b) {
  // rho is defined up to positive scale; compare unit representatives.
  const double na = a.norm(), nb = b.norm();
  if (!(na > 0.0 && nb > 0.0)) return false;
  const Vec4 ra = scale4(a.rho(), 1.0 / na), rb = scale4(b.rho(), 1.0 / nb);
  for (int i = 0; i < 4; ++i)
    if (std::abs(ra[static_cast<std::size_t>(i)] - rb[static_cast<std::size_t>(i)]) > 1e-8)
      return false;
  return std::abs(a.Z / na - b.Z / nb) <= 1e-8;
}

}  // namespace

VerifyReport verify_spec(const GroupSpec& spec, const VerifyOptions& opts) {
  VerifyReport r;
  r.spec = spec;
  r.tri = predict(spec);
  fill_supports(r.tri);

  for (std::size_t i = 0; i < r.tri.pairs.size(); ++i) {
    PairCertificate pc;
    pc.form = support_form(spec, r.tri.pairs[i]);
    pc.solved_form = support_form_via_linear_system(spec, r.tri.pairs[i]);
    pc.solve_agrees = forms_agree(pc.form, pc.solved_form);
    pc.report = certify_pair(spec, r.tri.pairs[i], static_cast<int>(i), opts.samples);
    r.certificates.push_back(std::move(pc));
  }

  r.pseudo_manifold = is_closed_pseudomanifold(r.tri);
  r.ridge_connected = ridge_graph_connected(r.tri);

  const Orbit orbit = make_orbit(spec);
  r.cells_ok = empty_caps_ok(r.tri, orbit);

  if (opts.with_oracle) {
    if (spec.order() > opts.oracle_cap)
      throw std::invalid_argument("orbit size " + std::to_string(spec.order()) +
                                  " exceeds the oracle cap " + std::to_string(opts.oracle_cap));
    std::vector<Vec4> pts;
    pts.reserve(orbit.points.size());
    for (const auto& p : orbit.points) pts.push_back(p.coords);
    r.oracle = hull(pts, opts.eps, opts.threads);
    r.oracle_ran = true;
    r.diff = compare(r.tri, r.oracle);
  }
  return r;
}

std::vector<GroupSpec> cyclic_grid(Int qmax) {
  std::vector<GroupSpec> out;
  for (Int q = 5; q <= qmax; ++q)
    for (Int p = 2; p <= q - 2; ++p)
      if (std::gcd(p, q) == 1) out.push_back(GroupSpec::make(p, q, 1, 1));
  return out;
}

std::vector<GroupSpec> general_grid(Int orbit_cap) {
  std::vector<GroupSpec> out;
  for (Int q = 2; q <= orbit_cap; ++q)
    for (Int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (Int mu = 1; mu * q <= orbit_cap; ++mu)
        for (Int nu = 1; mu * nu * q <= orbit_cap; ++nu) {
          if (mu == 1 && nu == 1) continue;
          if (classify(p, q, mu, nu) != Degeneracy::Generic) continue;
          out.push_back(GroupSpec::make(p, q, mu, nu));
        }
    }
  return out;
}

}  // namespace lenshull
