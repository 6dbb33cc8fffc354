#include "lenshull/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace lenshull {

namespace {

constexpr double kPi = std::numbers::pi;

struct CellTrig {
  // Angles u = pi/(mu q) on the first factor, v = pi/(nu q) on the second.
  double Ca, Sa, Cb, Sb;      // cos/sin of a u, b u
  double Cap, Sap, Cbp, Sbp;  // cos/sin of a' v, b' v
};

CellTrig cell_trig(const GroupSpec& spec, const FareyPair& P) {
  const double u = kPi / static_cast<double>(spec.mu * spec.q);
  const double v = kPi / static_cast<double>(spec.nu * spec.q);
  CellTrig t;
  t.Ca = std::cos(P.a * u);
  t.Sa = std::sin(P.a * u);
  t.Cb = std::cos(P.b * u);
  t.Sb = std::sin(P.b * u);
  t.Cap = std::cos(P.a_prime * v);
  t.Sap = std::sin(P.a_prime * v);
  t.Cbp = std::cos(P.b_prime * v);
  t.Sbp = std::sin(P.b_prime * v);
  return t;
}

std::array<Vec4, 4> cell_matrix(const GroupSpec& spec, const FareyPair& P) {
  const auto corners = tetra_corner_angles(spec, P);
  return {embed(corners[0]), embed(corners[1]), embed(corners[2]), embed(corners[3])};
}

}  // namespace

SupportForm SupportForm::rotated(const TorusPoint& g) const {
  const double cu = std::cos(g.s.radians()), su = std::sin(g.s.radians());
  const double cv = std::cos(g.t.radians()), sv = std::sin(g.t.radians());
  SupportForm r;
  r.U = U * cu - Uprime * su;
  r.Uprime = U * su + Uprime * cu;
  r.V = V * cv - Vprime * sv;
  r.Vprime = V * sv + Vprime * cv;
  r.Z = Z;
  return r;
}

DetResult det_m(const GroupSpec& spec, const FareyPair& P) {
  const auto M = cell_matrix(spec, P);
  DetResult r;
  r.direct = det4(M[0], M[1], M[2], M[3]);

  const CellTrig t = cell_trig(spec, P);
  const double f1 = t.Ca * t.Cb * t.Sap * t.Sbp + t.Sa * t.Sb * t.Cap * t.Cbp;
  const double f2 = t.Sa * t.Cb * t.Sbp * t.Cap + t.Sb * t.Ca * t.Sap * t.Cbp;
  r.factored = 16.0 * f1 * f2;

  const double scale = std::max(std::abs(r.direct), std::abs(r.factored));
  if (std::abs(std::abs(r.direct) - std::abs(r.factored)) > tol::kDetFormsRel * scale)
    throw InvariantViolation("determinant routes disagree for pair " + P.A.str() + "," + P.B.str());
  return r;
}

SupportForm support_form(const GroupSpec& spec, const FareyPair& P) {
  const Int p = spec.p, q = spec.q, mu = spec.mu, nu = spec.nu;
  const double u = kPi / static_cast<double>(mu * q);
  const double v = kPi / static_cast<double>(nu * q);
  const double da = static_cast<double>(P.a * p - P.alpha * q);
  const double db = static_cast<double>(P.b * p - P.beta * q);

  SupportForm f;
  const double sp = std::sin(da * v) * std::sin(db * v);  // negative: da, db oppose
  const double s = std::sin(P.a * u) * std::sin(P.b * u);
  f.U = -std::cos(P.x * u) * sp;
  f.Uprime = -std::sin(P.x * u) * sp;
  f.V = std::cos((da + db) * v) * s;
  f.Vprime = std::sin((da + db) * v) * s;
  f.Z = std::cos((da + db) * v) * s - std::cos(P.x * u) * sp;

  // Cross-check 1: the half-cosine closed form.
  const double z_alt = 0.5 * (std::cos(P.x_prime * v) * std::cos(P.y * u) -
                              std::cos(P.x * u) * std::cos(P.y_prime * v));
  if (std::abs(f.Z - z_alt) > tol::kZForms * std::max({std::abs(f.Z), std::abs(z_alt), 1e-30}))
    throw InvariantViolation("the two closed forms of Z disagree");

  // Cross-check 2: rho takes the value Z on all four cell vertices.
  for (const auto& x : cell_matrix(spec, P))
    if (std::abs(f.eval(x) - f.Z) > tol::kSupportVertex)
      throw InvariantViolation("support form misses a cell vertex");

  // Cross-check 3: the triangle inequalities and positivity.
  const double udd = f.Udd(), vdd = f.Vdd();
  if (!(f.Z > 0.0 && std::abs(vdd - udd) < f.Z && f.Z < vdd + udd))
    throw InvariantViolation("support level violates the triangle bounds");

  // Cross-check 4: the cap center attains the absolute maximum U'' + V''.
  const double at_center = f.eval(embed(tetra_center_angles(spec, P)));
  if (std::abs(at_center - (udd + vdd)) > tol::kMaxAtCenter)
    throw InvariantViolation("cap center does not attain U'' + V''");

  return f;
}

SupportForm support_form_via_linear_system(const GroupSpec& spec, const FareyPair& P) {
  const Int p = spec.p, q = spec.q, mu = spec.mu, nu = spec.nu;
  const double u = kPi / static_cast<double>(mu * q);
  const double v = kPi / static_cast<double>(nu * q);
  const double da = static_cast<double>(P.a * p - P.alpha * q);
  const double db = static_cast<double>(P.b * p - P.beta * q);
  const double sp = std::sin(da * v) * std::sin(db * v);
  const double s = std::sin(P.a * u) * std::sin(P.b * u);
  const double z = std::cos((da + db) * v) * s - std::cos(P.x * u) * sp;

  const Vec4 rho = solve4(cell_matrix(spec, P), {z, z, z, z});
  SupportForm f;
  f.U = rho[0];
  f.Uprime = rho[1];
  f.V = rho[2];
  f.Vprime = rho[3];
  f.Z = z;
  return f;
}

SupportForm antiprism_support(const GroupSpec& spec, CellAxis axis) {
  SupportForm f;
  if (axis == CellAxis::NuGons) {
    const double ang = kPi / static_cast<double>(spec.mu * spec.q);
    f.U = std::cos(ang);
    f.Uprime = std::sin(ang);
    f.Z = std::cos(ang);
  } else {
    const double ang = kPi / static_cast<double>(spec.nu * spec.q);
    f.V = std::cos(ang);
    f.Vprime = std::sin(ang);
    f.Z = std::cos(ang);
  }
  return f;
}

bool CertificateReport::inequalities_passed() const {
  return det_nonzero && det_forms_agree && z_positive && z_upper && z_lower && z_forms_agree &&
         max_at_center && factor_one_nonzero && factor_two_nonzero && sineratio_i && sineratio_ii &&
         enfin_int_i && enfin_int_ii && enfin_ratio_i && enfin_ratio_ii;
}

CertificateReport verify_inequalities(const GroupSpec& spec, const FareyPair& P) {
  const Int q = spec.q, mu = spec.mu, nu = spec.nu;
  CertificateReport r;

  DetResult d;
  try {
    d = det_m(spec, P);
    r.det_forms_agree = true;
  } catch (const InvariantViolation&) {
    d.direct = det4(cell_matrix(spec, P)[0], cell_matrix(spec, P)[1], cell_matrix(spec, P)[2],
                    cell_matrix(spec, P)[3]);
  }
  r.det_direct = d.direct;
  r.det_factored = d.factored;
  // Columns have norm sqrt(2); normalizing them divides the determinant by 4.
  r.det_nonzero = std::abs(d.direct) / 4.0 > tol::kDetNormalized;

  const CellTrig t = cell_trig(spec, P);
  const double f1 = t.Ca * t.Cb * t.Sap * t.Sbp + t.Sa * t.Sb * t.Cap * t.Cbp;
  const double f2 = t.Sa * t.Cb * t.Sbp * t.Cap + t.Sb * t.Ca * t.Sap * t.Cbp;
  r.factor_one_nonzero = std::abs(f1) > tol::kStrictMargin;
  r.factor_two_nonzero = std::abs(f2) > tol::kStrictMargin;

  const SupportForm f = support_form(spec, P);
  r.z_closed_form = f.Z;
  const double udd = f.Udd(), vdd = f.Vdd();
  r.z_positive = f.Z > tol::kStrictMargin;
  r.z_upper = (udd + vdd) - f.Z > tol::kStrictMargin;
  r.z_lower = f.Z - std::abs(vdd - udd) > tol::kStrictMargin;
  r.z_forms_agree = true;   // support_form throws otherwise
  r.max_at_center = true;   // likewise

  // Sine-ratio chain, evaluated as displayed.
  const double hu = 0.5 * kPi / static_cast<double>(mu * q);
  const double hv = 0.5 * kPi / static_cast<double>(nu * q);
  const double lhs_i = std::sin(P.x_prime * hv) / std::sin(P.y_prime * hv);
  const double rhs_i = std::sin((mu * q - P.x) * hu) / std::sin((mu * q - P.y) * hu);
  r.sineratio_i = rhs_i - lhs_i > tol::kStrictMargin;
  const double lhs_ii = std::sin(P.y * hu) / std::sin(P.x * hu);
  const double rhs_ii = std::sin((nu * q - P.y_prime) * hv) / std::sin((nu * q - P.x_prime) * hv);
  r.sineratio_ii = rhs_ii - lhs_ii > tol::kStrictMargin;

  // The exact integer inequalities behind the chain.
  r.enfin_int_i = checked_add(checked_mul(mu, P.x_prime), checked_mul(nu, P.x)) < mu * nu * q;
  r.enfin_int_ii = checked_add(checked_mul(nu, P.y), checked_mul(mu, P.y_prime)) < mu * nu * q;
  r.enfin_ratio_i =
      checked_mul(P.x_prime, mu * q - P.y) <= checked_mul(P.y_prime, mu * q - P.x);
  r.enfin_ratio_ii =
      checked_mul(P.y, nu * q - P.x_prime) <= checked_mul(P.x, nu * q - P.y_prime);
  return r;
}

bool level_curve_check(const SupportForm& form, int samples) {
  if (samples < 8) throw std::invalid_argument("level_curve_check needs at least 8 samples");
  double a = form.Udd(), b = form.Vdd();
  const double z = form.Z;
  if (!(a > 0.0 && b > 0.0 && z > 0.0 && std::abs(b - a) < z && z < a + b))
    throw std::invalid_argument("form violates the triangle precondition");
  // Normal form: psi(x, y) = a cos x + b cos y with b >= a.
  if (b < a) std::swap(a, b);

  // Discriminant of the quadratic in cos x inside f''; negative means f'' < 0.
  if (!(std::abs((b * b - z * z - a * a) / (a * z)) < 2.0 - tol::kStrictMargin)) return false;

  // Sampled concavity of f(x) = arccos((z - a cos x)/b) on the interior.
  const double x_max = std::acos(std::clamp((z - b) / a, -1.0, 1.0));
  const double lo = -x_max * (1.0 - 1e-6), hi = x_max * (1.0 - 1e-6);
  const double h = (hi - lo) / static_cast<double>(samples - 1);
  double prev_f = 0, prev_df = 0;
  bool have_prev = false, have_df = false;
  for (int i = 0; i < samples; ++i) {
    const double x = lo + h * static_cast<double>(i);
    const double f = std::acos(std::clamp((z - a * std::cos(x)) / b, -1.0, 1.0));
    if (have_prev) {
      const double df = f - prev_f;
      if (have_df && df >= prev_df) return false;
      prev_df = df;
      have_df = true;
    }
    prev_f = f;
    have_prev = true;
  }
  return true;
}

namespace {

std::pair<bool, double> lattice_scan(const GroupSpec& spec, const FareyPair& P,
                                     const SupportForm& form) {
  const Orbit orbit = make_orbit(spec);
  const auto corners = tetra_corner_angles(spec, P);
  std::array<Int, 4> verts{};
  for (std::size_t i = 0; i < 4; ++i) verts[i] = orbit.at(corners[i]);

  bool ok = true;
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& pt : orbit.points) {
    const double val = form.eval(pt.coords);
    const bool is_vertex = std::find(verts.begin(), verts.end(), pt.index) != verts.end();
    if (is_vertex) {
      if (std::abs(val - form.Z) > tol::kSupportVertex) ok = false;
    } else {
      margin = std::min(margin, form.Z - val);
      if (!(val < form.Z - tol::kStrictMargin)) ok = false;
    }
  }
  return {ok, margin};
}

}  // namespace

bool lattice_points_check(const GroupSpec& spec, const FareyPair& P, const SupportForm& form) {
  return lattice_scan(spec, P, form).first;
}

double lattice_points_margin(const GroupSpec& spec, const FareyPair& P, const SupportForm& form) {
  return lattice_scan(spec, P, form).second;
}

CertificateReport certify_pair(const GroupSpec& spec, const FareyPair& P, int pair_index,
                               int samples) {
  CertificateReport r = verify_inequalities(spec, P);
  r.pair_index = pair_index;
  const SupportForm f = support_form(spec, P);
  r.level_curve_ok = level_curve_check(f, samples);
  const auto [lattice_ok, margin] = lattice_scan(spec, P, f);
  r.lattice_ok = lattice_ok;
  r.lattice_margin = margin;
  return r;
}

}  // namespace lenshull
