#pragma once

#include <array>

#include "lenshull/group.hpp"
#include "lenshull/numeric.hpp"
#include "lenshull/tolerances.hpp"

namespace lenshull {

// The closed-form linear form rho = (U, U', V, V') supporting a facet at
// level Z. For tetrahedron cells Z lies strictly between |V''-U''| and
// V''+U''; antiprism forms are degenerate with V'' = 0.
struct SupportForm {
  double U = 0, Uprime = 0, V = 0, Vprime = 0;
  double Z = 0;

  Vec4 rho() const { return {U, Uprime, V, Vprime}; }
  double Udd() const { return std::hypot(U, Uprime); }
  double Vdd() const { return std::hypot(V, Vprime); }
  double norm() const { return norm4(rho()); }
  double eval(const Vec4& x) const { return dot4(rho(), x); }

  // Support form of the cell translated by the group element g.
  SupportForm rotated(const TorusPoint& g) const;
};

struct DetResult {
  double direct = 0;    // 4x4 determinant of the vertex matrix M
  double factored = 0;  // signed product form, two 2x2 determinants
};

// Determinant of the matrix of the four cell vertices, computed both
// directly and through the factored closed form; the two must agree.
DetResult det_m(const GroupSpec& spec, const FareyPair& pair);

// Closed-form support of the tetrahedron cell of a pair. Cross-checks:
// rho.x_i = Z on all four vertices, the half-cosine identity for Z,
// Z in (|V''-U''|, V''+U''), and rho.iota(center) = U''+V''.
SupportForm support_form(const GroupSpec& spec, const FareyPair& pair);

// Independent route to rho: solve the 4x4 linear system rho.x_i = Z with
// Z from the closed form. Used as an oracle against support_form.
SupportForm support_form_via_linear_system(const GroupSpec& spec, const FareyPair& pair);

// Support forms of the two antiprism cell families.
SupportForm antiprism_support(const GroupSpec& spec, CellAxis axis);

// One certificate per pair: every analytic inequality of the supporting-
// hyperplane proof, checked numerically with a strictness margin, plus
// the integer inequalities checked exactly.
struct CertificateReport {
  int pair_index = -1;
  double det_direct = 0, det_factored = 0;
  double z_closed_form = 0;

  bool det_nonzero = false;       // |det M| above tolerance, columns unit-normalized
  bool det_forms_agree = false;   // direct vs factored route
  bool z_positive = false;
  bool z_upper = false;           // Z < U'' + V''
  bool z_lower = false;           // Z > |V'' - U''|
  bool z_forms_agree = false;     // first expression vs half-cosine form
  bool max_at_center = false;     // rho.iota(c) = U'' + V''
  bool factor_one_nonzero = false;   // tangent nondegeneracy, first factor
  bool factor_two_nonzero = false;   // tangent nondegeneracy, second factor
  bool sineratio_i = false;       // sine-ratio chain, first inequality
  bool sineratio_ii = false;      // sine-ratio chain, second inequality
  bool enfin_int_i = false;       // mu x' + nu x < mu nu q, exact
  bool enfin_int_ii = false;      // nu y + mu y' < mu nu q, exact
  bool enfin_ratio_i = false;     // x'(mu q - y) <= y'(mu q - x), exact
  bool enfin_ratio_ii = false;    // y(nu q - x') <= x(nu q - y'), exact
  bool level_curve_ok = false;
  bool lattice_ok = false;
  double lattice_margin = 0;  // smallest gap Z - rho.x over non-vertex orbit points

  bool inequalities_passed() const;
  bool all_passed() const { return inequalities_passed() && level_curve_ok && lattice_ok; }
};

CertificateReport verify_inequalities(const GroupSpec& spec, const FareyPair& pair);

// Lemma-style convexity check of the level curve rho o iota = Z: phase
// reduction to U' = V' = 0, the exact discriminant inequality, and
// concavity of sampled finite differences. Throws if the form violates
// the triangle precondition.
bool level_curve_check(const SupportForm& form, int samples = tol::kLevelCurveSamples);

// End-to-end check of the supporting property on the base cell: every
// orbit point other than the four vertices lies strictly below level Z.
bool lattice_points_check(const GroupSpec& spec, const FareyPair& pair, const SupportForm& form);

// The margin of that check: min over non-vertex orbit points of Z - rho.x.
double lattice_points_margin(const GroupSpec& spec, const FareyPair& pair,
                             const SupportForm& form);

// Full certificate for one pair (inequalities + level curve + lattice).
CertificateReport certify_pair(const GroupSpec& spec, const FareyPair& pair, int pair_index,
                               int samples = tol::kLevelCurveSamples);

}  // namespace lenshull
