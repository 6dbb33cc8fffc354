#pragma once

namespace lenshull::tol {

// All numeric thresholds used by the certificates and the oracle live here.
inline constexpr double kSupportVertex = 1e-10;  // rho.x_i == Z on facet vertices
inline constexpr double kZForms = 1e-10;         // relative gap between the two Z closed forms
inline constexpr double kMaxAtCenter = 1e-10;    // rho.iota(c) == U'' + V''
inline constexpr double kStrictMargin = 1e-9;    // margin for strict analytic inequalities
inline constexpr double kDetNormalized = 1e-9;   // |det M| after normalizing columns to unit length
inline constexpr double kDetFormsRel = 1e-9;     // relative gap, direct vs factored determinant
inline constexpr double kOracleEps = 1e-9;       // hull oracle coplanarity, unit-scale inputs
inline constexpr double kLattice = 1e-12;        // Prop-4.3-style lattice numerics
inline constexpr double kSphere = 1e-12;         // orbit points on the radius-sqrt(2) sphere
inline constexpr double kCellVertex = 1e-10;     // spherical cell: vertices on the cap boundary

inline constexpr int kLevelCurveSamples = 4096;  // default sampling of the level curve

}  // namespace lenshull::tol
