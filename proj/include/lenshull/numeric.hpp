#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "lenshull/errors.hpp"

namespace lenshull {

using Vec4 = std::array<double, 4>;

inline double dot4(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline Vec4 sub4(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

inline Vec4 scale4(const Vec4& a, double c) { return {a[0] * c, a[1] * c, a[2] * c, a[3] * c}; }

inline double norm4(const Vec4& a) { return std::sqrt(dot4(a, a)); }

inline double det3(double a, double b, double c, double d, double e, double f, double g, double h,
                   double i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Vector orthogonal to a, b, c; its dot with d equals det[a b c d].
inline Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
  Vec4 n;
  n[0] = det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]);
  n[1] = -det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]);
  n[2] = det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]);
  n[3] = -det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);
  return n;
}

inline double det4(const Vec4& c0, const Vec4& c1, const Vec4& c2, const Vec4& c3) {
  // Expansion along the first column of the row-major matrix [c0 c1 c2 c3].
  const std::array<Vec4, 4> col = {c0, c1, c2, c3};
  double det = 0.0;
  for (int r = 0; r < 4; ++r) {
    std::array<double, 9> m;
    int mi = 0;
    for (int rr = 0; rr < 4; ++rr) {
      if (rr == r) continue;
      for (int cc = 1; cc < 4; ++cc) m[mi++] = col[cc][rr];
    }
    const double minor = det3(m[0], m[1], m[2], m[3], m[4], m[5], m[6], m[7], m[8]);
    det += (r % 2 == 0 ? 1.0 : -1.0) * col[0][r] * minor;
  }
  return det;
}

// Solves the 4x4 system A y = b by Gaussian elimination with partial
// pivoting. Rows of A are the equations.
inline Vec4 solve4(std::array<Vec4, 4> A, Vec4 b) {
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
    if (std::abs(A[piv][c]) < 1e-300) throw InvariantViolation("singular system");
    std::swap(A[c], A[piv]);
    std::swap(b[c], b[piv]);
    for (int r = c + 1; r < 4; ++r) {
      const double f = A[r][c] / A[c][c];
      for (int k = c; k < 4; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  Vec4 y{};
  for (int r = 3; r >= 0; --r) {
    double s = b[r];
    for (int k = r + 1; k < 4; ++k) s -= A[r][k] * y[k];
    y[r] = s / A[r][r];
  }
  return y;
}

}  // namespace lenshull
