#pragma once

#include <string>
#include <vector>

#include "lenshull/numeric.hpp"
#include "lenshull/predictor.hpp"
#include "lenshull/tolerances.hpp"

namespace lenshull {

struct OracleFacet {
  std::vector<Int> vertices;  // sorted input labels
  Vec4 normal{};              // unit; all points on or below
  double offset = 0;
};

struct HullResult {
  int dimension = -1;  // affine rank of the input
  std::vector<OracleFacet> facets;  // populated for dimension 3 and 4
  std::string degeneracy_note;
};

// Brute-force facet enumeration: scans every affinely independent
// d-subset, keeps the planes supporting the whole point set, and merges
// coplanar hits into one facet holding every point on the plane. For
// rank-3 inputs the scan runs inside the affine span. threads = 0 picks
// the hardware count; the result is identical for any thread count.
HullResult hull(const std::vector<Vec4>& points, double eps = tol::kOracleEps, int threads = 0);

struct FacetDiff {
  std::vector<std::vector<Int>> predicted_only;
  std::vector<std::vector<Int>> oracle_only;

  bool empty() const { return predicted_only.empty() && oracle_only.empty(); }
};

// Set difference of facet vertex sets in both directions.
FacetDiff compare(const Triangulation& predicted, const HullResult& oracle);

// Every 2-face of a 4-dimensional hull must bound exactly two facets.
bool oracle_ridges_ok(const HullResult& result, const std::vector<Vec4>& points,
                      double eps = tol::kOracleEps);

// No input point may lie strictly outside any facet plane.
bool oracle_covers_points(const HullResult& result, const std::vector<Vec4>& points,
                          double eps = tol::kOracleEps);

}  // namespace lenshull
