#pragma once

#include "lenshull/hull_oracle.hpp"

namespace lenshull {

// Delaunay-cell view of a facet: the spherical cap cut out by the
// supporting hyperplane, on the radius-sqrt(2) sphere.
struct SphericalCell {
  Vec4 center_direction{};  // rho / |rho|
  double angular_radius = 0;
};

SphericalCell spherical_cell(const SupportForm& form);

struct VerifyOptions {
  double eps = tol::kOracleEps;
  int samples = tol::kLevelCurveSamples;
  bool with_oracle = true;
  int threads = 0;
  Int oracle_cap = 120;  // largest orbit the subset scan is asked to handle
};

struct PairCertificate {
  SupportForm form;
  SupportForm solved_form;  // independent linear-system route
  CertificateReport report;
  bool solve_agrees = false;
};

struct VerifyReport {
  GroupSpec spec;
  Triangulation tri;  // supports filled
  std::vector<PairCertificate> certificates;
  bool pseudo_manifold = false;
  bool ridge_connected = false;
  bool cells_ok = false;  // every facet's cap contains exactly its vertices
  bool oracle_ran = false;
  HullResult oracle;
  FacetDiff diff;

  bool certificates_ok() const;
  bool ok() const;
};

// Runs the whole pipeline for one spec: prediction, per-pair
// certificates, the facet-by-facet empty-cap check, and (optionally) the
// hull oracle comparison.
VerifyReport verify_spec(const GroupSpec& spec, const VerifyOptions& opts = {});

// Checks that every orbit point other than a facet's vertices lies
// strictly below its supporting level, for every facet of the
// triangulation. This is the per-facet form of the lattice check.
bool empty_caps_ok(const Triangulation& tri, const Orbit& orbit);

// All cyclic specs (p, q, 1, 1) with p in [2, q-2] coprime, q <= qmax.
std::vector<GroupSpec> cyclic_grid(Int qmax);

// All generic specs with mu*nu > 1 and order <= orbit_cap.
std::vector<GroupSpec> general_grid(Int orbit_cap);

}  // namespace lenshull
