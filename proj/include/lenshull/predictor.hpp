#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lenshull/certify.hpp"
#include "lenshull/group.hpp"

namespace lenshull {

// Requested facet structure for a spec outside the generic case; carries
// the classification so callers can report it.
struct DegenerateSpec : std::runtime_error {
  Degeneracy kind;
  DegenerateSpec(Degeneracy k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

enum class FacetKind { Tetra, Antiprism, Prism };

const char* to_string(FacetKind k);

struct Facet {
  std::vector<Int> vertices;  // sorted orbit labels
  FacetKind kind = FacetKind::Tetra;
  int pair_index = -1;        // tetra cells: owning pair
  Int gon = 0;                // antiprism/prism cells: gon size
  std::optional<CellAxis> axis;  // antiprism cells: which gon family
  Int translate = 0;          // orbit label of the group element moving the base cell here
  TorusPoint shift;           // that element's angles
  std::optional<SupportForm> support;
};

// The predicted facet list with its ridge incidence map. Facets are
// sorted by vertex set; the ridge map sends each ridge vertex set to the
// incident facet indices (exactly two for a closed pseudo-manifold).
struct Triangulation {
  GroupSpec spec;
  std::vector<FareyPair> pairs;
  std::vector<Facet> facets;
  std::map<std::vector<Int>, std::vector<Int>> ridges;
};

// All group translates of the tetrahedron cells of enumerate_pairs (with
// the extra pairs switched on by mu, nu) plus the antiprism cells,
// deduplicated by vertex set. Throws DegenerateSpec off the generic case.
Triangulation predict(const GroupSpec& spec);

// q (n - 3) in closed form for the cyclic case; the generated count
// otherwise.
Int predicted_facet_count(const GroupSpec& spec);

bool is_closed_pseudomanifold(const Triangulation& tri);
bool ridge_graph_connected(const Triangulation& tri);

// Fills every facet's support form: the pair's closed form (or the axis
// form for antiprisms) rotated by the facet's translate.
void fill_supports(Triangulation& tri);

}  // namespace lenshull
