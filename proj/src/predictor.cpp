#include "lenshull/predictor.hpp"

#include <algorithm>
#include <queue>

namespace lenshull {

const char* to_string(FacetKind k) {
  switch (k) {
    case FacetKind::Tetra: return "tetra";
    case FacetKind::Antiprism: return "antiprism";
    case FacetKind::Prism: return "prism";
  }
  return "?";
}

namespace {

struct CellRecord {
  Facet facet;                          // vertices filled, support left empty
  std::vector<std::vector<Int>> ridges; // ridge vertex sets, each sorted
};

std::vector<Int> lookup_cell(const Orbit& orbit, const std::vector<TorusPoint>& cell,
                             const TorusPoint& shift) {
  std::vector<Int> labels;
  labels.reserve(cell.size());
  for (const auto& c : cell) labels.push_back(orbit.at(c + shift));
  return labels;
}

std::vector<Int> sorted(std::vector<Int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Ridges of a tetrahedron cell: the four triangles.
std::vector<std::vector<Int>> tetra_ridges(const std::vector<Int>& verts) {
  std::vector<std::vector<Int>> out;
  for (std::size_t drop = 0; drop < 4; ++drop) {
    std::vector<Int> r;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != drop) r.push_back(verts[i]);
    out.push_back(sorted(std::move(r)));
  }
  return out;
}

// Ridges of an antiprism cell whose labels come gon-by-gon in matched
// angular order: the two gon bases (when they are genuine polygons) and
// the 2 * gon lateral triangles.
std::vector<std::vector<Int>> antiprism_ridges(const std::vector<Int>& labels, Int gon) {
  const Int g = gon;
  std::vector<std::vector<Int>> out;
  auto T = [&](Int k) { return labels[static_cast<std::size_t>(k % g)]; };
  auto B = [&](Int k) { return labels[static_cast<std::size_t>(g + k % g)]; };
  if (g >= 3) {
    std::vector<Int> top, bottom;
    for (Int k = 0; k < g; ++k) {
      top.push_back(T(k));
      bottom.push_back(B(k));
    }
    out.push_back(sorted(std::move(top)));
    out.push_back(sorted(std::move(bottom)));
  }
  for (Int k = 0; k < g; ++k) {
    out.push_back(sorted({T(k), B(k), T(k + 1)}));
    out.push_back(sorted({B(k), T(k + 1), B(k + 1)}));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Triangulation predict(const GroupSpec& spec) {
  if (spec.degeneracy != Degeneracy::Generic)
    throw DegenerateSpec(spec.degeneracy, "spec " + spec.str() + " is degenerate: " +
                                              to_string(spec.degeneracy));

  const Orbit orbit = make_orbit(spec);
  Triangulation tri;
  tri.spec = spec;
  tri.pairs = enumerate_pairs(Fraction(spec.p, spec.q), spec.nu > 1, spec.mu > 1);

  std::map<std::vector<Int>, CellRecord> cells;
  auto add_cell = [&](std::vector<Int> labels, std::vector<std::vector<Int>> ridges, Facet meta) {
    meta.vertices = sorted(std::move(labels));
    if (cells.count(meta.vertices)) return;
    std::vector<Int> key = meta.vertices;
    cells.emplace(std::move(key), CellRecord{std::move(meta), std::move(ridges)});
  };

  for (std::size_t pi = 0; pi < tri.pairs.size(); ++pi) {
    const auto corners = tetra_corner_angles(spec, tri.pairs[pi]);
    const std::vector<TorusPoint> cell(corners.begin(), corners.end());
    for (const auto& g : orbit.points) {
      Facet meta;
      meta.kind = FacetKind::Tetra;
      meta.pair_index = static_cast<int>(pi);
      meta.translate = g.index;
      meta.shift = g.angles;
      auto labels = lookup_cell(orbit, cell, g.angles);
      auto ridges = tetra_ridges(sorted(labels));
      add_cell(std::move(labels), std::move(ridges), std::move(meta));
    }
  }

  for (CellAxis axis : {CellAxis::NuGons, CellAxis::MuGons}) {
    const Int gon = axis == CellAxis::NuGons ? spec.nu : spec.mu;
    if (gon <= 1) continue;
    const auto cell = antiprism_angles(spec, axis);
    for (const auto& g : orbit.points) {
      Facet meta;
      meta.kind = FacetKind::Antiprism;
      meta.gon = gon;
      meta.axis = axis;
      meta.translate = g.index;
      meta.shift = g.angles;
      auto labels = lookup_cell(orbit, cell, g.angles);
      auto ridges = antiprism_ridges(labels, gon);
      add_cell(std::move(labels), std::move(ridges), std::move(meta));
    }
  }

  for (auto& [verts, rec] : cells) {
    const Int id = static_cast<Int>(tri.facets.size());
    for (auto& r : rec.ridges) tri.ridges[r].push_back(id);
    tri.facets.push_back(std::move(rec.facet));
  }
  return tri;
}

Int predicted_facet_count(const GroupSpec& spec) {
  if (spec.degeneracy != Degeneracy::Generic)
    throw DegenerateSpec(spec.degeneracy, "spec " + spec.str() + " is degenerate");
  if (spec.mu == 1 && spec.nu == 1) {
    const ContinuedFraction cf = continued_fraction(Fraction(spec.p, spec.q));
    return spec.q * (cf.n - 3);
  }
  return static_cast<Int>(predict(spec).facets.size());
}

bool is_closed_pseudomanifold(const Triangulation& tri) {
  if (tri.facets.empty()) return false;
  for (const auto& [ridge, inc] : tri.ridges)
    if (inc.size() != 2) return false;
  return true;
}

bool ridge_graph_connected(const Triangulation& tri) {
  const std::size_t n = tri.facets.size();
  if (n == 0) return false;
  std::vector<std::vector<Int>> adj(n);
  for (const auto& [ridge, inc] : tri.ridges)
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        adj[static_cast<std::size_t>(inc[i])].push_back(inc[j]);
        adj[static_cast<std::size_t>(inc[j])].push_back(inc[i]);
      }
  std::vector<char> seen(n, 0);
  std::queue<Int> bfs;
  bfs.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!bfs.empty()) {
    const Int f = bfs.front();
    bfs.pop();
    for (Int g : adj[static_cast<std::size_t>(f)])
      if (!seen[static_cast<std::size_t>(g)]) {
        seen[static_cast<std::size_t>(g)] = 1;
        ++reached;
        bfs.push(g);
      }
  }
  return reached == n;
}

void fill_supports(Triangulation& tri) {
  std::vector<SupportForm> pair_forms;
  pair_forms.reserve(tri.pairs.size());
  for (const auto& p : tri.pairs) pair_forms.push_back(support_form(tri.spec, p));
  const SupportForm nu_form = tri.spec.nu > 1 ? antiprism_support(tri.spec, CellAxis::NuGons)
                                              : SupportForm{};
  const SupportForm mu_form = tri.spec.mu > 1 ? antiprism_support(tri.spec, CellAxis::MuGons)
                                              : SupportForm{};
  for (auto& f : tri.facets) {
    if (f.kind == FacetKind::Tetra)
      f.support = pair_forms[static_cast<std::size_t>(f.pair_index)].rotated(f.shift);
    else if (f.kind == FacetKind::Antiprism)
      f.support = (f.axis == CellAxis::NuGons ? nu_form : mu_form).rotated(f.shift);
  }
}

}  // namespace lenshull
