#include "lenshull/hull_oracle.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace lenshull {

namespace {

// Normal to (d-1) difference vectors inside a d-dimensional coordinate
// space; the vectors live in Vec4 with trailing zeros when d < 4.
Vec4 span_normal(const std::vector<Vec4>& diffs, int d) {
  switch (d) {
    case 2:
      return {-diffs[0][1], diffs[0][0], 0.0, 0.0};
    case 3: {
      const Vec4& a = diffs[0];
      const Vec4& b = diffs[1];
      return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0], 0.0};
    }
    case 4:
      return cross4(diffs[0], diffs[1], diffs[2]);
    default:
      throw std::logic_error("unsupported span dimension");
  }
}

struct Chart {
  int dimension = 0;
  std::vector<Vec4> basis;   // orthonormal directions of the affine span
  std::vector<Vec4> coords;  // points expressed in the chart (trailing zeros)
};

Chart make_chart(const std::vector<Vec4>& pts, double rank_eps) {
  Chart c;
  const Vec4& base = pts[0];
  for (const auto& p : pts) {
    Vec4 r = sub4(p, base);
    for (const auto& b : c.basis) r = sub4(r, scale4(b, dot4(r, b)));
    if (norm4(r) > rank_eps && c.dimension < 4) {
      c.basis.push_back(scale4(r, 1.0 / norm4(r)));
      ++c.dimension;
    }
  }
  if (c.dimension == 4) {
    c.coords = pts;
  } else {
    c.coords.reserve(pts.size());
    for (const auto& p : pts) {
      const Vec4 r = sub4(p, base);
      Vec4 y{};
      for (std::size_t i = 0; i < c.basis.size(); ++i) y[i] = dot4(r, c.basis[i]);
      c.coords.push_back(y);
    }
  }
  return c;
}

// One candidate plane per affinely independent d-subset; a candidate is
// kept when the whole point set lies on or below it. The facet identity
// is the set of points on the plane, which is independent of the subset
// that found it.
void scan_range(const std::vector<Vec4>& pts, int d, double eps, const Vec4& centroid,
                std::size_t first_start, std::size_t first_step,
                std::map<std::vector<Int>, char>& out) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(d));
  for (std::size_t i0 = first_start; i0 < n; i0 += first_step) {
    idx[0] = i0;
    // Remaining indices run over increasing combinations above i0.
    std::vector<std::size_t> rest(static_cast<std::size_t>(d - 1));
    for (int i = 0; i < d - 1; ++i) rest[static_cast<std::size_t>(i)] = i0 + static_cast<std::size_t>(i) + 1;
    if (!rest.empty() && rest.back() >= n) continue;
    while (true) {
      for (int i = 0; i < d - 1; ++i) idx[static_cast<std::size_t>(i + 1)] = rest[static_cast<std::size_t>(i)];

      std::vector<Vec4> diffs;
      double scale = 1.0;
      diffs.reserve(static_cast<std::size_t>(d - 1));
      for (int i = 1; i < d; ++i) {
        diffs.push_back(sub4(pts[idx[static_cast<std::size_t>(i)]], pts[idx[0]]));
        scale *= norm4(diffs.back());
      }
      Vec4 nrm = span_normal(diffs, d);
      const double nn = norm4(nrm);
      if (nn > 1e-9 * scale) {
        nrm = scale4(nrm, 1.0 / nn);
        double off = dot4(nrm, pts[idx[0]]);
        if (dot4(nrm, centroid) > off) {
          nrm = scale4(nrm, -1.0);
          off = -off;
        }
        bool supporting = true;
        for (const auto& p : pts)
          if (dot4(nrm, p) - off > eps) {
            supporting = false;
            break;
          }
        if (supporting) {
          std::vector<Int> on_plane;
          for (std::size_t j = 0; j < n; ++j)
            if (std::abs(dot4(nrm, pts[j]) - off) <= eps) on_plane.push_back(static_cast<Int>(j));
          out.emplace(std::move(on_plane), 1);
        }
      }

      if (rest.empty()) break;
      int k = d - 2;
      while (k >= 0 && rest[static_cast<std::size_t>(k)] == n - static_cast<std::size_t>(d - 1 - k))
        --k;
      if (k < 0) break;
      ++rest[static_cast<std::size_t>(k)];
      for (int j = k + 1; j < d - 1; ++j)
        rest[static_cast<std::size_t>(j)] = rest[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

// Deterministic plane through a facet's vertex set, independent of which
// subset discovered it.
std::pair<Vec4, double> refit_plane(const std::vector<Vec4>& pts, const std::vector<Int>& verts,
                                    int d, const Vec4& centroid, double rank_eps) {
  const Vec4& base = pts[static_cast<std::size_t>(verts[0])];
  std::vector<Vec4> dirs;  // orthonormalized, for independence testing
  std::vector<Vec4> diffs;
  for (std::size_t i = 1; i < verts.size() && static_cast<int>(diffs.size()) < d - 1; ++i) {
    Vec4 r = sub4(pts[static_cast<std::size_t>(verts[i])], base);
    Vec4 raw = r;
    for (const auto& b : dirs) r = sub4(r, scale4(b, dot4(r, b)));
    if (norm4(r) > rank_eps) {
      dirs.push_back(scale4(r, 1.0 / norm4(r)));
      diffs.push_back(raw);
    }
  }
  if (static_cast<int>(diffs.size()) != d - 1)
    throw InvariantViolation("facet vertex set is affinely degenerate");
  Vec4 nrm = span_normal(diffs, d);
  nrm = scale4(nrm, 1.0 / norm4(nrm));
  double off = dot4(nrm, base);
  if (dot4(nrm, centroid) > off) {
    nrm = scale4(nrm, -1.0);
    off = -off;
  }
  return {nrm, off};
}

std::vector<std::vector<Int>> facet_vertex_sets(const std::vector<OracleFacet>& facets) {
  std::vector<std::vector<Int>> out;
  out.reserve(facets.size());
  for (const auto& f : facets) out.push_back(f.vertices);
  return out;
}

}  // namespace

HullResult hull(const std::vector<Vec4>& points, double eps, int threads) {
  const std::size_t n = points.size();
  if (n < 5) throw std::invalid_argument("hull needs at least 5 points");

  double scale = 0.0;
  for (const auto& p : points) scale = std::max(scale, norm4(p));
  const double rank_eps = eps * std::max(1.0, scale);

  bool coincident = true;
  for (const auto& p : points)
    if (norm4(sub4(p, points[0])) > rank_eps) {
      coincident = false;
      break;
    }
  if (coincident) throw std::invalid_argument("hull input points all coincide");

  Chart chart = make_chart(points, rank_eps);
  HullResult result;
  result.dimension = chart.dimension;
  if (chart.dimension <= 2) {
    result.degeneracy_note = "point set spans an affine subspace of dimension " +
                             std::to_string(chart.dimension) + "; no 3-dimensional facets";
    return result;
  }
  if (chart.dimension == 3)
    result.degeneracy_note = "point set spans a 3-dimensional affine subspace";

  Vec4 centroid{};
  for (const auto& p : chart.coords)
    for (int i = 0; i < 4; ++i) centroid[static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(i)] / static_cast<double>(n);

  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min<int>(workers, static_cast<int>(n));

  std::vector<std::map<std::vector<Int>, char>> partial(static_cast<std::size_t>(workers));
  if (workers == 1) {
    scan_range(chart.coords, chart.dimension, eps, centroid, 0, 1, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        scan_range(chart.coords, chart.dimension, eps, centroid, static_cast<std::size_t>(w),
                   static_cast<std::size_t>(workers), partial[static_cast<std::size_t>(w)]);
      });
    for (auto& t : pool) t.join();
  }

  std::map<std::vector<Int>, char> merged;
  for (auto& part : partial) merged.merge(part);

  for (const auto& [verts, tag] : merged) {
    (void)tag;
    OracleFacet f;
    f.vertices = verts;
    auto [nrm, off] = refit_plane(chart.coords, verts, chart.dimension, centroid, rank_eps);
    if (chart.dimension == 3) {
      Vec4 lifted{};
      for (std::size_t i = 0; i < chart.basis.size(); ++i)
        for (std::size_t c = 0; c < 4; ++c) lifted[c] += chart.basis[i][c] * nrm[i];
      f.normal = lifted;
      f.offset = dot4(lifted, points[static_cast<std::size_t>(verts[0])]);
    } else {
      f.normal = nrm;
      f.offset = off;
    }
    result.facets.push_back(std::move(f));
  }
  return result;
}

FacetDiff compare(const Triangulation& predicted, const HullResult& oracle) {
  std::vector<std::vector<Int>> pred, orc;
  pred.reserve(predicted.facets.size());
  for (const auto& f : predicted.facets) pred.push_back(f.vertices);
  orc = facet_vertex_sets(oracle.facets);
  std::sort(pred.begin(), pred.end());
  std::sort(orc.begin(), orc.end());

  FacetDiff diff;
  std::set_difference(pred.begin(), pred.end(), orc.begin(), orc.end(),
                      std::back_inserter(diff.predicted_only));
  std::set_difference(orc.begin(), orc.end(), pred.begin(), pred.end(),
                      std::back_inserter(diff.oracle_only));
  return diff;
}

bool oracle_ridges_ok(const HullResult& result, const std::vector<Vec4>& points, double eps) {
  if (result.dimension != 4) return false;
  std::map<std::vector<Int>, int> ridge_count;
  for (const auto& f : result.facets) {
    std::vector<std::vector<Int>> ridges;
    if (f.vertices.size() == 4) {
      for (std::size_t drop = 0; drop < 4; ++drop) {
        std::vector<Int> r;
        for (std::size_t i = 0; i < 4; ++i)
          if (i != drop) r.push_back(f.vertices[i]);
        ridges.push_back(std::move(r));
      }
    } else {
      // The facet is a 3-polytope; its 2-faces come from a sub-hull.
      std::vector<Vec4> sub;
      sub.reserve(f.vertices.size());
      for (Int v : f.vertices) sub.push_back(points[static_cast<std::size_t>(v)]);
      const HullResult inner = hull(sub, eps, 1);
      if (inner.dimension != 3) return false;
      for (const auto& g : inner.facets) {
        std::vector<Int> r;
        for (Int v : g.vertices) r.push_back(f.vertices[static_cast<std::size_t>(v)]);
        std::sort(r.begin(), r.end());
        ridges.push_back(std::move(r));
      }
    }
    for (auto& r : ridges) ++ridge_count[r];
  }
  for (const auto& [r, c] : ridge_count)
    if (c != 2) return false;
  return true;
}

bool oracle_covers_points(const HullResult& result, const std::vector<Vec4>& points, double eps) {
  for (const auto& f : result.facets)
    for (const auto& p : points)
      if (dot4(f.normal, p) - f.offset > eps) return false;
  return true;
}

}  // namespace lenshull
