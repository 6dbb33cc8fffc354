#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "lenshull/predictor.hpp"

using namespace lenshull;

namespace {

std::set<std::vector<Int>> facet_sets(const Triangulation& tri) {
  std::set<std::vector<Int>> out;
  for (const auto& f : tri.facets) out.insert(f.vertices);
  return out;
}

}  // namespace

TEST_CASE("simplex spec predicts the boundary of a 4-simplex") {
  const Triangulation tri = predict(GroupSpec::make(2, 5, 1, 1));
  REQUIRE(tri.facets.size() == 5);
  std::set<std::vector<Int>> expect;
  for (Int k = 0; k < 5; ++k) {
    std::vector<Int> v{k, (k + 1) % 5, (k + 2) % 5, (k + 3) % 5};
    std::sort(v.begin(), v.end());
    expect.insert(v);
  }
  CHECK(facet_sets(tri) == expect);
  for (const auto& f : tri.facets) CHECK(f.kind == FacetKind::Tetra);
  CHECK(tri.ridges.size() == 10);
  CHECK(is_closed_pseudomanifold(tri));
  CHECK(ridge_graph_connected(tri));
}

TEST_CASE("q = 7 predicts 14 tetrahedra, translates of two bases") {
  const Triangulation tri = predict(GroupSpec::make(2, 7, 1, 1));
  REQUIRE(tri.facets.size() == 14);
  std::set<std::vector<Int>> expect;
  for (Int k = 0; k < 7; ++k)
    for (const auto& base : {std::vector<Int>{0, 1, 2, 3}, std::vector<Int>{0, 1, 3, 4}}) {
      std::vector<Int> v;
      for (Int b : base) v.push_back((b + k) % 7);
      std::sort(v.begin(), v.end());
      expect.insert(v);
    }
  CHECK(facet_sets(tri) == expect);
  CHECK(is_closed_pseudomanifold(tri));
  CHECK(ridge_graph_connected(tri));
}

TEST_CASE("explicit gluing: face x0 xa xb joins consecutive cells") {
  const Triangulation tri = predict(GroupSpec::make(2, 7, 1, 1));
  const std::vector<Int> ridge{0, 1, 3};
  auto it = tri.ridges.find(ridge);
  REQUIRE(it != tri.ridges.end());
  REQUIRE(it->second.size() == 2);
  std::set<std::vector<Int>> incident;
  for (Int id : it->second) incident.insert(tri.facets[static_cast<std::size_t>(id)].vertices);
  CHECK(incident.count({0, 1, 2, 3}) == 1);
  CHECK(incident.count({0, 1, 3, 4}) == 1);
}

TEST_CASE("frozen non-cyclic example: (1,3,2,1) has 6 tetra + 3 antiprisms") {
  const Triangulation tri = predict(GroupSpec::make(1, 3, 2, 1));
  REQUIRE(tri.facets.size() == 9);
  std::set<std::vector<Int>> expect;
  for (Int k = 0; k < 6; ++k) {
    std::vector<Int> v{k % 6, (k + 1) % 6, (k + 2) % 6, (k + 3) % 6};
    std::sort(v.begin(), v.end());
    expect.insert(v);
  }
  expect.insert({0, 1, 3, 4});
  expect.insert({1, 2, 4, 5});
  expect.insert({0, 2, 3, 5});
  CHECK(facet_sets(tri) == expect);

  int antiprisms = 0;
  for (const auto& f : tri.facets)
    if (f.kind == FacetKind::Antiprism) {
      ++antiprisms;
      CHECK(f.gon == 2);
      CHECK(f.vertices.size() == 4);
    }
  CHECK(antiprisms == 3);
  CHECK(is_closed_pseudomanifold(tri));
  CHECK(ridge_graph_connected(tri));
}

TEST_CASE("nu = 2 antiprism cells keep the antiprism tag with 4 vertices") {
  const Triangulation tri = predict(GroupSpec::make(1, 3, 1, 2));
  bool seen = false;
  for (const auto& f : tri.facets)
    if (f.kind == FacetKind::Antiprism) {
      seen = true;
      CHECK(f.gon == 2);
      CHECK(f.vertices.size() == 4);
    }
  CHECK(seen);
}

TEST_CASE("antiprism vertex counts follow the gon sizes") {
  const Triangulation tri = predict(GroupSpec::make(2, 5, 2, 3));
  bool mu_cell = false, nu_cell = false;
  for (const auto& f : tri.facets) {
    if (f.kind != FacetKind::Antiprism) continue;
    if (f.gon == 2) {
      mu_cell = true;
      CHECK(f.vertices.size() == 4);
    }
    if (f.gon == 3) {
      nu_cell = true;
      CHECK(f.vertices.size() == 6);
    }
  }
  CHECK(mu_cell);
  CHECK(nu_cell);
}

TEST_CASE("degenerate specs are rejected with their classification") {
  try {
    predict(GroupSpec::make(1, 5, 1, 1));
    FAIL("expected DegenerateSpec");
  } catch (const DegenerateSpec& e) {
    CHECK(e.kind == Degeneracy::TwoCaps);
  }
  try {
    predict(GroupSpec::make(0, 1, 3, 3));
    FAIL("expected DegenerateSpec");
  } catch (const DegenerateSpec& e) {
    CHECK(e.kind == Degeneracy::ProductOfPolygons);
  }
  try {
    predict(GroupSpec::make(1, 2, 1, 3));
    FAIL("expected DegenerateSpec");
  } catch (const DegenerateSpec& e) {
    CHECK(e.kind == Degeneracy::AntiprismOnly);
  }
}

TEST_CASE("facet lists are deduplicated and all-tetra in the cyclic case") {
  for (Int q = 5; q <= 20; ++q)
    for (Int p = 2; p <= q - 2; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Triangulation tri = predict(GroupSpec::make(p, q, 1, 1));
      std::set<std::vector<Int>> sets = facet_sets(tri);
      CHECK(sets.size() == tri.facets.size());
      for (const auto& f : tri.facets) CHECK(f.kind == FacetKind::Tetra);
      CHECK(static_cast<Int>(tri.facets.size()) == predicted_facet_count(GroupSpec::make(p, q, 1, 1)));
    }
}

TEST_CASE("predicted_facet_count closed form and generated counts") {
  CHECK(predicted_facet_count(GroupSpec::make(2, 5, 1, 1)) == 5);
  CHECK(predicted_facet_count(GroupSpec::make(2, 7, 1, 1)) == 14);
  CHECK(predicted_facet_count(GroupSpec::make(1, 3, 2, 1)) == 9);
  CHECK(predicted_facet_count(GroupSpec::make(1, 2, 2, 2)) == 16);
}

TEST_CASE("group translation permutes the facet list") {
  for (const auto& spec : {GroupSpec::make(2, 7, 1, 1), GroupSpec::make(1, 3, 2, 1),
                           GroupSpec::make(2, 5, 1, 2)}) {
    const Triangulation tri = predict(spec);
    const Orbit orbit = make_orbit(spec);
    const TorusPoint tau = orbit.points[1].angles;
    std::set<std::vector<Int>> translated;
    for (const auto& f : tri.facets) {
      std::vector<Int> v;
      for (Int idx : f.vertices)
        v.push_back(orbit.at(orbit.points[static_cast<std::size_t>(idx)].angles + tau));
      std::sort(v.begin(), v.end());
      translated.insert(v);
    }
    CHECK(translated == facet_sets(tri));
  }
}

TEST_CASE("supports fill for every facet") {
  Triangulation tri = predict(GroupSpec::make(2, 5, 2, 3));
  fill_supports(tri);
  for (const auto& f : tri.facets) {
    REQUIRE(f.support.has_value());
    CHECK(f.support->Z > 0);
  }
}
