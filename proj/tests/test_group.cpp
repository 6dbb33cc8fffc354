#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "lenshull/group.hpp"
#include "lenshull/numeric.hpp"
#include "lenshull/tolerances.hpp"

using namespace lenshull;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<TorusPoint> model_generators(Int p, Int q, Int mu, Int nu) {
  return {TorusPoint{Turn(1, q * mu), Turn(p, q * nu)}, TorusPoint{Turn(1, mu), Turn(0, 1)},
          TorusPoint{Turn(0, 1), Turn(1, nu)}};
}
}  // namespace

TEST_CASE("turn arithmetic is exact and normalized") {
  CHECK(Turn(7, 5) == Turn(2, 5));
  CHECK(Turn(-1, 5) == Turn(4, 5));
  CHECK(Turn(2, 4) == Turn(1, 2));
  CHECK((Turn(3, 5) + Turn(4, 5)) == Turn(2, 5));
  CHECK((Turn(1, 6) * 3) == Turn(1, 2));
  CHECK_THROWS_AS(Turn(1, 0), std::invalid_argument);
}

TEST_CASE("canonicalize frozen examples") {
  GroupSpec s = canonicalize({{Turn(1, 5), Turn(2, 5)}});
  CHECK(s == GroupSpec::make(2, 5, 1, 1));
  CHECK(s.degeneracy == Degeneracy::Generic);

  s = canonicalize({{Turn(1, 2), Turn(0, 1)}, {Turn(0, 1), Turn(1, 3)}});
  CHECK(s == GroupSpec::make(0, 1, 2, 3));
  CHECK(s.degeneracy == Degeneracy::ProductOfPolygons);

  s = canonicalize({{Turn(1, 10), Turn(3, 10)}});
  CHECK(s == GroupSpec::make(3, 10, 1, 1));
  CHECK(s.degeneracy == Degeneracy::Generic);

  CHECK_THROWS_AS(canonicalize({}), std::invalid_argument);
}

TEST_CASE("canonicalize round-trips model generators") {
  for (Int q = 1; q <= 30; ++q)
    for (Int p = 0; p < std::max<Int>(q, 1); ++p) {
      if (q > 1 && std::gcd(p, q) != 1) continue;
      if (q == 1 && p != 0) continue;
      for (Int mu = 1; mu <= 4; ++mu)
        for (Int nu = 1; nu <= 4; ++nu) {
          const GroupSpec expect = GroupSpec::make(p, q, mu, nu);
          CHECK(canonicalize(model_generators(p, q, mu, nu)) == expect);
        }
    }
}

TEST_CASE("degeneracy classification") {
  CHECK(classify(1, 5, 1, 1) == Degeneracy::TwoCaps);
  CHECK(classify(4, 5, 1, 1) == Degeneracy::TwoCaps);
  CHECK(classify(1, 2, 1, 1) == Degeneracy::TwoCaps);
  CHECK(classify(0, 1, 2, 3) == Degeneracy::ProductOfPolygons);
  CHECK(classify(0, 1, 3, 3) == Degeneracy::ProductOfPolygons);
  CHECK(classify(0, 1, 2, 2) == Degeneracy::LowOrder);
  CHECK(classify(0, 1, 1, 1) == Degeneracy::LowOrder);
  CHECK(classify(1, 2, 1, 3) == Degeneracy::AntiprismOnly);
  CHECK(classify(1, 2, 3, 1) == Degeneracy::AntiprismOnly);
  CHECK(classify(1, 2, 1, 2) == Degeneracy::AntiprismOnly);
  CHECK(classify(1, 2, 2, 2) == Degeneracy::Generic);
  CHECK(classify(2, 5, 1, 1) == Degeneracy::Generic);
  CHECK(classify(1, 5, 1, 2) == Degeneracy::Generic);
  CHECK(classify(3, 10, 1, 1) == Degeneracy::Generic);
}

TEST_CASE("make rejects invalid invariants") {
  CHECK_THROWS_AS(GroupSpec::make(2, 4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::make(5, 5, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::make(0, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::make(0, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("orbit of the simplex spec") {
  const Orbit orbit = make_orbit(GroupSpec::make(2, 5, 1, 1));
  REQUIRE(orbit.points.size() == 5);
  for (Int k = 0; k < 5; ++k) {
    CHECK(orbit.points[static_cast<std::size_t>(k)].angles.s == Turn(k, 5));
    CHECK(orbit.points[static_cast<std::size_t>(k)].angles.t == Turn(2 * k, 5));
  }
  CHECK(orbit.points[0].coords == Vec4{1.0, 0.0, 1.0, 0.0});
}

TEST_CASE("orbit size, distinctness, and sphere invariants") {
  for (const auto& spec :
       {GroupSpec::make(2, 7, 1, 1), GroupSpec::make(1, 3, 2, 1), GroupSpec::make(1, 2, 2, 2),
        GroupSpec::make(0, 1, 2, 3), GroupSpec::make(2, 5, 2, 3)}) {
    const Orbit orbit = make_orbit(spec);
    CHECK(static_cast<Int>(orbit.points.size()) == spec.order());
    CHECK(orbit.index.size() == orbit.points.size());
    for (const auto& pt : orbit.points) {
      const auto& c = pt.coords;
      CHECK(std::abs(c[0] * c[0] + c[1] * c[1] - 1.0) < tol::kSphere);
      CHECK(std::abs(c[2] * c[2] + c[3] * c[3] - 1.0) < tol::kSphere);
    }
  }
}

TEST_CASE("orbit evaluation is deterministic") {
  const Orbit a = make_orbit(GroupSpec::make(3, 10, 1, 1));
  const Orbit b = make_orbit(GroupSpec::make(3, 10, 1, 1));
  for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i].coords == b.points[i].coords);
}

TEST_CASE("lattice data for the simplex pair") {
  const GroupSpec spec = GroupSpec::make(2, 5, 1, 1);
  const FareyPair P = derive_invariants(Fraction(0, 1), Fraction(1, 2), Fraction(2, 5));
  const LatticeData L = lattice_data(spec, P);
  CHECK(L.u[0] == doctest::Approx(2 * kPi / 5).epsilon(1e-14));
  CHECK(L.u[1] == doctest::Approx(4 * kPi / 5).epsilon(1e-14));
  CHECK(L.v[0] == doctest::Approx(4 * kPi / 5).epsilon(1e-14));
  CHECK(L.v[1] == doctest::Approx(-2 * kPi / 5).epsilon(1e-14));
  const double det = L.u[0] * L.v[1] - L.u[1] * L.v[0];
  CHECK(std::abs(std::abs(det) - 4 * kPi * kPi / 5) < tol::kLattice);
  CHECK(L.u[1] * L.v[1] < 0);
}

TEST_CASE("lattice parallelogram corners project onto the cell corners") {
  const GroupSpec spec = GroupSpec::make(3, 10, 1, 1);
  for (const auto& P : enumerate_pairs(Fraction(3, 10), false, false)) {
    const LatticeData L = lattice_data(spec, P);
    const auto corners = tetra_corner_angles(spec, P);
    const std::array<std::array<double, 2>, 4> lifts = {
        {{0.0, 0.0}, {L.u[0], L.u[1]}, {L.v[0], L.v[1]}, {L.u[0] + L.v[0], L.u[1] + L.v[1]}}};
    for (int i = 0; i < 4; ++i) {
      const auto& lift = lifts[static_cast<std::size_t>(i)];
      const auto& tp = corners[static_cast<std::size_t>(i)];
      auto wrap = [](double x) {
        const double twopi = 2 * kPi;
        double r = std::fmod(x, twopi);
        if (r < 0) r += twopi;
        return r;
      };
      CHECK(std::abs(wrap(lift[0]) - tp.s.radians()) < 1e-9);
      CHECK(std::abs(wrap(lift[1]) - tp.t.radians()) < 1e-9);
    }
  }
}

TEST_CASE("lattice data validates the pair flags") {
  const GroupSpec cyclic = GroupSpec::make(2, 5, 1, 1);
  const auto inf_pair = enumerate_pairs(Fraction(2, 5), true, false)[0];
  CHECK_THROWS_AS(lattice_data(cyclic, inf_pair), InvariantViolation);
  const GroupSpec wide = GroupSpec::make(2, 5, 1, 2);
  CHECK_NOTHROW(lattice_data(wide, inf_pair));
}

TEST_CASE("lattice data holds for every pair of a general grid sample") {
  for (Int q = 2; q <= 12; ++q)
    for (Int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (Int mu = 1; mu <= 3; ++mu)
        for (Int nu = 1; nu <= 3; ++nu) {
          if (classify(p, q, mu, nu) != Degeneracy::Generic) continue;
          const GroupSpec spec = GroupSpec::make(p, q, mu, nu);
          for (const auto& P : enumerate_pairs(Fraction(p, q), nu > 1, mu > 1)) {
            const LatticeData L = lattice_data(spec, P);
            const double det = L.u[0] * L.v[1] - L.u[1] * L.v[0];
            const double covol = 4.0 * kPi * kPi / static_cast<double>(q * mu * nu);
            CHECK(std::abs(std::abs(det) - covol) < tol::kLattice * covol);
          }
        }
    }
}

TEST_CASE("cell corners are orbit points, including the extra pairs") {
  const GroupSpec spec = GroupSpec::make(2, 5, 2, 3);
  const Orbit orbit = make_orbit(spec);
  for (const auto& P : enumerate_pairs(Fraction(2, 5), true, true)) {
    for (const auto& c : tetra_corner_angles(spec, P)) CHECK_NOTHROW(orbit.at(c));
  }
}

TEST_CASE("antiprism cells have 2*gon vertices interleaved") {
  const GroupSpec spec = GroupSpec::make(2, 5, 2, 3);
  const auto nu_cell = antiprism_angles(spec, CellAxis::NuGons);
  REQUIRE(nu_cell.size() == 6);
  for (int k = 0; k < 3; ++k) {
    CHECK(nu_cell[static_cast<std::size_t>(k)].s == Turn(0, 1));
    CHECK(nu_cell[static_cast<std::size_t>(3 + k)].s == Turn(1, 10));
    // second-gon point k sits angularly between first-gon points k and k+1
    CHECK(nu_cell[static_cast<std::size_t>(k)].t < nu_cell[static_cast<std::size_t>(3 + k)].t);
  }
  const auto mu_cell = antiprism_angles(spec, CellAxis::MuGons);
  REQUIRE(mu_cell.size() == 4);
  for (int k = 0; k < 2; ++k) CHECK(mu_cell[static_cast<std::size_t>(k)].t == Turn(0, 1));
}
