#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "lenshull/farey.hpp"
#include "lenshull/fraction.hpp"

namespace lenshull {

// Angle stored as an exact fraction of a full turn, normalized to [0, 1).
struct Turn {
  Int num = 0;
  Int den = 1;

  Turn() = default;
  Turn(Int n, Int d);

  bool is_zero() const { return num == 0; }
  double turns() const { return static_cast<double>(num) / static_cast<double>(den); }
  double radians() const;

  Turn operator+(const Turn& o) const;
  Turn operator*(Int k) const;

  friend bool operator==(const Turn&, const Turn&) = default;
  friend bool operator<(const Turn& a, const Turn& b) {
    return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
  }
};

// A point of the torus (R/2piZ)^2, both angles exact.
struct TorusPoint {
  Turn s, t;

  TorusPoint operator+(const TorusPoint& o) const { return {s + o.s, t + o.t}; }
  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend bool operator<(const TorusPoint& a, const TorusPoint& b) {
    if (a.s == b.s) return a.t < b.t;
    return a.s < b.s;
  }
};

// iota(s, t) = (cos 2pi s, sin 2pi s, cos 2pi t, sin 2pi t).
std::array<double, 4> embed(const TorusPoint& a);

enum class Degeneracy {
  Generic,
  TwoCaps,            // p = +-1 mod q with mu = nu = 1: plane polygon orbit
  ProductOfPolygons,  // p/q = 0: orbit is an mu-gon x nu-gon
  AntiprismOnly,      // p/q = 1/2 with exactly one of mu, nu equal to 1
  LowOrder,           // fewer than 5 points, no 4-dimensional hull possible
};

const char* to_string(Degeneracy d);

// Canonical invariants (p, q, mu, nu) of a finite subgroup of the torus:
// the group is the psi_{mu,nu}-preimage of {(k/q, kp/q)}.
struct GroupSpec {
  Int p = 0, q = 1, mu = 1, nu = 1;
  Degeneracy degeneracy = Degeneracy::LowOrder;

  Int order() const { return q * mu * nu; }
  std::string str() const;

  static GroupSpec make(Int p, Int q, Int mu, Int nu);
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

Degeneracy classify(Int p, Int q, Int mu, Int nu);

// Closes the generators into the full finite subgroup and extracts the
// canonical invariants. Throws on empty input; closure capped at 10^6.
GroupSpec canonicalize(const std::vector<TorusPoint>& generators);

struct OrbitPoint {
  Int index = 0;
  Int j1 = 0, j2 = 0, k = 0;  // coset labels and cyclic position
  TorusPoint angles;
  std::array<double, 4> coords{};
};

// The embedded orbit of x0 = (1,0,1,0), ordered lexicographically in
// (j1, j2, k); point angles are ((k + j1 q)/(q mu), (k p + j2 q)/(q nu)).
struct Orbit {
  GroupSpec spec;
  std::vector<OrbitPoint> points;
  std::map<TorusPoint, Int> index;

  Int at(const TorusPoint& a) const;
};

Orbit make_orbit(const GroupSpec& spec);

// Lifts of tau_a, tau_b spanning a fundamental parallelogram of the orbit
// lattice, plus its center (the cap center of the supporting form).
struct LatticeData {
  std::array<double, 2> u{}, v{};
  std::array<double, 2> center_bar{};
  TorusPoint center;
};

LatticeData lattice_data(const GroupSpec& spec, const FareyPair& pair);

// The four corner angles of the tetrahedron cell attached to a pair,
// corner 0 at the identity.
std::array<TorusPoint, 4> tetra_corner_angles(const GroupSpec& spec, const FareyPair& pair);

// Center of that cell's parallelogram as a torus point.
TorusPoint tetra_center_angles(const GroupSpec& spec, const FareyPair& pair);

enum class CellAxis {
  NuGons,  // two nu-gons, 2nu vertices: orbit points with s in {0, 1/(q mu)}
  MuGons,  // two mu-gons, 2mu vertices: orbit points with t in {0, 1/(q nu)}
};

// Antiprism cell vertices, the maximizers of the axis support form.
// Returned gon by gon, each gon in angular order, so that the k-th point
// of the second gon sits angularly between the k-th and (k+1)-th of the
// first.
std::vector<TorusPoint> antiprism_angles(const GroupSpec& spec, CellAxis axis);

}  // namespace lenshull
