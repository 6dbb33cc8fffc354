#include "lenshull/group.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "lenshull/tolerances.hpp"

namespace lenshull {

namespace {
constexpr Int kClosureCap = 1'000'000;
}

Turn::Turn(Int n, Int d) {
  if (d <= 0) throw std::invalid_argument("turn denominator must be positive");
  Int g = std::gcd(n, d);
  n /= g;
  d /= g;
  n %= d;
  if (n < 0) n += d;
  num = n;
  den = d;
}

double Turn::radians() const { return 2.0 * std::numbers::pi * turns(); }

Turn Turn::operator+(const Turn& o) const {
  return Turn(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
              checked_mul(den, o.den));
}

Turn Turn::operator*(Int k) const { return Turn(checked_mul(num, k % den), den); }

std::array<double, 4> embed(const TorusPoint& a) {
  const double u = a.s.radians(), v = a.t.radians();
  return {std::cos(u), std::sin(u), std::cos(v), std::sin(v)};
}

const char* to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::Generic: return "Generic";
    case Degeneracy::TwoCaps: return "TwoCaps";
    case Degeneracy::ProductOfPolygons: return "ProductOfPolygons";
    case Degeneracy::AntiprismOnly: return "AntiprismOnly";
    case Degeneracy::LowOrder: return "LowOrder";
  }
  return "?";
}

Degeneracy classify(Int p, Int q, Int mu, Int nu) {
  if (q == 1) return mu * nu < 5 ? Degeneracy::LowOrder : Degeneracy::ProductOfPolygons;
  if (mu == 1 && nu == 1 && (p == 1 || p == q - 1)) return Degeneracy::TwoCaps;
  if ((mu == 1) != (nu == 1) && 2 * p == q) return Degeneracy::AntiprismOnly;
  if (q * mu * nu < 5) return Degeneracy::LowOrder;
  return Degeneracy::Generic;
}

std::string GroupSpec::str() const {
  return "(p=" + std::to_string(p) + ", q=" + std::to_string(q) + ", mu=" + std::to_string(mu) +
         ", nu=" + std::to_string(nu) + ")";
}

GroupSpec GroupSpec::make(Int p, Int q, Int mu, Int nu) {
  if (q < 1 || mu < 1 || nu < 1) throw std::invalid_argument("q, mu, nu must be positive");
  if (p < 0 || p >= q) throw std::invalid_argument("p must lie in [0, q)");
  if (q > 1 && std::gcd(p, q) != 1) throw std::invalid_argument("p must be coprime to q");
  GroupSpec s;
  s.p = p;
  s.q = q;
  s.mu = mu;
  s.nu = nu;
  s.degeneracy = classify(p, q, mu, nu);
  return s;
}

GroupSpec canonicalize(const std::vector<TorusPoint>& generators) {
  if (generators.empty()) throw std::invalid_argument("canonicalize: empty generator list");

  std::set<TorusPoint> G{TorusPoint{}};
  std::vector<TorusPoint> frontier(G.begin(), G.end());
  while (!frontier.empty()) {
    std::vector<TorusPoint> next;
    for (const auto& g : frontier)
      for (const auto& h : generators) {
        TorusPoint s = g + h;
        if (G.insert(s).second) {
          if (static_cast<Int>(G.size()) > kClosureCap)
            throw std::runtime_error("subgroup closure exceeds the element cap");
          next.push_back(s);
        }
      }
    frontier = std::move(next);
  }

  const Int order = static_cast<Int>(G.size());
  Int mu = 0, nu = 0;
  for (const auto& g : G) {
    if (g.t.is_zero()) ++mu;
    if (g.s.is_zero()) ++nu;
  }
  if (order % (mu * nu) != 0) throw InvariantViolation("group order not divisible by mu*nu");
  const Int q = order / (mu * nu);

  Int p = 0;
  if (q > 1) {
    std::set<TorusPoint> image;
    for (const auto& g : G) image.insert({g.s * mu, g.t * nu});
    if (static_cast<Int>(image.size()) != q)
      throw InvariantViolation("psi image has unexpected order");
    bool found = false;
    for (const auto& e : image) {
      if (e.s == Turn(1, q)) {
        p = e.t.num * (q / e.t.den);
        found = true;
        break;
      }
    }
    if (!found) throw InvariantViolation("psi image is not cyclic of order q");
    for (Int k = 0; k < q; ++k)
      if (!image.count({Turn(k, q), Turn(k * p % q, q)}))
        throw InvariantViolation("psi image does not match the cyclic model");
  }
  return GroupSpec::make(p, q, mu, nu);
}

Int Orbit::at(const TorusPoint& a) const {
  auto it = index.find(a);
  if (it == index.end())
    throw InvariantViolation("angle pair is not an orbit point");
  return it->second;
}

Orbit make_orbit(const GroupSpec& spec) {
  Orbit O;
  O.spec = spec;
  const Int p = spec.p, q = spec.q, mu = spec.mu, nu = spec.nu;
  O.points.reserve(static_cast<std::size_t>(spec.order()));
  for (Int j1 = 0; j1 < mu; ++j1)
    for (Int j2 = 0; j2 < nu; ++j2)
      for (Int k = 0; k < q; ++k) {
        OrbitPoint pt;
        pt.index = static_cast<Int>(O.points.size());
        pt.j1 = j1;
        pt.j2 = j2;
        pt.k = k;
        pt.angles = {Turn(k + j1 * q, q * mu), Turn(checked_mul(k, p) + j2 * q, q * nu)};
        pt.coords = embed(pt.angles);
        O.index.emplace(pt.angles, pt.index);
        O.points.push_back(pt);
      }
  if (O.index.size() != O.points.size())
    throw InvariantViolation("orbit points are not pairwise distinct");
  return O;
}

std::array<TorusPoint, 4> tetra_corner_angles(const GroupSpec& spec, const FareyPair& P) {
  const Int p = spec.p, q = spec.q, mu = spec.mu, nu = spec.nu;
  const Int da = checked_sub(checked_mul(P.a, p), checked_mul(P.alpha, q));
  const Int db = checked_sub(checked_mul(P.b, p), checked_mul(P.beta, q));
  return {TorusPoint{},
          TorusPoint{Turn(P.a, q * mu), Turn(da, q * nu)},
          TorusPoint{Turn(P.b, q * mu), Turn(db, q * nu)},
          TorusPoint{Turn(P.x, q * mu), Turn(da + db, q * nu)}};
}

TorusPoint tetra_center_angles(const GroupSpec& spec, const FareyPair& P) {
  const Int q = spec.q;
  const Int xi = checked_add(P.alpha, P.beta);
  return {Turn(P.x, 2 * spec.mu * q),
          Turn(checked_sub(checked_mul(P.x, spec.p), checked_mul(xi, q)), 2 * spec.nu * q)};
}

LatticeData lattice_data(const GroupSpec& spec, const FareyPair& P) {
  const Int p = spec.p, q = spec.q, mu = spec.mu, nu = spec.nu;
  if (checked_add(checked_mul(P.a_prime, P.b), checked_mul(P.b_prime, P.a)) != q)
    throw InvariantViolation("pair does not belong to this group");
  if (P.kind == PairKind::Infinity && nu <= 1)
    throw InvariantViolation("infinity pair requires nu > 1");
  if (P.kind == PairKind::Slope && mu <= 1)
    throw InvariantViolation("slope pair requires mu > 1");

  // Exact form of the strict containment in center + (-pi, pi)^2.
  if (!(P.x < mu * q && P.y < mu * q && P.x_prime < nu * q && P.y_prime < nu * q))
    throw InvariantViolation("parallelogram is not strictly contained in the chart");

  const Int da = checked_sub(checked_mul(P.a, p), checked_mul(P.alpha, q));
  const Int db = checked_sub(checked_mul(P.b, p), checked_mul(P.beta, q));
  if (!((da > 0 && db < 0) || (da < 0 && db > 0)))
    throw InvariantViolation("lift ordinates must have opposite signs");

  const double pi = std::numbers::pi;
  LatticeData L;
  L.u = {P.a * 2.0 * pi / (mu * q), da * 2.0 * pi / (nu * q)};
  L.v = {P.b * 2.0 * pi / (mu * q), db * 2.0 * pi / (nu * q)};
  L.center_bar = {0.5 * (L.u[0] + L.v[0]), 0.5 * (L.u[1] + L.v[1])};
  L.center = tetra_center_angles(spec, P);

  const double det = L.u[0] * L.v[1] - L.u[1] * L.v[0];
  const double covol = 4.0 * pi * pi / static_cast<double>(q * mu * nu);
  if (std::abs(std::abs(det) - covol) > tol::kLattice * covol)
    throw InvariantViolation("basis determinant does not match the lattice covolume");

  const std::array<std::array<double, 2>, 4> corners = {
      {{0.0, 0.0}, {L.u[0], L.u[1]}, {L.v[0], L.v[1]}, {L.u[0] + L.v[0], L.u[1] + L.v[1]}}};
  for (const auto& c : corners)
    for (int i = 0; i < 2; ++i)
      if (std::abs(c[i] - L.center_bar[i]) >= pi - tol::kLattice)
        throw InvariantViolation("parallelogram corner escapes the chart");
  return L;
}

std::vector<TorusPoint> antiprism_angles(const GroupSpec& spec, CellAxis axis) {
  const Int q = spec.q, mu = spec.mu, nu = spec.nu;
  const Turn zero(0, 1);
  const Turn step = axis == CellAxis::NuGons ? Turn(1, q * mu) : Turn(1, q * nu);
  const Int expected = 2 * (axis == CellAxis::NuGons ? nu : mu);

  Orbit O = make_orbit(spec);
  std::vector<TorusPoint> first, second;
  for (const auto& pt : O.points) {
    const Turn& held = axis == CellAxis::NuGons ? pt.angles.s : pt.angles.t;
    if (held == zero)
      first.push_back(pt.angles);
    else if (held == step)
      second.push_back(pt.angles);
  }
  auto by_moving = [axis](const TorusPoint& a, const TorusPoint& b) {
    return axis == CellAxis::NuGons ? a.t < b.t : a.s < b.s;
  };
  std::sort(first.begin(), first.end(), by_moving);
  std::sort(second.begin(), second.end(), by_moving);
  if (static_cast<Int>(first.size() + second.size()) != expected)
    throw InvariantViolation("antiprism cell has the wrong number of vertices");

  std::vector<TorusPoint> out = std::move(first);
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

}  // namespace lenshull
