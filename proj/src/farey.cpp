#include "lenshull/farey.hpp"

#include <cstdlib>

namespace lenshull {

const char* to_string(PairKind k) {
  switch (k) {
    case PairKind::Interior: return "interior";
    case PairKind::Infinity: return "infinity";
    case PairKind::Slope: return "slope";
  }
  return "?";
}

FareyPair derive_invariants(Fraction A, Fraction B, const Fraction& Q, PairKind kind) {
  if (B < A) std::swap(A, B);
  if (wedge(A, B) != 1) throw InvariantViolation("pair is not a Farey edge: " + A.str() + ", " + B.str());
  if (Q.is_infinite() || !(A < Q && Q < B))
    throw InvariantViolation("Q must lie strictly between the pair: " + Q.str());

  FareyPair P;
  P.A = A;
  P.B = B;
  P.kind = kind;
  P.alpha = A.num;
  P.a = A.den;
  P.beta = B.num;
  P.b = B.den;
  P.X = mediant(A, B);
  P.Y = farey_difference(A, B);

  const Fraction inf = Fraction::infinity();
  P.x = wedge(P.X, inf);
  P.y = wedge(P.Y, inf);
  P.a_prime = wedge(A, Q);
  P.b_prime = wedge(B, Q);
  P.x_prime = wedge(P.X, Q);
  P.y_prime = wedge(P.Y, Q);

  auto check = [](bool ok, const char* what) {
    if (!ok) throw InvariantViolation(std::string("wedge identity failed: ") + what);
  };
  check(P.a + P.b == P.x, "a + b = x");
  check(std::abs(P.a - P.b) == P.y, "|a - b| = y");
  check(P.a_prime + P.b_prime == P.y_prime, "a' + b' = y'");
  check(std::abs(P.a_prime - P.b_prime) == P.x_prime, "|a' - b'| = x'");
  check(checked_add(checked_mul(P.a_prime, P.b), checked_mul(P.b_prime, P.a)) == Q.den,
        "a'b + b'a = q");
  return P;
}

std::vector<std::pair<Fraction, Fraction>> farey_walk(const Fraction& Q) {
  if (Q.is_infinite() || Q.num <= 0 || Q.num >= Q.den)
    throw std::invalid_argument("farey_walk requires a rational strictly between 0 and 1");
  Fraction lo(0, 1), hi(1, 1);
  std::vector<std::pair<Fraction, Fraction>> out;
  while (true) {
    out.push_back({lo, hi});
    Fraction m = mediant(lo, hi);
    if (m == Q) break;
    if (Q < m)
      hi = m;
    else
      lo = m;
  }
  return out;
}

std::vector<FareyPair> enumerate_pairs(const Fraction& Q, bool include_inf_pair,
                                       bool include_q_pair) {
  if (Q.is_infinite() || Q.num <= 0 || Q.num >= Q.den)
    throw std::invalid_argument("enumerate_pairs requires a rational strictly between 0 and 1");
  const Int p = Q.num, q = Q.den;
  if (!include_inf_pair && !include_q_pair && (p == 1 || p == q - 1))
    throw ExcludedSlope("slope " + Q.str() +
                        " has a plane-polygon orbit; no tetrahedral facets exist");

  auto walk = farey_walk(Q);
  std::vector<FareyPair> out;
  if (include_inf_pair) out.push_back(derive_invariants(walk.front().first, walk.front().second, Q, PairKind::Infinity));
  for (std::size_t i = 1; i + 1 < walk.size(); ++i)
    out.push_back(derive_invariants(walk[i].first, walk[i].second, Q, PairKind::Interior));
  // For Q = 1/2 the first and last interval coincide; emit the pair once.
  if (include_q_pair && !(include_inf_pair && walk.size() == 1))
    out.push_back(derive_invariants(walk.back().first, walk.back().second, Q, PairKind::Slope));
  return out;
}

}  // namespace lenshull
