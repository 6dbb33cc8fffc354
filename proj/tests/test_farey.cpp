#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "lenshull/farey.hpp"

using namespace lenshull;

namespace {

// Independent oracle: scan every Farey pair in [0,1] with denominators up
// to q against the raw hypotheses (Farey edge, Q strictly inside, at most
// one neighbor of Q, at most one neighbor of infinity).
std::set<std::pair<Fraction, Fraction>> brute_force_pairs(const Fraction& Q) {
  const Int q = Q.den;
  std::set<std::pair<Fraction, Fraction>> out;
  std::vector<Fraction> fracs;
  for (Int d = 1; d <= q; ++d)
    for (Int n = 0; n <= d; ++n)
      if (std::gcd(n, d) == 1) fracs.push_back(Fraction(n, d));
  std::sort(fracs.begin(), fracs.end());
  fracs.erase(std::unique(fracs.begin(), fracs.end()), fracs.end());
  for (std::size_t i = 0; i < fracs.size(); ++i)
    for (std::size_t j = i + 1; j < fracs.size(); ++j) {
      const Fraction &A = fracs[i], &B = fracs[j];
      if (wedge(A, B) != 1) continue;
      if (!(A < Q && Q < B)) continue;
      const int q_neighbors = (wedge(A, Q) == 1) + (wedge(B, Q) == 1);
      const int inf_neighbors = (A.den == 1) + (B.den == 1);
      if (q_neighbors > 1 || inf_neighbors > 1) continue;
      out.insert({A, B});
    }
  return out;
}

}  // namespace

TEST_CASE("enumerate_pairs frozen examples") {
  auto pairs = enumerate_pairs(Fraction(2, 5), false, false);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].A == Fraction(0, 1));
  CHECK(pairs[0].B == Fraction(1, 2));

  pairs = enumerate_pairs(Fraction(2, 7), false, false);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].A == Fraction(0, 1));
  CHECK(pairs[0].B == Fraction(1, 2));
  CHECK(pairs[1].A == Fraction(0, 1));
  CHECK(pairs[1].B == Fraction(1, 3));

  CHECK_THROWS_AS(enumerate_pairs(Fraction(1, 5), false, false), ExcludedSlope);
  CHECK_THROWS_AS(enumerate_pairs(Fraction(4, 5), false, false), ExcludedSlope);
}

TEST_CASE("derive_invariants frozen examples") {
  const FareyPair P = derive_invariants(Fraction(0, 1), Fraction(1, 2), Fraction(2, 5));
  CHECK(P.a == 1);
  CHECK(P.b == 2);
  CHECK(P.a_prime == 2);
  CHECK(P.b_prime == 1);
  CHECK(P.x == 3);
  CHECK(P.y == 1);
  CHECK(P.x_prime == 1);
  CHECK(P.y_prime == 3);

  const FareyPair R = derive_invariants(Fraction(0, 1), Fraction(1, 3), Fraction(2, 7));
  CHECK(R.a == 1);
  CHECK(R.b == 3);
  CHECK(R.a_prime == 2);
  CHECK(R.b_prime == 1);
  CHECK(R.x == 4);
  CHECK(R.y == 2);
  CHECK(R.x_prime == 1);
  CHECK(R.y_prime == 3);
}

TEST_CASE("derive_invariants rejects bad input") {
  CHECK_THROWS_AS(derive_invariants(Fraction(0, 1), Fraction(1, 3), Fraction(1, 2)),
                  InvariantViolation);  // Q outside
  CHECK_THROWS_AS(derive_invariants(Fraction(0, 1), Fraction(2, 3), Fraction(1, 2)),
                  InvariantViolation);  // not a Farey edge
}

TEST_CASE("enumeration matches the brute-force filter") {
  for (Int q = 5; q <= 40; ++q)
    for (Int p = 2; p <= q - 2; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Fraction Q(p, q);
      const auto expected = brute_force_pairs(Q);
      const auto got = enumerate_pairs(Q, false, false);
      REQUIRE(got.size() == expected.size());
      for (const auto& P : got) CHECK(expected.count({P.A, P.B}) == 1);
    }
}

TEST_CASE("pair count equals n - 3") {
  for (Int q = 5; q <= 60; ++q)
    for (Int p = 2; p <= q - 2; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Fraction Q(p, q);
      CHECK(static_cast<Int>(enumerate_pairs(Q, false, false).size()) ==
            continued_fraction(Q).n - 3);
    }
}

TEST_CASE("Remark-2 ordering: first pair, successors, reversal, last pair") {
  for (Int q = 5; q <= 40; ++q)
    for (Int p = 2; p <= q - 2; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Fraction Q(p, q);
      const auto pairs = enumerate_pairs(Q, false, false);
      if (pairs.empty()) continue;

      if (Q < Fraction(1, 2)) {
        CHECK(pairs[0].A == Fraction(0, 1));
        CHECK(pairs[0].B == Fraction(1, 2));
      } else {
        CHECK(pairs[0].A == Fraction(1, 2));
        CHECK(pairs[0].B == Fraction(1, 1));
      }

      for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
        const Fraction med = mediant(pairs[i].A, pairs[i].B);
        const bool left = pairs[i + 1].A == pairs[i].A && pairs[i + 1].B == med;
        const bool right = pairs[i + 1].A == med && pairs[i + 1].B == pairs[i].B;
        CHECK((left || right));

        // "the pair coming before": keep the smaller-denominator element,
        // pair it with the difference fraction.
        const FareyPair& nxt = pairs[i + 1];
        const Fraction small = nxt.A.den < nxt.B.den ? nxt.A : nxt.B;
        const Fraction diff = farey_difference(nxt.A, nxt.B);
        const Fraction lo = small < diff ? small : diff;
        const Fraction hi = small < diff ? diff : small;
        CHECK(pairs[i].A == lo);
        CHECK(pairs[i].B == hi);
      }

      // Last pair: inserting one more mediant on the correct side lands on Q.
      const FareyPair& last = pairs.back();
      const Fraction med = mediant(last.A, last.B);
      const bool via_a = mediant(last.A, med) == Q;
      const bool via_b = mediant(med, last.B) == Q;
      CHECK((via_a || via_b));
    }
}

TEST_CASE("no derived integer equals q/2 for interior pairs") {
  for (Int q = 6; q <= 60; q += 2)
    for (Int p = 2; p <= q - 2; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (const auto& P : enumerate_pairs(Fraction(p, q), false, false)) {
        CHECK(2 * P.a != q);
        CHECK(2 * P.b != q);
        CHECK(2 * P.a_prime != q);
        CHECK(2 * P.b_prime != q);
      }
    }
}

TEST_CASE("extra pairs carry the boundary values") {
  const auto with_inf = enumerate_pairs(Fraction(2, 5), true, false);
  REQUIRE(with_inf.size() == 2);
  CHECK(with_inf[0].kind == PairKind::Infinity);
  CHECK(with_inf[0].A == Fraction(0, 1));
  CHECK(with_inf[0].B == Fraction(1, 1));
  CHECK(with_inf[0].y == 0);
  CHECK(with_inf[0].y_prime == 5);

  const auto with_q = enumerate_pairs(Fraction(2, 5), false, true);
  REQUIRE(with_q.size() == 2);
  CHECK(with_q[1].kind == PairKind::Slope);
  CHECK(with_q[1].x_prime == 0);
  CHECK(with_q[1].x == 5);
  CHECK(mediant(with_q[1].A, with_q[1].B) == Fraction(2, 5));

  // Q = 1/2: the two extra pairs coincide and are emitted once.
  const auto both = enumerate_pairs(Fraction(1, 2), true, true);
  REQUIRE(both.size() == 1);
  CHECK(both[0].A == Fraction(0, 1));
  CHECK(both[0].B == Fraction(1, 1));
}

TEST_CASE("wedge identities hold for every enumerated pair with flags") {
  for (Int q = 2; q <= 30; ++q)
    for (Int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (const auto& P : enumerate_pairs(Fraction(p, q), true, true)) {
        CHECK(P.a + P.b == P.x);
        CHECK(std::abs(P.a - P.b) == P.y);
        CHECK(P.a_prime + P.b_prime == P.y_prime);
        CHECK(std::abs(P.a_prime - P.b_prime) == P.x_prime);
        CHECK(P.a_prime * P.b + P.b_prime * P.a == q);
      }
    }
}
