#pragma once

#include <utility>
#include <vector>

#include "lenshull/fraction.hpp"

namespace lenshull {

enum class PairKind {
  Interior,  // at most one element neighbors Q, at most one neighbors infinity
  Infinity,  // the extra pair {0/1, 1/1}, both Farey neighbors of infinity
  Slope,     // the extra pair whose mediant is Q, both Farey neighbors of Q
};

const char* to_string(PairKind k);

// A Farey pair {A, B} bracketing Q together with all derived integers.
// A < B by value; alpha/a = A and beta/b = B.
struct FareyPair {
  Fraction A, B;
  PairKind kind = PairKind::Interior;
  Int alpha = 0, a = 1, beta = 0, b = 1;
  Fraction X, Y;  // mediant and difference, the two common neighbors
  Int x = 0, y = 0, x_prime = 0, y_prime = 0, a_prime = 0, b_prime = 0;
};

// Populates every derived integer of the pair and asserts the wedge
// identities a+b = x, |a-b| = y, a'+b' = y', |a'-b'| = x', a'b + b'a = q.
FareyPair derive_invariants(Fraction A, Fraction B, const Fraction& Q,
                            PairKind kind = PairKind::Interior);

// Every Farey interval that strictly brackets Q, from (0/1, 1/1) down to
// the interval whose mediant is Q. Successive intervals differ by one
// mediant insertion, so this is the Stern-Brocot path to Q.
std::vector<std::pair<Fraction, Fraction>> farey_walk(const Fraction& Q);

// The ordered pairs indexing the tetrahedral facets. With both flags off,
// exactly the walk intervals minus the first and last one (count n - 3).
// include_inf_pair prepends {0/1, 1/1}; include_q_pair appends the
// interval whose mediant is Q. The two coincide only for Q = 1/2, in
// which case the pair is emitted once.
std::vector<FareyPair> enumerate_pairs(const Fraction& Q, bool include_inf_pair,
                                       bool include_q_pair);

}  // namespace lenshull
