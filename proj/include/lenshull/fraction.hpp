#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lenshull/errors.hpp"

namespace lenshull {

using Int = std::int64_t;

// 64-bit arithmetic with overflow detection. Inputs stay well inside the
// range for the CLI cap q <= 10^6, but the contract is explicit.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// Reduced rational, including infinity = 1/0. den > 0 for finite values.
struct Fraction {
  Int num = 0;
  Int den = 1;

  Fraction() = default;
  Fraction(Int n, Int d);

  static Fraction infinity() {
    Fraction f;
    f.num = 1;
    f.den = 0;
    return f;
  }

  bool is_infinite() const { return den == 0; }
  double value() const;
  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Value order; infinity compares greater than every finite rational.
bool operator<(const Fraction& l, const Fraction& r);
inline bool operator>(const Fraction& l, const Fraction& r) { return r < l; }
inline bool operator<=(const Fraction& l, const Fraction& r) { return !(r < l); }
inline bool operator>=(const Fraction& l, const Fraction& r) { return !(l < r); }

// |u t - v s| for reduced u/v, s/t. Symmetric; 1 exactly for Farey
// neighbors; wedge(h, infinity) is the denominator of h.
Int wedge(const Fraction& h, const Fraction& k);

Fraction mediant(const Fraction& a, const Fraction& b);

// The second common Farey neighbor |alpha-beta| / |a-b| of a Farey pair;
// infinity when the denominators agree (pair {0/1, 1/1}).
Fraction farey_difference(const Fraction& a, const Fraction& b);

// Continued fraction [0; c1, ..., ck] of a rational in (0,1), produced by
// Euclid's algorithm. The expansion is canonical: the last coefficient is
// >= 2 whenever there is more than one. n is the sum of all coefficients.
struct ContinuedFraction {
  std::vector<Int> coefficients;
  Int n = 0;
};

ContinuedFraction continued_fraction(const Fraction& q);
Fraction evaluate(const ContinuedFraction& cf);

}  // namespace lenshull
