#include "lenshull/fraction.hpp"

#include <cstdlib>
#include <numeric>

namespace lenshull {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
  return r;
}

Fraction::Fraction(Int n, Int d) {
  if (d == 0) {
    if (n == 0) throw std::invalid_argument("0/0 is not a rational");
    num = 1;
    den = 0;
    return;
  }
  if (d < 0) {
    n = checked_sub(0, n);
    d = checked_sub(0, d);
  }
  Int g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

double Fraction::value() const {
  if (is_infinite()) throw std::domain_error("infinity has no double value");
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string Fraction::str() const {
  if (is_infinite()) return "1/0";
  return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Fraction& l, const Fraction& r) {
  if (l.is_infinite()) return false;
  if (r.is_infinite()) return true;
  return checked_mul(l.num, r.den) < checked_mul(r.num, l.den);
}

Int wedge(const Fraction& h, const Fraction& k) {
  return std::abs(checked_sub(checked_mul(h.num, k.den), checked_mul(h.den, k.num)));
}

Fraction mediant(const Fraction& a, const Fraction& b) {
  return Fraction(checked_add(a.num, b.num), checked_add(a.den, b.den));
}

Fraction farey_difference(const Fraction& a, const Fraction& b) {
  if (a.den == b.den) return Fraction::infinity();
  return Fraction(std::abs(checked_sub(a.num, b.num)), std::abs(checked_sub(a.den, b.den)));
}

ContinuedFraction continued_fraction(const Fraction& q) {
  if (q.is_infinite() || q.num <= 0 || q.num >= q.den)
    throw std::invalid_argument("continued_fraction requires a rational strictly between 0 and 1");
  ContinuedFraction cf;
  cf.coefficients.push_back(0);
  Int a = q.den, b = q.num;
  while (b != 0) {
    cf.coefficients.push_back(a / b);
    Int r = a % b;
    a = b;
    b = r;
  }
  for (Int c : cf.coefficients) cf.n = checked_add(cf.n, c);
  return cf;
}

Fraction evaluate(const ContinuedFraction& cf) {
  if (cf.coefficients.empty()) throw std::invalid_argument("empty continued fraction");
  // Fold from the tail: value = c + 1/value.
  Int num = cf.coefficients.back(), den = 1;
  for (auto it = cf.coefficients.rbegin() + 1; it != cf.coefficients.rend(); ++it) {
    std::swap(num, den);
    num = checked_add(num, checked_mul(*it, den));
  }
  return Fraction(num, den);
}

}  // namespace lenshull
