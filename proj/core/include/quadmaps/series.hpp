#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace quadmaps {

using Rational = mpq_class;

// Truncated formal power series in the face weight g, with exact rational
// coefficients. A Series of order N carries the coefficients of g^0..g^N;
// every operation truncates its result to the smaller operand order.
class Series {
 public:
  explicit Series(int order);
  Series(const Rational& c0, int order);

  static Series g(int order);  // the series "g" itself

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const Rational& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  Rational& operator[](int k) { return c_[static_cast<size_t>(k)]; }

  Series truncated(int order) const;
  // multiplies by g^k
  Series shifted_up(int k) const;
  // divides by g^k; the k leading coefficients must vanish
  Series shifted_down(int k) const;

  bool is_zero() const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);

  std::string str() const;  // "c0 + c1*g + ..." for diagnostics

 private:
  std::vector<Rational> c_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(const Series& a, const Rational& s);
Series operator*(const Rational& s, const Series& a);
Series operator+(const Series& a, const Rational& s);
Series operator-(const Series& a, const Rational& s);
bool operator==(const Series& a, const Series& b);

// reciprocal; requires nonzero constant term
Series inverse(const Series& a);
Series operator/(const Series& a, const Series& b);

// natural log; requires constant term 1
Series log_series(const Series& a);
// square root with value 1 at g=0; requires constant term 1
Series sqrt_series(const Series& a);
// integer power, n >= 0
Series pow_series(const Series& a, int n);

// R(g) = (1 - sqrt(1-12g))/(6g), the unique solution of R = 1 + 3gR^2
// with R(0) = 1. Coefficients 1, 3, 18, 135, ...
Series solve_R(int order);

// x(g), the solution of g = x(x^2+x+1)/(x^2+4x+1)^2 vanishing at g = 0.
Series solve_x(int order);

// [i] = (1 - x^i)/(1 - x) = 1 + x + ... + x^{i-1} evaluated at x = solve_x.
// bracket(0) = 0.
Series bracket(int i, int order);

}  // namespace quadmaps
