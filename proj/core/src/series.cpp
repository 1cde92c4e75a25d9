#include "quadmaps/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace quadmaps {

Series::Series(int order) {
  if (order < 0) throw std::invalid_argument("Series: negative order");
  c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

Series::Series(const Rational& c0, int order) : Series(order) { c_[0] = c0; }

Series Series::g(int order) {
  Series s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

Series Series::truncated(int order) const {
  Series r(order);
  int m = std::min(order, this->order());
  for (int k = 0; k <= m; ++k) r[k] = c_[static_cast<size_t>(k)];
  return r;
}

Series Series::shifted_up(int k) const {
  Series r(order());
  for (int j = order(); j >= k; --j) r[j] = c_[static_cast<size_t>(j - k)];
  return r;
}

Series Series::shifted_down(int k) const {
  for (int j = 0; j < k && j <= order(); ++j)
    if (c_[static_cast<size_t>(j)] != 0)
      throw std::domain_error("Series::shifted_down: nonzero low coefficient");
  Series r(order());
  for (int j = 0; j + k <= order(); ++j) r[j] = c_[static_cast<size_t>(j + k)];
  return r;
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

Series Series::operator-() const {
  Series r(order());
  for (int k = 0; k <= order(); ++k) r[k] = -c_[static_cast<size_t>(k)];
  return r;
}

Series& Series::operator+=(const Series& o) {
  *this = *this + o;
  return *this;
}

Series& Series::operator-=(const Series& o) {
  *this = *this - o;
  return *this;
}

std::string Series::str() const {
  std::ostringstream os;
  for (int k = 0; k <= order(); ++k) {
    if (k) os << " + ";
    os << c_[static_cast<size_t>(k)].get_str() << "*g^" << k;
  }
  return os.str();
}

static int common_order(const Series& a, const Series& b) {
  return std::min(a.order(), b.order());
}

Series operator+(const Series& a, const Series& b) {
  Series r(common_order(a, b));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  Series r(common_order(a, b));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  Series r(common_order(a, b));
  for (int i = 0; i <= r.order(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= r.order(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Series operator*(const Series& a, const Rational& s) {
  Series r(a.order());
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] * s;
  return r;
}

Series operator*(const Rational& s, const Series& a) { return a * s; }

Series operator+(const Series& a, const Rational& s) {
  Series r = a;
  r[0] += s;
  return r;
}

Series operator-(const Series& a, const Rational& s) {
  Series r = a;
  r[0] -= s;
  return r;
}

bool operator==(const Series& a, const Series& b) {
  if (a.order() != b.order()) return false;
  for (int k = 0; k <= a.order(); ++k)
    if (a[k] != b[k]) return false;
  return true;
}

Series inverse(const Series& a) {
  if (a[0] == 0) throw std::domain_error("inverse: zero constant term");
  Series r(a.order());
  r[0] = 1 / a[0];
  for (int k = 1; k <= a.order(); ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += a[j] * r[k - j];
    r[k] = -acc / a[0];
  }
  return r;
}

Series operator/(const Series& a, const Series& b) { return a * inverse(b.truncated(a.order())); }

Series log_series(const Series& a) {
  if (a[0] != 1) throw std::domain_error("log_series: constant term must be 1");
  // log(a)' = a'/a, integrated term by term
  int n = a.order();
  Series da(n);
  for (int k = 0; k + 1 <= n; ++k) da[k] = Rational(k + 1) * a[k + 1];
  Series q = da / a;
  Series r(n);
  for (int k = 1; k <= n; ++k) r[k] = q[k - 1] / Rational(k);
  return r;
}

Series sqrt_series(const Series& a) {
  if (a[0] != 1) throw std::domain_error("sqrt_series: constant term must be 1");
  Series b(a.order());
  b[0] = 1;
  for (int k = 1; k <= a.order(); ++k) {
    Rational acc(0);
    for (int j = 1; j < k; ++j) acc += b[j] * b[k - j];
    b[k] = (a[k] - acc) / 2;
  }
  return b;
}

Series pow_series(const Series& a, int n) {
  if (n < 0) throw std::invalid_argument("pow_series: negative exponent");
  Series r(Rational(1), a.order());
  Series base = a;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Series solve_R(int order) {
  // R = (1 - sqrt(1-12g))/(6g)
  Series u(Rational(1), order + 1);
  if (order + 1 >= 1) u[1] = -12;
  Series s = sqrt_series(u);
  Series num = Series(Rational(1), order + 1) - s;
  return num.shifted_down(1).truncated(order) * Rational(1, 6);
}

Series solve_x(int order) {
  static std::map<int, Series> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  // fixed point of x = g (x^2+4x+1)^2 / (x^2+x+1); gains one order per sweep
  Series x(order);
  Series g = Series::g(order);
  for (int pass = 0; pass <= order; ++pass) {
    Series x2 = x * x;
    Series num = x2 + Rational(4) * x + Rational(1);
    Series den = x2 + x + Rational(1);
    x = g * num * num / den;
  }
  // sanity: g (x^2+4x+1)^2 = x (x^2+x+1)
  Series x2 = x * x;
  Series lhs = g * pow_series(x2 + Rational(4) * x + Rational(1), 2);
  Series rhs = x * (x2 + x + Rational(1));
  if (!(lhs == rhs)) throw std::logic_error("solve_x: fixed point failed");
  cache.emplace(order, x);
  return x;
}

Series bracket(int i, int order) {
  if (i < 0) throw std::invalid_argument("bracket: negative index");
  static std::map<std::pair<int, int>, Series> cache;
  auto key = std::make_pair(i, order);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Series x = solve_x(order);
  Series r(order);
  Series xk(Rational(1), order);
  // x = O(g), so powers beyond the truncation order contribute nothing
  for (int k = 0; k < i; ++k) {
    if (k > order) break;
    r += xk;
    xk = xk * x;
  }
  cache.emplace(key, r);
  return r;
}

}  // namespace quadmaps
