#include "quadmaps/gf_discrete.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace quadmaps {

void DistanceTriple::stu(int& s, int& t, int& u) const {
  s = (d12 - d23 + d31) / 2;
  t = (d12 + d23 - d31) / 2;
  u = (-d12 + d23 + d31) / 2;
}

bool DistanceTriple::valid() const {
  if (d12 < 0 || d23 < 0 || d31 < 0) return false;
  if ((d12 + d23 + d31) % 2 != 0) return false;
  return d12 <= d23 + d31 && d23 <= d31 + d12 && d31 <= d12 + d23;
}

bool DistanceTriple::aligned() const {
  int s, t, u;
  stu(s, t, u);
  return s == 0 || t == 0 || u == 0;
}

namespace {

// Table of R_i, i = 0..i_max, solved order by order from
// R_i = 1 + g (R_{i-1} + R_i + R_{i+1}) R_i with R_0 = 0.
// R_j agrees with R_{j'} up to order min(j,j') so the table is closed at
// the top once i_max exceeds the truncation order.
std::vector<Series> r_recursive_table(int i_max, int order) {
  std::vector<Series> R;
  R.reserve(static_cast<size_t>(i_max) + 1);
  R.emplace_back(order);  // R_0 = 0
  for (int i = 1; i <= i_max; ++i) R.emplace_back(Rational(1), order);
  auto top = [&](int i) -> const Series& { return R[static_cast<size_t>(std::min(i, i_max))]; };
  for (int k = 1; k <= order; ++k) {
    for (int i = 1; i <= i_max; ++i) {
      Rational acc(0);
      const Series& lo = R[static_cast<size_t>(i - 1)];
      const Series& mid = R[static_cast<size_t>(i)];
      const Series& hi = top(i + 1);
      for (int a = 0; a <= k - 1; ++a) {
        Rational s = lo[a] + mid[a] + hi[a];
        if (s == 0) continue;
        acc += s * mid[k - 1 - a];
      }
      R[static_cast<size_t>(i)][k] = acc;
    }
  }
  return R;
}

Series x_closed(int s, int t, int order) {
  return bracket(3, order) * bracket(s + 1, order) * bracket(t + 1, order) *
         bracket(s + t + 3, order) /
         (bracket(1, order) * bracket(s + 3, order) * bracket(t + 3, order) *
          bracket(s + t + 1, order));
}

Series x_recursive(int s, int t, int order) {
  // Backward sweep over the index shift j. Errors at the top of the chain
  // are suppressed by at least g^2 per level, so starting from the constant
  // series at shift order+1 is exact after truncation.
  int M = order + 1;
  Series one(Rational(1), order);
  Series g = Series::g(order);
  Series cur = one;
  for (int j = M - 1; j >= 0; --j) {
    Series A = g * r_series(s + j, order) * r_series(t + j, order);
    Series B = g * r_series(s + j + 1, order) * r_series(t + j + 1, order);
    cur = inverse(one - A - A * B * cur);
  }
  return cur;
}

Series x_path_sum(int s, int t, int order) {
  // Sum over Motzkin paths 0 = l_0, ..., l_m = 0 of prod_k g R_{l_k+s} R_{l_k+t}
  // (endpoint excluded), organised as a DP over (steps remaining, height).
  // Each step carries a factor g, so lengths and heights are capped at order.
  int N = order;
  std::vector<Series> W;
  W.reserve(static_cast<size_t>(N) + 2);
  Series g = Series::g(order);
  for (int l = 0; l <= N + 1; ++l)
    W.push_back(g * r_series(l + s, order) * r_series(l + t, order));
  // E[l] after k iterations: paths of length k from height l down to 0
  std::vector<Series> E(static_cast<size_t>(N) + 2, Series(order));
  E[0] = Series(Rational(1), order);
  Series total = E[0];
  std::vector<Series> next(static_cast<size_t>(N) + 2, Series(order));
  for (int k = 1; k <= N; ++k) {
    for (int l = 0; l <= N; ++l) {
      Series acc = E[static_cast<size_t>(l)] + E[static_cast<size_t>(l + 1)];
      if (l > 0) acc += E[static_cast<size_t>(l - 1)];
      next[static_cast<size_t>(l)] = W[static_cast<size_t>(l)] * acc;
    }
    next[static_cast<size_t>(N + 1)] = Series(order);
    std::swap(E, next);
    total += E[0];
  }
  return total;
}

Series y_closed(int s, int t, int u, int order) {
  return bracket(s + 3, order) * bracket(t + 3, order) * bracket(u + 3, order) *
         bracket(s + t + u + 3, order) /
         (bracket(3, order) * bracket(s + t + 3, order) * bracket(t + u + 3, order) *
          bracket(u + s + 3, order));
}

Series y_recursive(int s, int t, int u, int order) {
  int M = order + 1;
  Series g3 = pow_series(Series::g(order), 3);
  Series cur(Rational(1), order);
  for (int j = M - 1; j >= 0; --j) {
    Series w = g3 * r_series(s + j, order) * r_series(s + j + 1, order) *
               r_series(t + j, order) * r_series(t + j + 1, order) *
               r_series(u + j, order) * r_series(u + j + 1, order);
    Series xs = x_series(s + j + 1, t + j + 1, order) * x_series(t + j + 1, u + j + 1, order) *
                x_series(u + j + 1, s + j + 1, order);
    cur = Series(Rational(1), order) + w * xs * cur;
  }
  return cur;
}

// X~_{l,s,t} = x^l [s+1][s+2][t][t+3][2l+s+t+3] /
//              ([s+t+3][l+s+1][l+s+2][l+t][l+t+3]),  X~_{0,s,t} = 1.
Series x_tilde(int l, int s, int t, int order) {
  if (l == 0) return Series(Rational(1), order);
  Series xl = pow_series(solve_x(order), l);
  Series num = bracket(s + 1, order) * bracket(s + 2, order) * bracket(t, order) *
               bracket(t + 3, order) * bracket(2 * l + s + t + 3, order);
  if (num.is_zero()) return Series(order);
  Series den = bracket(s + t + 3, order) * bracket(l + s + 1, order) *
               bracket(l + s + 2, order) * bracket(l + t, order) * bracket(l + t + 3, order);
  return xl * num / den;
}

Series y_sum_form(int s, int t, int u, int order) {
  Series acc(order);
  for (int l = 0; l <= order; ++l)
    acc += x_tilde(l, s, t, order) * x_tilde(l, t, u, order) * x_tilde(l, u, s, order);
  return acc;
}

Series f_closed(int s, int t, int u, int order) {
  Series num = bracket(3, order) *
               pow_series(bracket(s + 1, order) * bracket(t + 1, order) * bracket(u + 1, order) *
                              bracket(s + t + u + 3, order),
                          2);
  Series den = pow_series(bracket(1, order), 3) * bracket(s + t + 1, order) *
               bracket(s + t + 3, order) * bracket(t + u + 1, order) * bracket(t + u + 3, order) *
               bracket(u + s + 1, order) * bracket(u + s + 3, order);
  return num / den;
}

}  // namespace

Series r_series(int i, int order, RMethod method) {
  if (i < 0) throw std::invalid_argument("r_series: negative index");
  if (i == 0) return Series(order);
  if (method == RMethod::closed) {
    static std::map<std::pair<int, int>, Series> cache;
    auto key = std::make_pair(i, order);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Series r = solve_R(order) * bracket(i, order) * bracket(i + 3, order) /
               (bracket(i + 1, order) * bracket(i + 2, order));
    cache.emplace(key, r);
    return r;
  }
  static std::map<int, std::vector<Series>> cache;  // keyed by order
  auto& table = cache[order];
  int need = std::max(i, 1) + order + 2;
  if (static_cast<int>(table.size()) <= need) table = r_recursive_table(need, order);
  return table[static_cast<size_t>(i)];
}

Series two_point(int i, int order) {
  if (i < 1) throw std::invalid_argument("two_point: index must be >= 1");
  if (i == 1) return log_series(r_series(1, order));
  return log_series(r_series(i, order) / r_series(i - 1, order));
}

Series x_series(int s, int t, int order, XMethod method) {
  if (s < 0 || t < 0) throw std::invalid_argument("x_series: negative index");
  if (s > t) std::swap(s, t);  // symmetric
  static std::map<std::tuple<int, int, int, int>, Series> cache;
  auto key = std::make_tuple(s, t, order, static_cast<int>(method));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Series r(order);
  switch (method) {
    case XMethod::closed: r = x_closed(s, t, order); break;
    case XMethod::recursive: r = x_recursive(s, t, order); break;
    case XMethod::path_sum: r = x_path_sum(s, t, order); break;
  }
  cache.emplace(key, r);
  return r;
}

Series y_series(int s, int t, int u, int order, YMethod method) {
  if (s < 0 || t < 0 || u < 0) throw std::invalid_argument("y_series: negative index");
  int a[3] = {s, t, u};
  std::sort(a, a + 3);  // symmetric
  static std::map<std::tuple<int, int, int, int, int>, Series> cache;
  auto key = std::make_tuple(a[0], a[1], a[2], order, static_cast<int>(method));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Series r(order);
  switch (method) {
    case YMethod::closed: r = y_closed(a[0], a[1], a[2], order); break;
    case YMethod::recursive: r = y_recursive(a[0], a[1], a[2], order); break;
    case YMethod::sum_form: r = y_sum_form(a[0], a[1], a[2], order); break;
  }
  cache.emplace(key, r);
  return r;
}

Series f_three(int s, int t, int u, int order, FMethod method) {
  if (s < 0 || t < 0 || u < 0) {
    // extended-domain convention used by the finite differences: F vanishes
    // as soon as one range becomes empty
    if (s >= -1 && t >= -1 && u >= -1) return Series(order);
    throw std::invalid_argument("f_three: argument below -1");
  }
  if (method == FMethod::product)
    return x_series(s, t, order) * x_series(t, u, order) * x_series(u, s, order) *
           pow_series(y_series(s, t, u, order), 2);
  int a[3] = {s, t, u};
  std::sort(a, a + 3);
  static std::map<std::tuple<int, int, int, int>, Series> cache;
  auto key = std::make_tuple(a[0], a[1], a[2], order);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Series r = f_closed(a[0], a[1], a[2], order);
  cache.emplace(key, r);
  return r;
}

Series g_three(const DistanceTriple& d, int order) {
  if (!d.valid()) throw std::invalid_argument("g_three: invalid distance triple");
  int s, t, u;
  d.stu(s, t, u);
  Series acc(order);
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 1; ++c) {
        Series term = f_three(s - a, t - b, u - c, order);
        if ((a + b + c) % 2)
          acc -= term;
        else
          acc += term;
      }
  return acc;
}

bool f_inverse_sum_check(int s, int t, int u, int order) {
  Series acc(order);
  for (int a = 0; a <= s; ++a)
    for (int b = 0; b <= t; ++b)
      for (int c = 0; c <= u; ++c)
        acc += g_three(DistanceTriple{a + b, b + c, c + a}, order);
  return acc == f_three(s, t, u, order);
}

Series x_c(int s, int t, int c, int order) {
  if (c < 1) throw std::invalid_argument("x_c: c must be >= 1");
  Series X = x_series(s, t, order);
  Series z = (X - Rational(1)) / X;
  return pow_series(z, c) * Rational(1, c);
}

Series four_point_restricted(int s, int t, int u, int v, int order) {
  if (s < 0 || t < 0 || u < 0 || v < 0)
    throw std::invalid_argument("four_point_restricted: negative index");
  return x_series(s, t, order) * x_series(s, u, order) * x_series(s, v, order) *
         x_series(t, u, order) * x_series(t, v, order) * x_series(u, v, order) *
         y_series(s, t, u, order) * y_series(s, t, v, order) * y_series(s, u, v, order) *
         y_series(t, u, v, order);
}

std::vector<IdentityCheck> verify_identity_suite(int p_max, int order) {
  std::vector<IdentityCheck> out;
  auto record = [&out](const std::string& name, bool ok) { out.push_back({name, ok}); };

  {
    bool ok = true;
    for (int i = 1; i <= std::max(10, p_max); ++i)
      ok = ok && r_series(i, order, RMethod::closed) == r_series(i, order, RMethod::recursive);
    record("r_closed_vs_recursive", ok);
  }
  {
    bool ok_rec = true, ok_path = true;
    for (int s = 0; s <= p_max; ++s)
      for (int t = s; t <= p_max; ++t) {
        Series c = x_series(s, t, order, XMethod::closed);
        ok_rec = ok_rec && c == x_series(s, t, order, XMethod::recursive);
        ok_path = ok_path && c == x_series(s, t, order, XMethod::path_sum);
      }
    record("x_closed_vs_recursive", ok_rec);
    record("x_closed_vs_path_sum", ok_path);
  }
  {
    bool ok_rec = true, ok_sum = true;
    for (int s = 0; s <= p_max; ++s)
      for (int t = s; t <= p_max; ++t)
        for (int u = t; u <= p_max; ++u) {
          Series c = y_series(s, t, u, order, YMethod::closed);
          ok_rec = ok_rec && c == y_series(s, t, u, order, YMethod::recursive);
          ok_sum = ok_sum && c == y_series(s, t, u, order, YMethod::sum_form);
        }
    record("y_closed_vs_recursive", ok_rec);
    record("y_closed_vs_sum_form", ok_sum);
  }
  {
    bool ok = true;
    for (int s = 0; s <= p_max && ok; ++s)
      for (int t = s; t <= p_max && ok; ++t)
        for (int u = t; u <= p_max && ok; ++u)
          ok = f_three(s, t, u, order, FMethod::closed) ==
               f_three(s, t, u, order, FMethod::product);
    record("f_product_vs_closed", ok);
  }
  {
    // Delta_s Delta_t log X_{s,t} telescopes to the two-point function of
    // distance s+t
    bool ok = true;
    for (int s = 1; s <= p_max; ++s)
      for (int t = 1; t <= p_max; ++t) {
        Series lhs = log_series(x_series(s, t, order)) - log_series(x_series(s - 1, t, order)) -
                     log_series(x_series(s, t - 1, order)) +
                     log_series(x_series(s - 1, t - 1, order));
        ok = ok && lhs == two_point(s + t, order);
      }
    record("two_point_from_x", ok);
  }
  {
    // prod_{k=1}^{s+t} R_k written through X_{s,t}
    bool ok = true;
    Series R = solve_R(order);
    for (int s = 0; s <= p_max; ++s)
      for (int t = s; t <= p_max; ++t) {
        int i = s + t;
        Series prod(Rational(1), order);
        for (int k = 1; k <= i; ++k) prod = prod * r_series(k, order);
        Series direct = pow_series(R, i) * bracket(1, order) * bracket(i + 3, order) /
                        (bracket(3, order) * bracket(i + 1, order));
        Series split = pow_series(R, i) *
                       (bracket(1, order) * bracket(s + 3, order) /
                        (bracket(3, order) * bracket(s + 1, order))) *
                       (bracket(1, order) * bracket(t + 3, order) /
                        (bracket(3, order) * bracket(t + 1, order))) *
                       x_series(s, t, order);
        ok = ok && prod == direct && prod == split;
      }
    record("geodesic_chain_vs_x", ok);
  }
  {
    bool ok = true;
    for (int s = 0; s <= p_max; ++s)
      for (int t = s; t <= p_max; ++t)
        for (int u = t; u <= p_max; ++u) ok = ok && f_inverse_sum_check(s, t, u, order);
    record("f_inversion", ok);
  }
  {
    // sum_c c X^{(c)} = X - 1 (the constant accounts for the empty chain),
    // sum_c X^{(c)} = log X; both exact once c exceeds the truncation order
    bool ok_w = true, ok_l = true;
    for (int s = 1; s <= p_max; ++s)
      for (int t = s; t <= p_max; ++t) {
        Series X = x_series(s, t, order);
        Series wsum(order), lsum(order);
        for (int c = 1; c <= order; ++c) {
          Series xc = x_c(s, t, c, order);
          wsum += xc * Rational(c);
          lsum += xc;
        }
        ok_w = ok_w && wsum == X - Rational(1);
        ok_l = ok_l && lsum == log_series(X);
      }
    record("xc_weighted_sum", ok_w);
    record("xc_log_sum", ok_l);
  }
  {
    // large-separation limits: X -> 1 + x + x^2 and
    // F -> (1+x+x^2)/(1-x)^2 = (1 + (1-12g)^{-1/2}) / 2
    Series x = solve_x(order);
    Series lim_x = Series(Rational(1), order) + x + x * x;
    bool ok_x = x_series(order + 1, order + 2, order) == lim_x;
    Series one_minus_x = Series(Rational(1), order) - x;
    Series lim_f = lim_x / (one_minus_x * one_minus_x);
    Series u(Rational(1), order);
    if (order >= 1) u[1] = -12;
    Series alt = (Series(Rational(1), order) + inverse(sqrt_series(u))) * Rational(1, 2);
    bool ok_f = f_three(order + 1, order + 1, order + 1, order) == lim_f && lim_f == alt;
    record("x_limit", ok_x);
    record("f_limit", ok_f);
  }
  return out;
}

}  // namespace quadmaps
