#include "quadmaps/geodesic.hpp"

#include <functional>
#include <stdexcept>

namespace quadmaps {

namespace {

// mpq_class(n, d) does not reduce; make fractions canonical on construction
Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational rpow(const Rational& base, long e) {
  Rational out = 1, b = base;
  for (; e > 0; e >>= 1) {
    if (e & 1) out *= b;
    b *= b;
  }
  return out;
}

Rational delta_st(const std::function<Rational(long, long)>& f, long s, long t) {
  return f(s, t) - f(s - 1, t) - f(s, t - 1) + f(s - 1, t - 1);
}

}  // namespace

Rational f_local(long s, long t, long u) {
  if (s < 0 || t < 0 || u < 0) throw std::invalid_argument("f_local: negative argument");
  const Rational num = Rational((1 + s) * (1 + t)) * Rational((1 + u) * (3 + s + t + u));
  const Rational den = Rational((1 + s + t) * (3 + s + t)) *
                       Rational((1 + t + u) * (3 + t + u)) *
                       Rational((1 + u + s) * (3 + u + s));
  const Rational quad = 29 + 20 * (s + t + u) + 5 * (s * s + t * t + u * u + s * t + t * u + u * s);
  const Rational cubic =
      Rational(s * t + t * u + u * s + s * t * u) * Rational(4 + s + t + u) - s * t * u;
  return Rational(9, 140) * num * num / den * quad * cubic;
}

Rational f_local_uzero(long s, long t) {
  if (s < 0 || t < 0) throw std::invalid_argument("f_local_uzero: negative argument");
  return Rational(9, 140) * Rational((1 + s) * (1 + t)) * Rational(3 + s + t) /
         (Rational((3 + s) * (3 + t)) * Rational(1 + s + t)) * Rational(s * t) *
         Rational(29 + 20 * (s + t) + 5 * (s * s + t * t + s * t)) * Rational(4 + s + t);
}

Rational n_vertices_at(long d) {
  if (d < 1) throw std::invalid_argument("n_vertices_at: d must be positive");
  return Rational(3, 35) * Rational(d + 1) * Rational(5 * d * d + 10 * d + 2);
}

Rational couples_avg(const DistanceTriple& d) {
  if (!d.valid()) throw std::invalid_argument("couples_avg: invalid distance triple");
  int s = 0, t = 0, u = 0;
  d.stu(s, t, u);
  Rational out = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const Rational term = f_local(s - a, t - b, u - c);
        out += ((a + b + c) % 2 == 0) ? term : -term;
      }
  return out;
}

Rational geodesic_profile(long s, long d) {
  if (s < 1 || s > d - 1) throw std::invalid_argument("geodesic_profile: need 1 <= s <= d-1");
  return delta_st([](long a, long b) { return f_local_uzero(a, b); }, s, d - s) /
         n_vertices_at(d);
}

Rational avg_geodesic_inf(long s) {
  if (s < 1) throw std::invalid_argument("avg_geodesic_inf: s must be positive");
  return Rational(3 * s) * Rational(5 + s) / (Rational(3 + s) * Rational(2 + s));
}

Rational chain_weight(long s, long t) {
  if (s < 0 || t < 0) throw std::invalid_argument("chain_weight: negative argument");
  return Rational(3) * Rational((s + 1) * (t + 1)) * Rational(s + t + 3) /
         (Rational((s + 3) * (t + 3)) * Rational(s + t + 1));
}

Rational p_geodesic(long c, long s, long t) {
  if (c < 1 || s < 1 || t < 1) throw std::invalid_argument("p_geodesic: arguments must be >= 1");
  auto term = [c](long a, long b) -> Rational {
    const Rational A = chain_weight(a, b);
    return f_local_uzero(a, b) / (A * A) * rpow((A - 1) / A, c - 1);
  };
  return delta_st(term, s, t) / n_vertices_at(s + t);
}

Rational p_geodesic_sum(long s, long t) {
  // sum over c of ((A-1)/A)^{c-1} is A, leaving Delta Delta of f/A
  auto term = [](long a, long b) -> Rational { return f_local_uzero(a, b) / chain_weight(a, b); };
  return delta_st(term, s, t) / n_vertices_at(s + t);
}

Rational p_geodesic_mean(long s, long t) {
  // sum of c q^{c-1} is A^2, cancelling the 1/A^2
  return delta_st([](long a, long b) { return f_local_uzero(a, b); }, s, t) /
         n_vertices_at(s + t);
}

Rational p_inf(long c, long s) {
  if (c < 1 || s < 1) throw std::invalid_argument("p_inf: arguments must be >= 1");
  return frac(s + 3, 2) * rpow(frac(2 * s, 3 * (s + 1)), c) -
         frac(s + 2, 2) * rpow(frac(2 * (s - 1), 3 * s), c);
}

Rational p_inf_mean(long s) {
  if (s < 1) throw std::invalid_argument("p_inf_mean: s must be >= 1");
  // sum of c q^c = q/(1-q)^2 for each geometric piece
  auto gm = [](const Rational& q) -> Rational { return q / ((1 - q) * (1 - q)); };
  return frac(s + 3, 2) * gm(frac(2 * s, 3 * (s + 1))) -
         frac(s + 2, 2) * gm(frac(2 * (s - 1), 3 * s));
}

Rational p_inf_far(long c) {
  if (c < 1) throw std::invalid_argument("p_inf_far: c must be >= 1");
  return rpow(Rational(2, 3), c) / 2;
}

Rational p_finite_n(int c, int s, int t, int n) {
  if (c < 1 || s < 1 || t < 1 || n < 1) throw std::invalid_argument("p_finite_n: bad arguments");
  const Rational denom = two_point(s + t, n)[n];
  if (denom == 0) throw std::domain_error("p_finite_n: distance unreachable at this size");
  Rational num = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      if (s - a == 0 || t - b == 0) continue;  // empty chain, no label-0 vertex
      const Rational term = x_c(s - a, t - b, c, n)[n];
      num += ((a + b) % 2 == 0) ? term : -term;
    }
  return num / denom;
}

}  // namespace quadmaps
