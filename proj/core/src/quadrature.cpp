#include "quadmaps/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace quadmaps {

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  double sum = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
  return sum;
}

QuadratureRule gauss_legendre(int points, double a, double b) {
  if (points < 1) throw std::invalid_argument("gauss_legendre: need at least one point");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<size_t>(points));
  rule.weights.resize(static_cast<size_t>(points));
  const double mid = (a + b) / 2, half = (b - a) / 2;
  // roots of P_n by Newton from the Chebyshev-like initial guess; symmetry
  // gives the other half for free
  for (int i = 0; i < (points + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (points + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= points; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = points * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<size_t>(i)] = mid - half * x;
    rule.weights[static_cast<size_t>(i)] = half * w;
    rule.nodes[static_cast<size_t>(points - 1 - i)] = mid + half * x;
    rule.weights[static_cast<size_t>(points - 1 - i)] = half * w;
  }
  return rule;
}

}  // namespace quadmaps
