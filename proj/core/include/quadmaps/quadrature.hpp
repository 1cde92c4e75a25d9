#pragma once

#include <functional>
#include <vector>

namespace quadmaps {

// Gauss-Legendre rule on [a, b]
struct QuadratureRule {
  std::vector<double> nodes, weights;

  double integrate(const std::function<double(double)>& f) const;
};

QuadratureRule gauss_legendre(int points, double a, double b);

}  // namespace quadmaps
