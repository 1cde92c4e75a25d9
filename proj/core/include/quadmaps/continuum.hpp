#pragma once

#include <complex>
#include <functional>

#include "quadmaps/quadrature.hpp"

namespace quadmaps {

using Complex = std::complex<double>;

// Scaling limit of the distance laws. Grand-canonical quantities depend on a
// complex parameter alpha with Re(alpha) > 0; canonical (fixed-size)
// densities integrate them over alpha(xi) = sqrt(3|xi|/2) e^{-sign(xi) i pi/4}
// against xi exp(-xi^2). All sinh ratios are evaluated in log form so large
// |alpha| D never overflows.

Complex alpha_of_xi(double xi);

// two-point functions: F(D;alpha) and its D-derivative G
Complex scaling_two_F(double D, Complex alpha);
Complex scaling_two_G(double D, Complex alpha);

// three-point function of the tangent-circle radii S,T,U and its mixed
// derivative G = (1/2) d^3F/dS dT dU, taken at distances Dij = S+T, T+U, U+S
Complex scaling_three_F(double S, double T, double U, Complex alpha);
Complex scaling_three_G(double S, double T, double U, Complex alpha);

// permanent guards: centered finite differences of the analytic derivatives
Complex scaling_two_G_fd(double D, Complex alpha, double h);
Complex scaling_three_G_fd(double S, double T, double U, Complex alpha, double h);

// closed form of the marginal integral of G over the positions of the third
// point at fixed D12
Complex scaling_marginal_closed(double D12, Complex alpha);

// transverse profile at small D12, normalized on [-1,1]
double psi_transverse(double omega);
// longitudinal profile at large D12, normalized on [0,inf)
double phi_longitudinal(double nu);
// leading behavior of the integrated three-point law at small radii
double phi3_small(double S, double T, double U);
// tail of the three-point density at a large distance sum
double rho3_tail(double dsum);

class ScalingEval {
 public:
  explicit ScalingEval(double cutoff = 8.0, int nodes = 256);

  // (2 / i sqrt(pi)) int dxi xi e^{-xi^2} f(alpha(xi)) over the real line,
  // reduced by the symmetry f(conj a) = conj(f(a)) to twice the imaginary
  // part on xi > 0; the symmetry itself is asserted on sample nodes
  double xi_integral(const std::function<Complex(Complex)>& f) const;

  double rho2(double D) const;
  double phi2(double D) const;
  double rho3(double D12, double D23, double D31) const;
  double phi3(double S, double T, double U) const;
  double rho_cond(double D23, double D31, double D12) const;
  // the two-point density recovered through scaling_marginal_closed
  double rho2_from_marginal(double D12) const;

  const QuadratureRule& rule() const { return rule_; }

 private:
  QuadratureRule rule_;
};

}  // namespace quadmaps
