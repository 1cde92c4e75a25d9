#include "quadmaps/continuum.hpp"

#include <cmath>
#include <stdexcept>

namespace quadmaps {

namespace {

// All arguments z = alpha * (distance) have Re z >= 0; for |z| beyond 1/2 the
// exp(-2z) forms below stay accurate where sinh itself would overflow.

Complex log_sinh(Complex z) {
  if (std::abs(z) < 0.5) return std::log(std::sinh(z));
  return z - M_LN2 + std::log(1.0 - std::exp(-2.0 * z));
}

Complex coth(Complex z) {
  if (std::abs(z) < 0.5) return 1.0 / std::tanh(z);
  const Complex w = std::exp(-2.0 * z);
  return 1.0 + 2.0 * w / (1.0 - w);
}

Complex csch2(Complex z) {
  if (std::abs(z) < 0.5) {
    const Complex s = std::sinh(z);
    return 1.0 / (s * s);
  }
  const Complex w = std::exp(-2.0 * z);
  const Complex d = 1.0 - w;
  return 4.0 * w / (d * d);
}

}  // namespace

Complex alpha_of_xi(double xi) {
  const double r = std::sqrt(3.0 * std::abs(xi) / 2.0);
  const double c = r * M_SQRT1_2;
  return xi >= 0 ? Complex(c, -c) : Complex(c, c);
}

Complex scaling_two_F(double D, Complex alpha) {
  return -(2.0 / 3.0) * alpha * alpha * (1.0 + 3.0 * csch2(alpha * D));
}

Complex scaling_two_G(double D, Complex alpha) {
  const Complex z = alpha * D;
  return 4.0 * alpha * alpha * alpha * coth(z) * csch2(z);
}

Complex scaling_three_F(double S, double T, double U, Complex alpha) {
  if (S <= 0 || T <= 0 || U <= 0) return 0.0;
  const Complex l = log_sinh(alpha * (S + T + U)) + log_sinh(alpha * S) +
                    log_sinh(alpha * T) + log_sinh(alpha * U) -
                    log_sinh(alpha * (S + T)) - log_sinh(alpha * (T + U)) -
                    log_sinh(alpha * (U + S));
  return 3.0 / (alpha * alpha) * std::exp(2.0 * l);
}

Complex scaling_three_G(double S, double T, double U, Complex alpha) {
  if (S <= 0 || T <= 0 || U <= 0) return 0.0;
  const double sum = S + T + U;
  const Complex F = scaling_three_F(S, T, U, alpha);
  // log-derivatives of F^{1/2}: d(log sinh) are coth, second derivatives
  // csch^2; the mixed third derivative of F collapses onto these
  const Complex cS = coth(alpha * S), cT = coth(alpha * T), cU = coth(alpha * U);
  const Complex csum = coth(alpha * sum);
  const Complex cST = coth(alpha * (S + T)), cTU = coth(alpha * (T + U)),
                cUS = coth(alpha * (U + S));
  const Complex Ls = alpha * (csum + cS - cST - cUS);
  const Complex Lt = alpha * (csum + cT - cST - cTU);
  const Complex Lu = alpha * (csum + cU - cTU - cUS);
  const Complex a2 = alpha * alpha;
  const Complex hsum = csch2(alpha * sum);
  const Complex Lst = a2 * (csch2(alpha * (S + T)) - hsum);
  const Complex Ltu = a2 * (csch2(alpha * (T + U)) - hsum);
  const Complex Lus = a2 * (csch2(alpha * (U + S)) - hsum);
  const Complex Lstu = 2.0 * a2 * alpha * hsum * csum;
  return F * (4.0 * Ls * Lt * Lu + 2.0 * (Lst * Lu + Lus * Lt + Ltu * Ls) + Lstu);
}

Complex scaling_two_G_fd(double D, Complex alpha, double h) {
  return (scaling_two_F(D + h, alpha) - scaling_two_F(D - h, alpha)) / (2.0 * h);
}

Complex scaling_three_G_fd(double S, double T, double U, Complex alpha, double h) {
  Complex acc = 0.0;
  for (int a = -1; a <= 1; a += 2)
    for (int b = -1; b <= 1; b += 2)
      for (int c = -1; c <= 1; c += 2)
        acc += static_cast<double>(a * b * c) *
               scaling_three_F(S + a * h, T + b * h, U + c * h, alpha);
  return acc / (2.0 * 8.0 * h * h * h);
}

Complex scaling_marginal_closed(double D12, Complex alpha) {
  const Complex z = alpha * D12;
  if (std::abs(z) < 0.15) {
    // the closed form cancels to order z^4 at small z; use its expansion
    const Complex z2 = z * z;
    return 0.6 * D12 *
           (1.0 + z2 * (-10.0 / 21.0 + z2 * (2.0 / 15.0 - 0.0288600 * z2)));
  }
  const Complex E = std::exp(-2.0 * z);
  const Complex d = 1.0 - E;
  const Complex num = 4.0 * D12 * E * E + D12 * (E + E * E * E) -
                      1.5 / alpha * (E - E * E * E);
  return 18.0 * num / (d * d * d * d);
}

double psi_transverse(double omega) {
  if (omega < -1 || omega > 1) return 0.0;
  const double w2 = omega * omega;
  return 21.0 / 64.0 * (1 - w2) * (1 - w2) * (3 - w2);
}

double phi_longitudinal(double nu) {
  if (nu < 0) return 0.0;
  const double s = std::sinh(nu / 2);
  return 4.0 / 3.0 * s * s * (11.0 * std::exp(-2 * nu) - 8.0 * std::exp(-3 * nu));
}

double phi3_small(double S, double T, double U) {
  const double sum = S + T + U;
  const double p = S * T * U * sum;
  const double q = S * S + T * T + U * U + S * T + T * U + U * S;
  const double d = (S + T) * (T + U) * (U + S);
  return 9.0 / 28.0 * p * p * p * q / (d * d);
}

double rho3_tail(double dsum) {
  return 99.0 / std::sqrt(6.0) * dsum *
         std::exp(-std::pow(0.75, 5.0 / 3.0) * std::pow(dsum, 4.0 / 3.0));
}

ScalingEval::ScalingEval(double cutoff, int nodes) : rule_(gauss_legendre(nodes, 0.0, cutoff)) {
  if (nodes < 8) throw std::invalid_argument("ScalingEval: too few nodes");
}

double ScalingEval::xi_integral(const std::function<Complex(Complex)>& f) const {
  const size_t n = rule_.nodes.size();
  for (size_t i : {n / 7, n / 2, n - 1 - n / 7}) {
    const double xi = rule_.nodes[i];
    const Complex a = f(alpha_of_xi(xi)), b = f(alpha_of_xi(-xi));
    if (std::abs(b - std::conj(a)) > 1e-10 * (1.0 + std::abs(a)))
      throw std::logic_error("xi_integral: integrand breaks the conjugation symmetry");
  }
  // the symmetry folds the real-line integral onto xi > 0
  double sum = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double xi = rule_.nodes[i];
    sum += rule_.weights[i] * xi * std::exp(-xi * xi) * std::imag(f(alpha_of_xi(xi)));
  }
  return 4.0 / std::sqrt(M_PI) * sum;
}

double ScalingEval::rho2(double D) const {
  if (D <= 0) return 0.0;
  return xi_integral([D](Complex a) { return scaling_two_G(D, a); });
}

double ScalingEval::phi2(double D) const {
  if (D <= 0) return 0.0;
  return xi_integral([D](Complex a) { return scaling_two_F(D, a); });
}

double ScalingEval::rho3(double D12, double D23, double D31) const {
  const double S = (D12 - D23 + D31) / 2;
  const double T = (D12 + D23 - D31) / 2;
  const double U = (-D12 + D23 + D31) / 2;
  if (S <= 0 || T <= 0 || U <= 0) return 0.0;
  return xi_integral([=](Complex a) { return scaling_three_G(S, T, U, a); });
}

double ScalingEval::phi3(double S, double T, double U) const {
  if (S <= 0 || T <= 0 || U <= 0) return 0.0;
  return xi_integral([=](Complex a) { return scaling_three_F(S, T, U, a); });
}

double ScalingEval::rho_cond(double D23, double D31, double D12) const {
  return rho3(D12, D23, D31) / rho2(D12);
}

double ScalingEval::rho2_from_marginal(double D12) const {
  return xi_integral([D12](Complex a) { return scaling_marginal_closed(D12, a); });
}

}  // namespace quadmaps
