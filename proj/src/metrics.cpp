#include "toriq/metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace toriq {

namespace {

enum Index { R = 0, PSI = 1, TH1 = 2, PH1 = 3, TH2 = 4, PH2 = 5 };

// Adds c * w w^T for the fiber one-form w = dpsi + cos th1 dphi1 + cos th2 dphi2.
void add_fiber(Metric6& g, double c, double th1, double th2) {
  double w[6] = {0.0, 1.0, 0.0, std::cos(th1), 0.0, std::cos(th2)};
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b) {
      g(a, b) += c * (w[a] * w[b]);
      g(b, a) = g(a, b);
    }
}

void add_sphere(Metric6& g, double c, int theta, int phi, double th) {
  g(theta, theta) += c;
  const double s = std::sin(th);
  g(phi, phi) += c * s * s;
}

}  // namespace

void validate(const ConePoint& p) {
  constexpr double pi = std::numbers::pi;
  if (!(p.r > 0.0)) throw std::domain_error("r must be positive");
  if (!(p.psi >= 0.0 && p.psi < 4.0 * pi)) throw std::domain_error("psi must lie in [0, 4pi)");
  if (!(p.theta1 > 0.0 && p.theta1 < pi)) throw std::domain_error("theta1 must lie in (0, pi)");
  if (!(p.theta2 > 0.0 && p.theta2 < pi)) throw std::domain_error("theta2 must lie in (0, pi)");
  if (!(p.phi1 >= 0.0 && p.phi1 < 2.0 * pi)) throw std::domain_error("phi1 must lie in [0, 2pi)");
  if (!(p.phi2 >= 0.0 && p.phi2 < 2.0 * pi)) throw std::domain_error("phi2 must lie in [0, 2pi)");
}

void validate(const ResolvedParams& q) {
  if (!(q.a >= 0.0)) throw std::domain_error("a must be nonnegative");
  if (!(q.rho > 0.0)) throw std::domain_error("rho must be positive");
  if (!(q.rho_prime > 0.0)) throw std::domain_error("rho_prime must be positive");
}

Metric6 t11_metric(const ConePoint& p) {
  validate(p);
  Metric6 g = Metric6::Zero();
  add_fiber(g, 1.0 / 9.0, p.theta1, p.theta2);
  add_sphere(g, 1.0 / 6.0, TH1, PH1, p.theta1);
  add_sphere(g, 1.0 / 6.0, TH2, PH2, p.theta2);
  g *= p.r * p.r;
  g(R, R) = 1.0;
  return g;
}

Metric6 resolved_metric(const ConePoint& p, const ResolvedParams& q) {
  validate(p);
  validate(q);
  Metric6 g = Metric6::Zero();
  g(R, R) = q.rho_prime;
  add_fiber(g, q.rho_prime * p.r * p.r / 4.0, p.theta1, p.theta2);
  add_sphere(g, q.rho / 4.0, TH1, PH1, p.theta1);
  add_sphere(g, (q.rho + 4.0 * q.a * q.a) / 4.0, TH2, PH2, p.theta2);
  return g;
}

}  // namespace toriq
