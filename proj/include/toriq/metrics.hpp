#pragma once

// Metric components on the conifold. Coordinate order is
// (r, psi, theta1, phi1, theta2, phi2).

#include <Eigen/Core>

namespace toriq {

using Metric6 = Eigen::Matrix<double, 6, 6>;

/// r > 0, psi in [0, 4 pi), theta_i in (0, pi), phi_i in [0, 2 pi).
struct ConePoint {
  double r = 1.0;
  double psi = 0.0;
  double theta1 = 0.0;
  double phi1 = 0.0;
  double theta2 = 0.0;
  double phi2 = 0.0;
};

/// Resolution parameter a >= 0 and the radial profile rho, rho' > 0 at the
/// point. The profile is supplied by the caller.
struct ResolvedParams {
  double a = 0.0;
  double rho = 1.0;
  double rho_prime = 1.0;
};

/// Throws std::domain_error for coordinates outside the chart.
void validate(const ConePoint& p);
void validate(const ResolvedParams& q);

/// Cone metric dr^2 + r^2 ds^2(T^{1,1}) with
///   ds^2(T^{1,1}) = 1/9 (dpsi + sum cos theta_i dphi_i)^2
///                 + 1/6 sum (dtheta_i^2 + sin^2 theta_i dphi_i^2).
Metric6 t11_metric(const ConePoint& p);

/// Resolved conifold:
///   rho' dr^2 + rho'/4 r^2 (dpsi + sum cos theta_i dphi_i)^2
///   + rho/4 (dtheta_1^2 + sin^2 theta_1 dphi_1^2)
///   + (rho + 4 a^2)/4 (dtheta_2^2 + sin^2 theta_2 dphi_2^2).
Metric6 resolved_metric(const ConePoint& p, const ResolvedParams& q);

}  // namespace toriq
