#ifndef CARENGEL_LIE_SPHERE_HPP
#define CARENGEL_LIE_SPHERE_HPP

#include <array>

#include "carengel/errors.hpp"

namespace carengel {

// Homogeneous coordinates (xi, eta, zeta, mu, nu) on the projective
// quadric Q = xi^2 + eta^2 - zeta^2 - mu nu = 0, up to nonzero scale.
struct QuadricPoint {
  double xi = 0.0, eta = 0.0, zeta = 0.0, mu = 0.0, nu = 0.0;

  std::array<double, 5> tuple() const { return {xi, eta, zeta, mu, nu}; }
  // Divides by the max-abs component (the canonical projective
  // representative used before thresholding).
  QuadricPoint normalized() const;
  double quadric_value() const;  // Q on this representative
};

inline constexpr double kQuadricTol = 1e-10;

// Center (a, b) and signed radius R; R > 0 counterclockwise, R < 0
// clockwise, R = 0 encodes the point (a, b).
struct OrientedCircle {
  double a = 0.0, b = 0.0, R = 0.0;
};

// (a, b, R, a^2 + b^2 - R^2, 1); lands exactly on the quadric.
QuadricPoint circle_to_quadric(const OrientedCircle& c);

enum class CycleKind { kCircle, kLine, kPoint };

// line iff nu = 0, point iff zeta = 0, else circle (relative threshold
// 1e-10 after max-abs normalization). Throws if Q != 0.
CycleKind classify(const QuadricPoint& qp);

// B(q1, q2) = xi1 xi2 + eta1 eta2 - zeta1 zeta2 - (mu1 nu2 + mu2 nu1)/2;
// B(q, q) = Q(q). Oriented tangency is B = 0.
double polar_form(const QuadricPoint& q1, const QuadricPoint& q2);

bool incident(const QuadricPoint& q1, const QuadricPoint& q2, double tol);

// (da)^2 + (db)^2 - (dR)^2; circles are incident iff null separated.
double minkowski_interval(const OrientedCircle& c1, const OrientedCircle& c2);

// Completes zeta from Q = 0 for a solution cycle nu (x^2+y^2) - 2 xi x
// - 2 eta y + mu = 0; throws if xi^2 + eta^2 - mu nu < 0 or all inputs
// are zero. `positive` picks the orientation sign of zeta.
QuadricPoint solution_to_cycle(double xi, double eta, double mu, double nu,
                               bool positive = true);

}  // namespace carengel

#endif
