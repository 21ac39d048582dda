#include "carengel/lie_sphere.hpp"

#include <algorithm>
#include <cmath>

namespace carengel {
namespace {

double max_abs(const QuadricPoint& q) {
  return std::max({std::abs(q.xi), std::abs(q.eta), std::abs(q.zeta),
                   std::abs(q.mu), std::abs(q.nu)});
}

}  // namespace

QuadricPoint QuadricPoint::normalized() const {
  double m = max_abs(*this);
  if (m == 0.0) throw DomainError("zero tuple is not a projective point");
  return {xi / m, eta / m, zeta / m, mu / m, nu / m};
}

double QuadricPoint::quadric_value() const {
  return xi * xi + eta * eta - zeta * zeta - mu * nu;
}

QuadricPoint circle_to_quadric(const OrientedCircle& c) {
  return {c.a, c.b, c.R, c.a * c.a + c.b * c.b - c.R * c.R, 1.0};
}

CycleKind classify(const QuadricPoint& qp) {
  QuadricPoint n = qp.normalized();
  if (std::abs(n.quadric_value()) > kQuadricTol)
    throw DomainError("tuple is not on the quadric");
  if (std::abs(n.nu) <= kQuadricTol) return CycleKind::kLine;
  if (std::abs(n.zeta) <= kQuadricTol) return CycleKind::kPoint;
  return CycleKind::kCircle;
}

double polar_form(const QuadricPoint& q1, const QuadricPoint& q2) {
  return q1.xi * q2.xi + q1.eta * q2.eta - q1.zeta * q2.zeta -
         0.5 * (q1.mu * q2.nu + q2.mu * q1.nu);
}

bool incident(const QuadricPoint& q1, const QuadricPoint& q2, double tol) {
  return std::abs(polar_form(q1.normalized(), q2.normalized())) <= tol;
}

double minkowski_interval(const OrientedCircle& c1, const OrientedCircle& c2) {
  double da = c1.a - c2.a, db = c1.b - c2.b, dr = c1.R - c2.R;
  return da * da + db * db - dr * dr;
}

QuadricPoint solution_to_cycle(double xi, double eta, double mu, double nu,
                               bool positive) {
  double z2 = xi * xi + eta * eta - mu * nu;
  if (z2 < 0.0)
    throw DomainError("no real cycle: xi^2 + eta^2 - mu nu < 0");
  double zeta = std::sqrt(z2);
  QuadricPoint out = {xi, eta, positive ? zeta : -zeta, mu, nu};
  if (max_abs(out) == 0.0)
    throw DomainError("zero tuple is not a projective point");
  return out;
}

}  // namespace carengel
