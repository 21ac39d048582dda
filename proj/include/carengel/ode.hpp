#ifndef CARENGEL_ODE_HPP
#define CARENGEL_ODE_HPP

#include <utility>
#include <vector>

#include "carengel/car.hpp"

namespace carengel {

// Chart of second-jet coordinates: {"x","y","p","q"} with p = y', q = y''.
const Chart& jet_chart();

struct JetPoint {
  double x = 0.0, y = 0.0, p = 0.0, q = 0.0;
  Point4 point() const { return {x, y, p, q}; }
  static JetPoint from_point(const Point4& pt) {
    return {pt[0], pt[1], pt[2], pt[3]};
  }
};

// y''' = F(x, y, y', y'').
struct ThirdOrderODE {
  ScalarFieldExpr F;
  static ThirdOrderODE parse(const std::string& text);
};

// F = 3pq^2/(1+p^2): the ODE whose solution graphs are the circles and
// lines of the plane.
const ThirdOrderODE& car_ode();

// X3 = d_q, X4 = d_x + p d_y + q d_p + F d_q on the jet chart.
std::pair<VectorField, VectorField> ode_fields(const ThirdOrderODE& ode);

// W = 9 X4(X4(X3F)) - 27 X4(F_p) - 18 X3F X4(X3F) + 18 X3F F_p
//     + 4 (X3F)^3 + 54 F_y, evaluated by pushing jets through X4.
double wunschmann(const ThirdOrderODE& ode, const JetPoint& pt);

// C = d^4 F / dq^4.
double chern_invariant(const ThirdOrderODE& ode, const JetPoint& pt);

// p = tan(alpha), q = -tan(beta) sec^3(alpha) / ell; principal branch
// |alpha|, |beta| < pi/2 (throws outside it).
JetPoint chart_car_to_jet(const CarConfig& config, const CarParams& params);
CarConfig chart_jet_to_car(const JetPoint& pt, const CarParams& params);

// A4 A3 A2 A1 applied to the car coframe, then pushed to the jet
// cobasis: row i holds omega^i over (dx, dy, dp, dq). Equals
// contact_coframe of the car ODE at the mapped point.
Eigen::Matrix4d normalize_car_coframe(const CarConfig& config,
                                      const CarParams& params);

// The contact coframe (dy - p dx, dp - q dx, dq - F dx, dx), rows over
// (dx, dy, dp, dq).
Eigen::Matrix4d contact_coframe(const ThirdOrderODE& ode, const JetPoint& pt);

// Fixed-step RK4 of (x', y', p', q') = (1, p, q, F) over x_span.
std::vector<Point4> solve_ode(const ThirdOrderODE& ode,
                              const JetPoint& initial, double x_span,
                              int steps);

// Total-least-squares fit of nu (x^2+y^2) - 2 xi x - 2 eta y + mu = 0 to
// the (x, y) projection of a curve; residual is the RMS row misfit of
// the unit-norm singular vector.
struct CycleFit {
  double nu = 0.0, xi = 0.0, eta = 0.0, mu = 0.0;
  double residual = 0.0;
};
CycleFit fit_cycle(const std::vector<Point4>& curve);

// Coefficients of F = A3 q^3 + A2 q^2 + A1 q + A0 at a first-jet base
// point; throws if F is not polynomial of degree <= 3 in q (Chern
// invariant sampled over q, tolerance 1e-9).
struct QPolynomial {
  double A0 = 0.0, A1 = 0.0, A2 = 0.0, A3 = 0.0;
  double eval(double q) const { return ((A3 * q + A2) * q + A1) * q + A0; }
};
QPolynomial extract_q_polynomial(const ThirdOrderODE& ode, double x, double y,
                                 double p);

// Gauge-fixed torsion-free connection whose contact geodesics project
// the ODE solutions: G233 = A3, G223 = A2/2, G222 = A1, G322 = -A0,
// G333 = G323 = 0 (one representative of the underdetermined family).
struct ConnectionCoeffs {
  double g222 = 0.0, g223 = 0.0, g233 = 0.0;
  double g322 = 0.0, g323 = 0.0, g333 = 0.0;
};

class ContactProjectiveConnection {
 public:
  explicit ContactProjectiveConnection(ThirdOrderODE ode);

  ConnectionCoeffs coeffs(double x, double y, double p) const;

  // F rebuilt from the gauge: G233 q^3 + (2 G223 - G333) q^2
  // + (G222 - 2 G323) q - G322.
  double reconstruct_F(const JetPoint& pt) const;

  // Geodesic x'' + G222 x'^2 + 2 G223 x' p' + G233 p'^2 = 0 (same for
  // p'' with G3..), y' = p x' enforced; state (x, y, p, x', p'), RK4.
  // Returns (x, y, p) samples.
  std::vector<std::array<double, 3>> geodesic(double x0, double y0, double p0,
                                              double q0, double t_span,
                                              int steps) const;

 private:
  ThirdOrderODE ode_;
};

}  // namespace carengel

#endif
