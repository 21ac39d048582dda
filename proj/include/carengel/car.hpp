#ifndef CARENGEL_CAR_HPP
#define CARENGEL_CAR_HPP

#include <iosfwd>
#include <vector>

#include "carengel/distribution.hpp"

namespace carengel {

// Configuration (x, y, alpha, beta): rear-wheel position, chassis
// heading, front-wheel angle relative to the chassis.
struct CarConfig {
  double x = 0.0;
  double y = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  Point4 point() const { return {x, y, alpha, beta}; }
  static CarConfig from_point(const Point4& p) {
    return {p[0], p[1], p[2], p[3]};
  }
};

struct CarParams {
  double ell = 1.0;  // distance between rear and front wheels, > 0
};

// Chart used by every car-side field: {"x","y","alpha","beta"}.
const Chart& car_chart();

struct CarFrame {
  VectorField X1, X2, X3, X4;
};

// The car frame: X3 = d_beta (steering wheel), X4 = -sin(beta) d_alpha
// + ell cos(beta)(cos(alpha) d_x + sin(alpha) d_y) (gas), X2 = [X3,X4],
// X1 = [X4,X2], all in closed form.
CarFrame car_fields(const CarParams& params);

SplitDistribution car_split(const CarParams& params);

// Coframe dual to the car frame at `config`: row i holds omega^i in the
// coordinate cobasis (dx, dy, dalpha, dbeta).
Eigen::Matrix4d car_coframe(const CarConfig& config, const CarParams& params);

// Closed-form integral curve of X4 through q0 (unit gas control), with
// the branch cut beta0 = 0 taken within 1e-12.
CarConfig integral_curve_X4(const CarConfig& q0, double t,
                            const CarParams& params);

// Center and signed radius R = ell cot(beta0) of the planar circle traced
// by the rear wheels; requires sin(beta0) != 0.
struct HelixAxis {
  double cx = 0.0;
  double cy = 0.0;
  double radius = 0.0;
};
HelixAxis helix_axis_and_radius(const CarConfig& q0, const CarParams& params);

// One unit-control segment of a maneuver: flow of X3 (steer) or X4 (gas)
// for a signed duration.
struct Segment {
  enum class Field { kSteer, kGas };
  Field field = Field::kGas;
  double duration = 0.0;
};

using Maneuver = std::vector<Segment>;

struct ParkingPlan {
  Maneuver maneuver;
  CarConfig predicted_endpoint;
  double longitudinal_drift = 0.0;  // along the initial heading
  double arc_sweep = 0.0;           // phi of each of the two arcs
};

// Parallel parking by a symmetric pair of backward arcs: steer to
// +/-beta0, reverse through arc sweep phi, steer to the opposite lock,
// reverse through phi again, steer back to zero. The lateral offset `s`
// is perpendicular to the initial heading (positive s moves the car to
// its right, i.e. to smaller y when alpha = 0); phi = acos(1 - |s|/(2R))
// with R = ell cot(beta0). The longitudinal drift -2R sin(phi) is
// reported; if `compensate_drift` a final straight segment cancels it.
// An `advance` adds a plain straight segment (s may then be 0).
ParkingPlan plan_parallel_park(const CarConfig& q_init, double s,
                               const CarParams& params, double beta0,
                               double advance = 0.0,
                               bool compensate_drift = false);

struct TrajectorySample {
  double t = 0.0;
  CarConfig q;
  int segment = 0;  // maneuver segment this sample belongs to
};

// Concatenated RK4 flows of the maneuver segments (unit controls).
std::vector<TrajectorySample> execute_maneuver(const CarConfig& q0,
                                               const Maneuver& maneuver,
                                               const CarParams& params,
                                               int steps_per_segment);

// Residuals of the two no-skid constraints on finite-difference
// velocities along a trajectory; returns the max over interior samples.
double max_constraint_residual(const std::vector<TrajectorySample>& traj,
                               const CarParams& params);

// CSV with header t,x,y,alpha,beta at 17 significant digits.
void write_trajectory_csv(std::ostream& os,
                          const std::vector<TrajectorySample>& traj);

}  // namespace carengel

#endif
