#include "carengel/car.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace carengel {
namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "(%.17g)", v);
  return buf;
}

constexpr double kBetaZeroTol = 1e-12;

}  // namespace

const Chart& car_chart() {
  static const Chart chart = {"x", "y", "alpha", "beta"};
  return chart;
}

CarFrame car_fields(const CarParams& params) {
  if (!(params.ell > 0.0)) throw DomainError("car length must be positive");
  const std::string L = num(params.ell);
  const Chart& ch = car_chart();
  VectorField X3 = VectorField::parse(ch, {"0", "0", "0", "1"});
  VectorField X4 = VectorField::parse(
      ch, {L + "*cos(beta)*cos(alpha)", L + "*cos(beta)*sin(alpha)",
           "-sin(beta)", "0"});
  // X2 = [X3,X4], X1 = [X4,X2], closed forms.
  VectorField X2 = VectorField::parse(
      ch, {"-" + L + "*sin(beta)*cos(alpha)", "-" + L + "*sin(beta)*sin(alpha)",
           "-cos(beta)", "0"});
  VectorField X1 =
      VectorField::parse(ch, {"-" + L + "*sin(alpha)", L + "*cos(alpha)", "0", "0"});
  return {X1, X2, X3, X4};
}

SplitDistribution car_split(const CarParams& params) {
  CarFrame f = car_fields(params);
  return {f.X3, f.X4};
}

Eigen::Matrix4d car_coframe(const CarConfig& c, const CarParams& params) {
  double ca = std::cos(c.alpha), sa = std::sin(c.alpha);
  double cb = std::cos(c.beta), sb = std::sin(c.beta);
  double il = 1.0 / params.ell;
  Eigen::Matrix4d w;
  w.row(0) << -il * sa, il * ca, 0, 0;
  w.row(1) << -il * sb * ca, -il * sb * sa, -cb, 0;
  w.row(2) << 0, 0, 0, 1;
  w.row(3) << il * cb * ca, il * cb * sa, -sb, 0;
  return w;
}

CarConfig integral_curve_X4(const CarConfig& q0, double t,
                            const CarParams& params) {
  double sb = std::sin(q0.beta), cb = std::cos(q0.beta);
  double ell = params.ell;
  if (std::abs(sb) < kBetaZeroTol) {
    // straight line; beta = 0 gives the forward case.
    return {q0.x + t * ell * cb * std::cos(q0.alpha),
            q0.y + t * ell * cb * std::sin(q0.alpha), q0.alpha, q0.beta};
  }
  double cot = cb / sb;
  double half = 0.5 * t * sb;
  return {2.0 * ell * cot * std::cos(q0.alpha - half) * std::sin(half) + q0.x,
          2.0 * ell * cot * std::sin(q0.alpha - half) * std::sin(half) + q0.y,
          q0.alpha - t * sb, q0.beta};
}

HelixAxis helix_axis_and_radius(const CarConfig& q0, const CarParams& params) {
  double sb = std::sin(q0.beta);
  if (std::abs(sb) < kBetaZeroTol)
    throw DomainError("straight-line trajectory has no finite axis");
  double R = params.ell * std::cos(q0.beta) / sb;
  return {q0.x + R * std::sin(q0.alpha), q0.y - R * std::cos(q0.alpha), R};
}

ParkingPlan plan_parallel_park(const CarConfig& q_init, double s,
                               const CarParams& params, double beta0,
                               double advance, bool compensate_drift) {
  if (std::abs(q_init.beta) > kBetaZeroTol)
    throw DomainError("parking requires straight front wheels (beta = 0)");
  if (!(beta0 > 0.0 && beta0 < M_PI / 2))
    throw DomainError("beta0 out of range (0, pi/2)");
  double R = params.ell * std::cos(beta0) / std::sin(beta0);
  if (std::abs(s) > 2.0 * R)
    throw DomainError("offset too large for turning radius " +
                      std::to_string(R));

  ParkingPlan plan;
  double dlong = 0.0;
  if (s != 0.0) {
    double phi = std::acos(1.0 - std::abs(s) / (2.0 * R));
    double sgn = s > 0 ? 1.0 : -1.0;
    double tau = phi / std::sin(beta0);
    plan.arc_sweep = phi;
    plan.maneuver.push_back({Segment::Field::kSteer, sgn * beta0});
    plan.maneuver.push_back({Segment::Field::kGas, -tau});
    plan.maneuver.push_back({Segment::Field::kSteer, -2.0 * sgn * beta0});
    plan.maneuver.push_back({Segment::Field::kGas, -tau});
    plan.maneuver.push_back({Segment::Field::kSteer, sgn * beta0});
    plan.longitudinal_drift = -2.0 * R * std::sin(phi);
    dlong = plan.longitudinal_drift;
    if (compensate_drift) {
      plan.maneuver.push_back(
          {Segment::Field::kGas, 2.0 * R * std::sin(phi) / params.ell});
      dlong = 0.0;
    }
  }
  if (advance != 0.0) {
    plan.maneuver.push_back({Segment::Field::kGas, advance / params.ell});
    dlong += advance;
  }

  double dlat = -((s > 0) - (s < 0)) * std::abs(s);
  double ca = std::cos(q_init.alpha), sa = std::sin(q_init.alpha);
  plan.predicted_endpoint = {q_init.x + ca * dlong - sa * dlat,
                             q_init.y + sa * dlong + ca * dlat, q_init.alpha,
                             0.0};
  return plan;
}

std::vector<TrajectorySample> execute_maneuver(const CarConfig& q0,
                                               const Maneuver& maneuver,
                                               const CarParams& params,
                                               int steps_per_segment) {
  if (steps_per_segment < 1) throw DomainError("steps per segment must be >= 1");
  CarFrame f = car_fields(params);
  std::vector<TrajectorySample> traj;
  traj.push_back({0.0, q0, 0});
  double t = 0.0;
  CarConfig q = q0;
  int seg_idx = 0;
  for (const Segment& seg : maneuver) {
    const VectorField& X =
        seg.field == Segment::Field::kSteer ? f.X3 : f.X4;
    auto piece = flow(X, q.point(), seg.duration, steps_per_segment);
    double h = std::abs(seg.duration) / steps_per_segment;
    for (std::size_t i = 1; i < piece.size(); ++i) {
      t += h;
      traj.push_back({t, CarConfig::from_point(piece[i]), seg_idx});
    }
    q = traj.back().q;
    ++seg_idx;
  }
  return traj;
}

double max_constraint_residual(const std::vector<TrajectorySample>& traj,
                               const CarParams& params) {
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    // Velocities jump at segment joints; skip windows that straddle one.
    if (traj[i - 1].segment != traj[i + 1].segment) continue;
    double dt = traj[i + 1].t - traj[i - 1].t;
    if (dt <= 0.0) continue;
    const CarConfig& a = traj[i - 1].q;
    const CarConfig& b = traj[i + 1].q;
    const CarConfig& m = traj[i].q;
    double xd = (b.x - a.x) / dt;
    double yd = (b.y - a.y) / dt;
    double ad = (b.alpha - a.alpha) / dt;
    double sa = std::sin(m.alpha), ca = std::cos(m.alpha);
    double c1 = xd * sa - yd * ca;
    double amb = m.alpha - m.beta;
    double c2 = (xd - params.ell * ad * sa) * std::sin(amb) -
                (yd + params.ell * ad * ca) * std::cos(amb);
    worst = std::max({worst, std::abs(c1), std::abs(c2)});
  }
  return worst;
}

void write_trajectory_csv(std::ostream& os,
                          const std::vector<TrajectorySample>& traj) {
  os << "t,x,y,alpha,beta\n";
  char buf[256];
  for (const auto& s : traj) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", s.t,
                  s.q.x, s.q.y, s.q.alpha, s.q.beta);
    os << buf;
  }
}

}  // namespace carengel
