#include "carengel/ode.hpp"

#include <cmath>

namespace carengel {
namespace {

constexpr double kBranchGuard = 1e-12;

// X4(G) = dG/dx + p dG/dy + q dG/dp + F dG/dq at the jet level, one
// order lower than G.
Jet apply_x4(const Jet& g, const Jet& p_jet, const Jet& q_jet,
             const Jet& f_jet) {
  const int k = g.order() - 1;
  Jet out = g.derivative(0);
  out += p_jet.truncated(k) * g.derivative(1);
  out += q_jet.truncated(k) * g.derivative(2);
  out += f_jet.truncated(k) * g.derivative(3);
  return out;
}

void check_branch(double alpha, double beta) {
  if (std::abs(std::cos(alpha)) < kBranchGuard ||
      std::abs(std::cos(beta)) < kBranchGuard)
    throw DomainError("configuration outside the principal chart branch");
}

}  // namespace

const Chart& jet_chart() {
  static const Chart chart = {"x", "y", "p", "q"};
  return chart;
}

ThirdOrderODE ThirdOrderODE::parse(const std::string& text) {
  return {parse_expr(text, jet_chart())};
}

const ThirdOrderODE& car_ode() {
  static const ThirdOrderODE ode = ThirdOrderODE::parse("3*p*q^2/(1+p^2)");
  return ode;
}

std::pair<VectorField, VectorField> ode_fields(const ThirdOrderODE& ode) {
  const Chart& ch = jet_chart();
  VectorField x3 = VectorField::parse(ch, {"0", "0", "0", "1"});
  VectorField x4(ch, {ScalarFieldExpr::constant(1.0),
                      ScalarFieldExpr::variable(2, ch),
                      ScalarFieldExpr::variable(3, ch), ode.F});
  return {x3, x4};
}

double wunschmann(const ThirdOrderODE& ode, const JetPoint& pt) {
  const Point4 base = pt.point();
  Jet f = ode.F.eval_jet(base, 3);
  Jet p_jet = Jet::variable(base, 3, 2);
  Jet q_jet = Jet::variable(base, 3, 3);

  Jet x3f = f.derivative(3);   // order 2
  Jet f_p = f.derivative(2);   // order 2
  double f_y = f.derivative(1).value();

  Jet x4_x3f = apply_x4(x3f, p_jet, q_jet, f);            // order 1
  double x4x4_x3f = apply_x4(x4_x3f, p_jet, q_jet, f).value();
  double x4_fp = apply_x4(f_p, p_jet, q_jet, f).value();
  double a = x3f.value();

  return 9.0 * x4x4_x3f - 27.0 * x4_fp - 18.0 * a * x4_x3f.value() +
         18.0 * a * f_p.value() + 4.0 * a * a * a + 54.0 * f_y;
}

double chern_invariant(const ThirdOrderODE& ode, const JetPoint& pt) {
  Jet f = ode.F.eval_jet(pt.point(), 4);
  return f.partial({0, 0, 0, 4});
}

JetPoint chart_car_to_jet(const CarConfig& config, const CarParams& params) {
  check_branch(config.alpha, config.beta);
  double sec = 1.0 / std::cos(config.alpha);
  return {config.x, config.y, std::tan(config.alpha),
          -std::tan(config.beta) * sec * sec * sec / params.ell};
}

CarConfig chart_jet_to_car(const JetPoint& pt, const CarParams& params) {
  double alpha = std::atan(pt.p);
  double ca = 1.0 / std::sqrt(1.0 + pt.p * pt.p);
  double beta = std::atan(-params.ell * pt.q * ca * ca * ca);
  return {pt.x, pt.y, alpha, beta};
}

Eigen::Matrix4d normalize_car_coframe(const CarConfig& config,
                                      const CarParams& params) {
  check_branch(config.alpha, config.beta);
  double ca = std::cos(config.alpha), sa = std::sin(config.alpha);
  double cb = std::cos(config.beta), sb = std::sin(config.beta);
  double ta = sa / ca, seca = 1.0 / ca;
  double tb = sb / cb, secb = 1.0 / cb;
  double ell = params.ell, il = 1.0 / ell;

  Eigen::Matrix4d a1 = Eigen::Matrix4d::Identity();
  a1(0, 0) = ell * seca;
  Eigen::Matrix4d a2 = Eigen::Matrix4d::Identity();
  a2(1, 0) = -il * tb * ta * seca;
  a2(1, 1) = -secb * seca * seca;
  Eigen::Matrix4d a3 = Eigen::Matrix4d::Identity();
  a3(2, 1) = -3.0 * il * seca * ta * tb;
  a3(2, 2) = -il * seca * seca * seca * secb * secb;
  Eigen::Matrix4d a4 = Eigen::Matrix4d::Identity();
  a4(3, 0) = -cb * cb * sa * ca;            // -1/2 cos^2(b) sin(2a)
  a4(3, 1) = ell * ca * ca * ca * sb * cb;  // 1/2 l cos^3(a) sin(2b)
  a4(3, 3) = ell * ca * cb;

  Eigen::Matrix4d w = a4 * a3 * a2 * a1 * car_coframe(config, params);

  // Jacobian of (x, y, p, q) in (x, y, alpha, beta); rows of w are in
  // the car cobasis, so push forward with J^{-1}.
  Eigen::Matrix4d j = Eigen::Matrix4d::Identity();
  j(2, 2) = seca * seca;
  j(3, 2) = -3.0 * il * tb * seca * seca * seca * ta;
  j(3, 3) = -il * seca * seca * seca * secb * secb;
  return w * j.inverse();
}

Eigen::Matrix4d contact_coframe(const ThirdOrderODE& ode, const JetPoint& pt) {
  Eigen::Matrix4d w;
  w.row(0) << -pt.p, 1, 0, 0;
  w.row(1) << -pt.q, 0, 1, 0;
  w.row(2) << -ode.F.eval(pt.point()), 0, 0, 1;
  w.row(3) << 1, 0, 0, 0;
  return w;
}

std::vector<Point4> solve_ode(const ThirdOrderODE& ode,
                              const JetPoint& initial, double x_span,
                              int steps) {
  if (steps < 1) throw DomainError("steps must be >= 1");
  auto rhs = [&ode](const Point4& s) -> Point4 {
    return {1.0, s[2], s[3], ode.F.eval(s)};
  };
  auto axpy = [](const Point4& s, double h, const Point4& d) -> Point4 {
    return {s[0] + h * d[0], s[1] + h * d[1], s[2] + h * d[2],
            s[3] + h * d[3]};
  };
  std::vector<Point4> out;
  out.reserve(steps + 1);
  Point4 s = initial.point();
  out.push_back(s);
  double h = x_span / steps;
  for (int i = 0; i < steps; ++i) {
    Point4 k1 = rhs(s);
    Point4 k2 = rhs(axpy(s, 0.5 * h, k1));
    Point4 k3 = rhs(axpy(s, 0.5 * h, k2));
    Point4 k4 = rhs(axpy(s, h, k3));
    for (int c = 0; c < 4; ++c)
      s[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    out.push_back(s);
  }
  return out;
}

CycleFit fit_cycle(const std::vector<Point4>& curve) {
  const int n = static_cast<int>(curve.size());
  if (n < 4) throw DomainError("need at least 4 samples to fit a cycle");
  Eigen::MatrixXd m(n, 4);
  for (int i = 0; i < n; ++i) {
    double x = curve[i][0], y = curve[i][1];
    m.row(i) << x * x + y * y, x, y, 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
  Eigen::Vector4d v = svd.matrixV().col(3);
  CycleFit fit;
  fit.nu = v(0);
  fit.xi = -0.5 * v(1);
  fit.eta = -0.5 * v(2);
  fit.mu = v(3);
  fit.residual = svd.singularValues()(3) / std::sqrt(double(n));
  return fit;
}

QPolynomial extract_q_polynomial(const ThirdOrderODE& ode, double x, double y,
                                 double p) {
  for (double q : {0.0, 0.7, -1.3, 2.1}) {
    double c = chern_invariant(ode, {x, y, p, q});
    if (std::abs(c) > 1e-9)
      throw DomainError("F is not polynomial of degree <= 3 in q");
  }
  Jet f = ode.F.eval_jet({x, y, p, 0.0}, 3);
  QPolynomial a;
  a.A0 = f.coeff(monomial_index({0, 0, 0, 0}));
  a.A1 = f.coeff(monomial_index({0, 0, 0, 1}));
  a.A2 = f.coeff(monomial_index({0, 0, 0, 2}));
  a.A3 = f.coeff(monomial_index({0, 0, 0, 3}));
  return a;
}

ContactProjectiveConnection::ContactProjectiveConnection(ThirdOrderODE ode)
    : ode_(std::move(ode)) {}

ConnectionCoeffs ContactProjectiveConnection::coeffs(double x, double y,
                                                     double p) const {
  QPolynomial a = extract_q_polynomial(ode_, x, y, p);
  ConnectionCoeffs c;
  c.g233 = a.A3;
  c.g223 = 0.5 * a.A2;
  c.g222 = a.A1;
  c.g322 = -a.A0;
  return c;
}

double ContactProjectiveConnection::reconstruct_F(const JetPoint& pt) const {
  ConnectionCoeffs c = coeffs(pt.x, pt.y, pt.p);
  double q = pt.q;
  return c.g233 * q * q * q + (2.0 * c.g223 - c.g333) * q * q +
         (c.g222 - 2.0 * c.g323) * q - c.g322;
}

std::vector<std::array<double, 3>> ContactProjectiveConnection::geodesic(
    double x0, double y0, double p0, double q0, double t_span,
    int steps) const {
  if (steps < 1) throw DomainError("steps must be >= 1");
  using State = std::array<double, 5>;  // x, y, p, x', p'
  auto rhs = [this](const State& s) -> State {
    ConnectionCoeffs c = coeffs(s[0], s[1], s[2]);
    double u = s[3], v = s[4];
    return {u, s[2] * u, v,
            -(c.g222 * u * u + 2.0 * c.g223 * u * v + c.g233 * v * v),
            -(c.g322 * u * u + 2.0 * c.g323 * u * v + c.g333 * v * v)};
  };
  auto axpy = [](const State& s, double h, const State& d) -> State {
    State r;
    for (int i = 0; i < 5; ++i) r[i] = s[i] + h * d[i];
    return r;
  };
  std::vector<std::array<double, 3>> out;
  out.reserve(steps + 1);
  State s = {x0, y0, p0, 1.0, q0};
  out.push_back({s[0], s[1], s[2]});
  double h = t_span / steps;
  for (int i = 0; i < steps; ++i) {
    State k1 = rhs(s);
    State k2 = rhs(axpy(s, 0.5 * h, k1));
    State k3 = rhs(axpy(s, 0.5 * h, k2));
    State k4 = rhs(axpy(s, h, k3));
    for (int c = 0; c < 5; ++c)
      s[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    out.push_back({s[0], s[1], s[2]});
  }
  return out;
}

}  // namespace carengel
