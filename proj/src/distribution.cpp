#include "carengel/distribution.hpp"

#include <cmath>

namespace carengel {
namespace {

int rank_of(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  double thresh = kRankThreshold * s(0);
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > thresh) ++r;
  return r;
}

}  // namespace

VectorField::VectorField(Chart chart, std::array<ScalarFieldExpr, 4> components)
    : chart_(std::move(chart)), components_(std::move(components)) {}

VectorField VectorField::parse(const Chart& chart,
                               const std::array<std::string, 4>& components) {
  return VectorField(chart, {parse_expr(components[0], chart),
                             parse_expr(components[1], chart),
                             parse_expr(components[2], chart),
                             parse_expr(components[3], chart)});
}

VectorField VectorField::zero(const Chart& chart) {
  auto z = ScalarFieldExpr::constant(0.0);
  return VectorField(chart, {z, z, z, z});
}

Vector4d VectorField::eval(const Point4& p) const {
  Vector4d v;
  for (int i = 0; i < 4; ++i) v(i) = components_[i].eval(p);
  return v;
}

std::array<Jet, 4> VectorField::eval_jets(const Point4& p, int order) const {
  return {components_[0].eval_jet(p, order), components_[1].eval_jet(p, order),
          components_[2].eval_jet(p, order), components_[3].eval_jet(p, order)};
}

std::array<Jet, 4> lie_bracket_jets(const std::array<Jet, 4>& X,
                                    const std::array<Jet, 4>& Y) {
  int k = X[0].order();
  std::array<Jet, 4> out = {Jet(X[0].base(), k - 1), Jet(X[0].base(), k - 1),
                            Jet(X[0].base(), k - 1), Jet(X[0].base(), k - 1)};
  for (int i = 0; i < 4; ++i) {
    Jet acc(X[0].base(), k - 1);
    for (int j = 0; j < 4; ++j) {
      acc += X[j].truncated(k - 1) * Y[i].derivative(j);
      acc -= Y[j].truncated(k - 1) * X[i].derivative(j);
    }
    out[i] = acc;
  }
  return out;
}

Vector4d lie_bracket(const VectorField& X, const VectorField& Y,
                     const Point4& p) {
  auto b = lie_bracket_jets(X.eval_jets(p, 1), Y.eval_jets(p, 1));
  return Vector4d(b[0].value(), b[1].value(), b[2].value(), b[3].value());
}

std::array<int, 3> derived_flag_ranks(const SplitDistribution& D,
                                      const Point4& p) {
  auto W = D.Dw.eval_jets(p, 2);
  auto G = D.Dg.eval_jets(p, 2);
  auto B = lie_bracket_jets(W, G);                 // order-1 jets
  auto WB = lie_bracket_jets(W, B);                // values
  auto GB = lie_bracket_jets(G, B);

  auto col = [](const std::array<Jet, 4>& j) {
    return Vector4d(j[0].value(), j[1].value(), j[2].value(), j[3].value());
  };

  Eigen::MatrixXd m(4, 5);
  m.col(0) = col(W);
  m.col(1) = col(G);
  m.col(2) = col(B);
  m.col(3) = col(WB);
  m.col(4) = col(GB);

  int r1 = rank_of(m.leftCols(2));
  int r2 = rank_of(m.leftCols(3));
  int r3 = rank_of(m);
  return {r1, r2, r3};
}

EngelReport is_engel(const SplitDistribution& D,
                     const std::vector<Point4>& samples) {
  EngelReport rep;
  for (const auto& p : samples) {
    try {
      auto r = derived_flag_ranks(D, p);
      ++rep.samples_checked;
      if (r != std::array<int, 3>{2, 3, 4}) {
        rep.is_engel = false;
        rep.failures.push_back(r);
        rep.failure_points.push_back(p);
      }
    } catch (const PoleError& e) {
      rep.errors.push_back(e.what());
    }
  }
  if (rep.samples_checked == 0) rep.is_engel = false;
  return rep;
}

std::vector<Point4> flow(const VectorField& X, const Point4& q0, double T,
                         int steps) {
  if (steps < 1) throw DomainError("flow: steps must be >= 1");
  std::vector<Point4> traj;
  traj.reserve(steps + 1);
  traj.push_back(q0);
  double h = T / steps;
  Point4 q = q0;
  auto f = [&X](const Point4& p) { return X.eval(p); };
  auto add = [](const Point4& p, const Vector4d& v, double s) {
    Point4 r;
    for (int i = 0; i < 4; ++i) r[i] = p[i] + s * v(i);
    return r;
  };
  for (int n = 0; n < steps; ++n) {
    try {
      Vector4d k1 = f(q);
      Vector4d k2 = f(add(q, k1, h / 2));
      Vector4d k3 = f(add(q, k2, h / 2));
      Vector4d k4 = f(add(q, k3, h));
      Vector4d dq = (k1 + 2 * k2 + 2 * k3 + k4) / 6.0;
      q = add(q, dq, h);
    } catch (const PoleError& e) {
      throw PoleError(std::string(e.what()) + " (at flow step " +
                      std::to_string(n) + ")");
    }
    traj.push_back(q);
  }
  return traj;
}

double parallelism_residual(const Vector4d& u, const Vector4d& v) {
  // Normalizing by |v|(|u|+|v|) keeps the residual meaningful when u is
  // pure rounding noise (a bracket that vanishes identically).
  double scale = v.norm() * (u.norm() + v.norm());
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      worst = std::max(worst, std::abs(u(i) * v(j) - u(j) * v(i)));
  return worst / scale;
}

SymmetryResult is_infinitesimal_symmetry(const VectorField& S,
                                         const SplitDistribution& D,
                                         const std::vector<Point4>& samples,
                                         double tol) {
  SymmetryResult res;
  if (samples.empty()) throw DomainError("need at least one sample");
  for (const auto& p : samples) {
    Vector4d w = D.Dw.eval(p);
    Vector4d g = D.Dg.eval(p);
    if (w.norm() == 0.0 || g.norm() == 0.0)
      throw DomainError("split directions must be nonzero at samples");
    Vector4d bw = lie_bracket(S, D.Dw, p);
    Vector4d bg = lie_bracket(S, D.Dg, p);
    res.max_residual = std::max(res.max_residual, parallelism_residual(bw, w));
    res.max_residual = std::max(res.max_residual, parallelism_residual(bg, g));
  }
  res.is_symmetry = res.max_residual <= tol;
  return res;
}

}  // namespace carengel
