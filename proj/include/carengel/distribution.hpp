#ifndef CARENGEL_DISTRIBUTION_HPP
#define CARENGEL_DISTRIBUTION_HPP

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "carengel/expr.hpp"

namespace carengel {

using Eigen::Vector4d;

// Vector field on a 4-coordinate chart: one closed-form component per
// coordinate direction.
class VectorField {
 public:
  VectorField(Chart chart, std::array<ScalarFieldExpr, 4> components);

  // Convenience: parse the four component strings over `chart`.
  static VectorField parse(const Chart& chart,
                           const std::array<std::string, 4>& components);
  static VectorField zero(const Chart& chart);

  const Chart& chart() const { return chart_; }
  const ScalarFieldExpr& component(int i) const { return components_[i]; }

  Vector4d eval(const Point4& p) const;
  std::array<Jet, 4> eval_jets(const Point4& p, int order) const;

 private:
  Chart chart_;
  std::array<ScalarFieldExpr, 4> components_;
};

// [X,Y]^i = X^j d_j Y^i - Y^j d_j X^i at `p`, via order-1 jets.
Vector4d lie_bracket(const VectorField& X, const VectorField& Y,
                     const Point4& p);

// Jet-level bracket: given order-k component jets of X and Y at the same
// base point, returns order-(k-1) jets of the bracket components. Exact
// to rounding; enables nested brackets.
std::array<Jet, 4> lie_bracket_jets(const std::array<Jet, 4>& X,
                                    const std::array<Jet, 4>& Y);

// Rank-1 + rank-1 split of a rank-2 distribution.
struct SplitDistribution {
  VectorField Dw;  // e.g. steering wheel direction
  VectorField Dg;  // e.g. gas direction
};

// Relative singular-value threshold used for all rank decisions.
inline constexpr double kRankThreshold = 1e-8;

// Ranks (r1, r2, r3) of the derived flag D, D + [D,D], D + [D,D] + [D,[D,D]]
// at `p`, by singular-value thresholding.
std::array<int, 3> derived_flag_ranks(const SplitDistribution& D,
                                      const Point4& p);

struct EngelReport {
  bool is_engel = true;
  int samples_checked = 0;
  std::vector<std::array<int, 3>> failures;        // ranks at failing samples
  std::vector<Point4> failure_points;
  std::vector<std::string> errors;                 // per-sample pole errors
};

// True iff derived_flag_ranks == (2,3,4) at every sample.
EngelReport is_engel(const SplitDistribution& D,
                     const std::vector<Point4>& samples);

// Classical fixed-step RK4 flow of X from q0 over time T with `steps`
// steps; trajectory[0] == q0, trajectory.size() == steps + 1.
std::vector<Point4> flow(const VectorField& X, const Point4& q0, double T,
                         int steps);

struct SymmetryResult {
  bool is_symmetry = false;
  double max_residual = 0.0;  // normalized parallelism residual over samples
};

// S is an infinitesimal symmetry of the split iff [S,Dw] || Dw and
// [S,Dg] || Dg at every sample. Parallelism of u,v in R^4 is tested by
// the 2x2 minors of (u|v), normalized as in parallelism_residual.
SymmetryResult is_infinitesimal_symmetry(const VectorField& S,
                                         const SplitDistribution& D,
                                         const std::vector<Point4>& samples,
                                         double tol);

// Normalized parallelism residual: max |2x2 minor of (u|v)| / (|v|(|u|+|v|)).
double parallelism_residual(const Vector4d& u, const Vector4d& v);

}  // namespace carengel

#endif
