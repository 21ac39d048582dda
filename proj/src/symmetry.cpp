#include "carengel/symmetry.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace carengel {
namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "(%.17g)", v);
  return buf;
}

int rank_of(const Eigen::MatrixXd& m, double rel_thresh) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel_thresh * s(0)) ++r;
  return r;
}

}  // namespace

GeneratorSet generators(const CarParams& params) {
  if (!(params.ell > 0.0)) throw DomainError("car length must be positive");
  const std::string L = num(params.ell);
  const Chart& ch = car_chart();
  auto vf = [&ch](const std::string& a, const std::string& b,
                  const std::string& c, const std::string& d) {
    return VectorField::parse(ch, {a, b, c, d});
  };
  // Theorem-1 generators in closed form.
  GeneratorSet g{{
      vf("1", "0", "0", "0"),
      vf("0", "1", "0", "0"),
      vf("-y", "x", "1", "0"),
      vf(L + "*sin(alpha)", "-" + L + "*cos(alpha)", "0", "sin(beta)^2"),
      vf("x", "y", "0", "-sin(beta)*cos(beta)"),
      vf("x^2-y^2", "2*x*y", "2*y",
         "-2*cos(beta)*(" + L + "*cos(beta)*sin(alpha)+x*sin(beta))"),
      vf(L + "*x*sin(alpha)", "-" + L + "*x*cos(alpha)", "-" + L + "*cos(alpha)",
         "sin(beta)*(" + L + "*cos(beta)*sin(alpha)+x*sin(beta))"),
      vf(L + "*y*sin(alpha)", "-" + L + "*y*cos(alpha)", "-" + L + "*sin(alpha)",
         "-sin(beta)*(" + L + "*cos(beta)*cos(alpha)-y*sin(beta))"),
      vf("2*x*y", "y^2-x^2", "-2*x",
         "2*cos(beta)*(" + L + "*cos(beta)*cos(alpha)-y*sin(beta))"),
      vf(L + "*(x^2+y^2)*sin(alpha)", "-" + L + "*(x^2+y^2)*cos(alpha)",
         "-2*" + L + "*(x*cos(alpha)+y*sin(alpha))",
         "2*" + L + "*sin(beta)*cos(beta)*(x*sin(alpha)-y*cos(alpha))"
         "+sin(beta)^2*(x^2+y^2)+2*" + L + "^2*cos(beta)^2"),
  }, params};
  return g;
}

SymmetryReport verify_all_symmetries(const GeneratorSet& gen,
                                     const std::vector<Point4>& samples,
                                     double tol) {
  SymmetryReport rep;
  SplitDistribution split = car_split(gen.params);
  for (int i = 0; i < 10; ++i) {
    auto res = is_infinitesimal_symmetry(gen.S[i], split, samples, tol);
    rep.residuals[i] = res.max_residual;
    rep.all_pass = rep.all_pass && res.is_symmetry;
  }
  return rep;
}

StructureConstants extract_structure_constants(
    const GeneratorSet& gen, const std::vector<Point4>& sample_points,
    double tol) {
  const int n = static_cast<int>(sample_points.size());
  if (n < 20) throw DomainError("need at least 20 sample points");
  const int n_holdout = 10;
  const int n_fit = n - n_holdout;

  Eigen::MatrixXd A(4 * n_fit, 10);
  for (int s = 0; s < n_fit; ++s)
    for (int k = 0; k < 10; ++k)
      A.block<4, 1>(4 * s, k) = gen.S[k].eval(sample_points[s]);
  if (rank_of(A, 1e-10) < 10)
    throw DomainError("sample set is rank deficient for the generators");

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);

  StructureConstants sc;
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      Eigen::VectorXd b(4 * n_fit);
      for (int s = 0; s < n_fit; ++s)
        b.segment<4>(4 * s) =
            lie_bracket(gen.S[i], gen.S[j], sample_points[s]);
      Eigen::VectorXd coef = qr.solve(b);
      for (int k = 0; k < 10; ++k) {
        sc.c[k][i][j] = coef(k);
        sc.c[k][j][i] = -coef(k);
      }
      // held-out validation
      for (int s = n_fit; s < n; ++s) {
        const Point4& p = sample_points[s];
        Eigen::Vector4d pred = Eigen::Vector4d::Zero();
        double scale = 1.0;
        for (int k = 0; k < 10; ++k) {
          Eigen::Vector4d v = gen.S[k].eval(p);
          pred += coef(k) * v;
          scale = std::max(scale, v.norm());
        }
        Eigen::Vector4d actual = lie_bracket(gen.S[i], gen.S[j], p);
        double r = (actual - pred).norm() / scale;
        sc.residual = std::max(sc.residual, r);
      }
    }
  }
  if (sc.residual > tol)
    throw DomainError("bracket fit residual " + std::to_string(sc.residual) +
                      " exceeds tolerance: algebra does not close");
  return sc;
}

KillingForm killing_form(const StructureConstants& sc) {
  KillingForm kf;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 10; ++k)
        for (int l = 0; l < 10; ++l) sum += sc.c[k][i][l] * sc.c[l][j][k];
      kf.K(i, j) = sum;
    }
  kf.K = 0.5 * (kf.K + kf.K.transpose().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 10, 10>> es(kf.K);
  double maxabs = es.eigenvalues().cwiseAbs().maxCoeff();
  double thresh = 1e-8 * std::max(maxabs, 1e-300);
  for (int i = 0; i < 10; ++i) {
    double ev = es.eigenvalues()(i);
    if (ev > thresh)
      ++kf.n_plus;
    else if (ev < -thresh)
      ++kf.n_minus;
    else
      ++kf.n_zero;
  }
  return kf;
}

double jacobi_residual(const StructureConstants& sc) {
  double worst = 0.0;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      for (int l = j + 1; l < 10; ++l)
        for (int k = 0; k < 10; ++k) {
          double sum = 0.0;
          for (int m = 0; m < 10; ++m)
            sum += sc.c[m][i][j] * sc.c[k][m][l] +
                   sc.c[m][j][l] * sc.c[k][m][i] +
                   sc.c[m][l][i] * sc.c[k][m][j];
          worst = std::max(worst, std::abs(sum));
        }
  return worst;
}

int derived_algebra_rank(const StructureConstants& sc) {
  Eigen::MatrixXd m(45, 10);
  int row = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j, ++row)
      for (int k = 0; k < 10; ++k) m(row, k) = sc.c[k][i][j];
  return rank_of(m, 1e-8);
}

}  // namespace carengel
