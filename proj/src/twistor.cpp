#include "carengel/twistor.hpp"

#include <cmath>

namespace carengel::twistor {
namespace {

int kernel_dimension(const Eigen::MatrixXd& m, double rel_thresh = 1e-8) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  double top = s.size() ? s(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel_thresh * std::max(top, 1.0)) ++rank;
  return static_cast<int>(m.cols()) - rank;
}

// One row block of the projective plane-stabilizer system: the 6 upper
// entries of E B + B E^T - lambda B.
void fill_plane_rows(Eigen::MatrixXd& sys, int row0, int lambda_col,
                     const Bivector& b) {
  for (int i = 0; i < 10; ++i) {
    std::array<double, 10> a{};
    a[i] = 1.0;
    Matrix4d e = sp_element(a);
    Matrix4d d = e * b + b * e.transpose();
    int r = row0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu) sys(r++, i) = d(mu, nu);
  }
  int r = row0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) sys(r++, lambda_col) = -b(mu, nu);
}

void fill_line_rows(Eigen::MatrixXd& sys, int row0, int lambda_col,
                    const Vector4d& v) {
  for (int i = 0; i < 10; ++i) {
    std::array<double, 10> a{};
    a[i] = 1.0;
    Vector4d d = sp_element(a) * v;
    for (int mu = 0; mu < 4; ++mu) sys(row0 + mu, i) = d(mu);
  }
  for (int mu = 0; mu < 4; ++mu) sys(row0 + mu, lambda_col) = -v(mu);
}

}  // namespace

Matrix4d omega_matrix() {
  Matrix4d w = Matrix4d::Zero();
  w(0, 3) = 1.0;
  w(1, 2) = 1.0;
  w(2, 1) = -1.0;
  w(3, 0) = -1.0;
  return w;
}

bool is_symplectic(const Matrix4d& a, double tol) {
  Matrix4d w = omega_matrix();
  return (a.transpose() * w * a - w).cwiseAbs().maxCoeff() <=
         tol * std::max(1.0, a.squaredNorm());
}

Bivector omega_perp_embed(const QuadricPoint& v) {
  Bivector y = Bivector::Zero();
  y(0, 1) = v.eta + v.zeta;
  y(0, 2) = v.mu;
  y(3, 1) = v.nu;
  y(3, 2) = v.eta - v.zeta;
  y(0, 3) = v.xi;
  y(1, 2) = -v.xi;
  return y - Bivector(y.transpose());
}

QuadricPoint omega_perp_coords(const Bivector& y, double tol) {
  QuadricPoint v;
  v.eta = 0.5 * (y(0, 1) + y(3, 2));
  v.zeta = 0.5 * (y(0, 1) - y(3, 2));
  v.mu = y(0, 2);
  v.nu = y(3, 1);
  v.xi = y(0, 3);
  double scale = std::max(1.0, y.cwiseAbs().maxCoeff());
  if ((omega_perp_embed(v) - y).cwiseAbs().maxCoeff() > tol * scale)
    throw DomainError("bivector is not in omega-perp");
  return v;
}

double pfaffian(const Bivector& y) {
  return y(0, 1) * y(2, 3) - y(0, 2) * y(1, 3) + y(0, 3) * y(1, 2);
}

double wedge_square_coeff(const Bivector& y) { return 2.0 * pfaffian(y); }

Bivector LagrangianPlane::bivector() const {
  return Y1 * Y2.transpose() - Y2 * Y1.transpose();
}

LagrangianPlane plane_from_params(double xi, double eta, double zeta) {
  LagrangianPlane p;
  p.Y1 << eta + zeta, 0.0, xi, 1.0;
  p.Y2 << -xi, 1.0, eta - zeta, 0.0;
  return p;
}

bool planes_intersect_in_line(const LagrangianPlane& p1,
                              const LagrangianPlane& p2, double tol) {
  Bivector a = p1.bivector(), b = p2.bivector();
  double pairing = a(0, 1) * b(2, 3) - a(0, 2) * b(1, 3) +
                   a(0, 3) * b(1, 2) + a(2, 3) * b(0, 1) -
                   a(1, 3) * b(0, 2) + a(1, 2) * b(0, 3);
  double scale = std::max(1.0, a.norm() * b.norm());
  return std::abs(pairing) <= tol * scale;
}

bool line_in_plane(const Vector4d& v, const LagrangianPlane& p, double tol) {
  double scale = std::max(1.0, v.norm() * p.Y1.norm() * p.Y2.norm());
  for (int k = 0; k < 4; ++k) {
    Matrix4d m = Matrix4d::Zero();
    m.col(0) = v;
    m.col(1) = p.Y1;
    m.col(2) = p.Y2;
    m(k, 3) = 1.0;
    if (std::abs(m.determinant()) > tol * scale) return false;
  }
  return true;
}

Eigen::Matrix<double, 5, 5> induced_quadric_action(const Matrix4d& a) {
  if (!is_symplectic(a)) throw DomainError("matrix is not symplectic");
  Eigen::Matrix<double, 5, 5> m;
  for (int c = 0; c < 5; ++c) {
    QuadricPoint basis{};
    (c == 0 ? basis.xi
     : c == 1 ? basis.eta
     : c == 2 ? basis.zeta
     : c == 3 ? basis.mu
              : basis.nu) = 1.0;
    Bivector y = omega_perp_embed(basis);
    QuadricPoint img = omega_perp_coords(a * y * a.transpose(), 1e-8);
    m.col(c) << img.xi, img.eta, img.zeta, img.mu, img.nu;
  }
  return m;
}

Eigen::Matrix<double, 5, 5> quadric_gram() {
  Eigen::Matrix<double, 5, 5> g = Eigen::Matrix<double, 5, 5>::Zero();
  g(0, 0) = 1.0;
  g(1, 1) = 1.0;
  g(2, 2) = -1.0;
  g(3, 4) = -0.5;
  g(4, 3) = -0.5;
  return g;
}

Matrix4d sp_element(const std::array<double, 10>& a) {
  Matrix4d e;
  e << a[4], a[6], a[8], 2.0 * a[9],
      -a[3], a[5], a[7], a[8],
      a[1], a[2], -a[5], -a[6],
      -2.0 * a[0], a[1], a[3], -a[4];
  return e;
}

Matrix4d symplectic_exp(const Matrix4d& x) {
  Matrix4d w = omega_matrix();
  if ((x.transpose() * w + w * x).cwiseAbs().maxCoeff() >
      1e-12 * std::max(1.0, x.norm()))
    throw DomainError("matrix is not in sp(2,R)");
  Matrix4d s = x;
  int squarings = 0;
  while (s.norm() > 0.5) {
    s *= 0.5;
    ++squarings;
  }
  Matrix4d result = Matrix4d::Identity();
  Matrix4d term = Matrix4d::Identity();
  for (int n = 1; n <= 20; ++n) {
    term = term * s / double(n);
    result += term;
    if (term.norm() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

int stabilizer_dimension_plane(const LagrangianPlane& p) {
  Bivector b = p.bivector();
  if (b.norm() < 1e-12) throw DomainError("degenerate plane");
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(6, 11);
  fill_plane_rows(sys, 0, 10, b);
  return kernel_dimension(sys);
}

int stabilizer_dimension_line(const Vector4d& v) {
  if (v.norm() < 1e-12) throw DomainError("degenerate line");
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(4, 11);
  fill_line_rows(sys, 0, 10, v);
  return kernel_dimension(sys);
}

int stabilizer_dimension_pair(const Vector4d& v, const LagrangianPlane& p) {
  Bivector b = p.bivector();
  if (v.norm() < 1e-12 || b.norm() < 1e-12)
    throw DomainError("degenerate incidence pair");
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(10, 12);
  fill_line_rows(sys, 0, 10, v);
  fill_plane_rows(sys, 4, 11, b);
  return kernel_dimension(sys);
}

}  // namespace carengel::twistor
