#ifndef CARENGEL_TWISTOR_HPP
#define CARENGEL_TWISTOR_HPP

#include <Eigen/Dense>
#include <array>

#include "carengel/errors.hpp"
#include "carengel/lie_sphere.hpp"

namespace carengel::twistor {

using Eigen::Matrix4d;
using Eigen::Vector4d;

// Antisymmetric component matrix Y^{mu nu} of Y = 1/2 Y^{mu nu}
// e_mu ^ e_nu.
using Bivector = Matrix4d;

// Matrix of the symplectic form (same convention as the sp(2,R) module).
Matrix4d omega_matrix();

bool is_symplectic(const Matrix4d& a, double tol = 1e-12);

// The general element of omega-perp:
//   Y = (eta+zeta) e1^e2 + mu e1^e3 + nu e4^e2 + (eta-zeta) e4^e3
//       + xi (e1^e4 - e2^e3).
Bivector omega_perp_embed(const QuadricPoint& v);

// Inverse of omega_perp_embed on its image; throws if Y is not in
// omega-perp (relative tolerance).
QuadricPoint omega_perp_coords(const Bivector& y, double tol = 1e-10);

// Coefficient of e1^e2^e3^e4 in Y^Y; equals -2 Q on the embedded tuple.
double wedge_square_coeff(const Bivector& y);

double pfaffian(const Bivector& y);

struct LagrangianPlane {
  Vector4d Y1, Y2;
  Bivector bivector() const;  // Y1 Y2^T - Y2 Y1^T
};

// Y1 = (eta+zeta) e1 + e4 + xi e3, Y2 = -xi e1 + e2 + (eta-zeta) e3;
// omega(Y1, Y2) = 0 by construction.
LagrangianPlane plane_from_params(double xi, double eta, double zeta);

// True iff the wedge of the two plane bivectors vanishes (the shared
// direction makes the 4-form degenerate).
bool planes_intersect_in_line(const LagrangianPlane& p1,
                              const LagrangianPlane& p2, double tol);

// v ^ Y1 ^ Y2 = 0, i.e. v lies in the plane.
bool line_in_plane(const Vector4d& v, const LagrangianPlane& p, double tol);

// Action of a symplectic A on omega-perp in the (xi,eta,zeta,mu,nu)
// basis, via the bivector push-forward Y -> A Y A^T. Satisfies
// M^T G M = G for the quadric Gram matrix and induced(AB) =
// induced(A) induced(B); kernel of the double cover: -I -> identity.
Eigen::Matrix<double, 5, 5> induced_quadric_action(const Matrix4d& a);

// Gram matrix of Q in the (xi,eta,zeta,mu,nu) coordinates.
Eigen::Matrix<double, 5, 5> quadric_gram();

// sp(2,R) element with the given coefficients over the integer basis.
Matrix4d sp_element(const std::array<double, 10>& a);

// exp(X) by scaled squaring; X must be in sp(2,R) (checked), so the
// result is symplectic to rounding.
Matrix4d symplectic_exp(const Matrix4d& x);

// Dimensions of the projective stabilizers inside sp(2,R): coefficient
// vectors a (plus one scale unknown per defining tensor) with
// E(a) . object = lambda . object; numeric kernel with threshold 1e-8.
int stabilizer_dimension_plane(const LagrangianPlane& p);
int stabilizer_dimension_line(const Vector4d& v);
int stabilizer_dimension_pair(const Vector4d& v, const LagrangianPlane& p);

}  // namespace carengel::twistor

#endif
