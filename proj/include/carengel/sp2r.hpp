#ifndef CARENGEL_SP2R_HPP
#define CARENGEL_SP2R_HPP

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <vector>

namespace carengel::sp2r {

// Everything in this module is exact integer arithmetic; results are
// bit-for-bit reproducible.
using IntMat4 = Eigen::Matrix<long long, 4, 4>;
using IntMat10 = Eigen::Matrix<long long, 10, 10>;

// Matrix of the symplectic form: Omega(1,4) = Omega(2,3) = 1,
// antisymmetric, all other entries zero.
IntMat4 omega();

// Basis E_1..E_10 (index 0 holds E_1). Each satisfies E^T Omega +
// Omega E = 0 exactly.
const std::array<IntMat4, 10>& basis();

// Coefficients of [E_I, E_J] over the basis, 1-based I, J. Exact; throws
// if the matrix commutator fails to lie in the span (it never does).
std::array<long long, 10> commutator(int I, int J);

// Grades: E1:-3, E2:-2, E3,E4:-1, E5,E6:0, E7,E8:1, E9:2, E10:3.
const std::array<int, 10>& grades();

struct GradationReport {
  bool ok = true;
  // (I, J, K): [E_I,E_J] has a component on E_K outside grade I+J.
  std::vector<std::array<int, 3>> violations;
};

// Checks [g_i, g_j] subset of g_{i+j} over all basis pairs.
GradationReport verify_gradation();

// K_IJ = c^K_IL c^L_JK from the exact structure constants.
const IntMat10& killing_matrix();

// Exact Jacobi check over all basis triples; max |cyclic sum| (0).
long long jacobi_max_violation();

// A subalgebra spanned by basis elements: sorted 1-based index set.
using Subalgebra = std::vector<int>;

// True iff every bracket of spanning elements stays in the span.
bool is_closed(const Subalgebra& sub);

// { E_J : K(E_I, E_J) = 0 for all I in sub }. For this algebra the
// Killing-orthogonal complement of a basis span is again a basis span;
// throws if the dimension check 10 - |sub| fails.
Subalgebra killing_orthogonal(const Subalgebra& sub);

// Length of the lower central series, or nullopt if it stabilizes at a
// nonzero term. Requires a closed sub (throws otherwise). The zero
// subalgebra has degree 0.
std::optional<int> nilpotency_degree(const Subalgebra& sub);

// Parabolic iff the Killing orthogonal is a nilpotent subalgebra (the
// zero complement counts as nilpotent).
bool is_parabolic(const Subalgebra& sub);

// The named subalgebras. p12 = p1 intersect p2 is a Borel subalgebra;
// m = g_{-3} + g_{-2} + g_{-1} is the 3-step Carnot nilradical mirror.
const Subalgebra& p1();    // {3, 5..10}
const Subalgebra& p2();    // {4, 5..10}
const Subalgebra& p12();   // {5..10}
const Subalgebra& n1();    // {7, 9, 10}
const Subalgebra& n2();    // {8, 9, 10}
const Subalgebra& n12();   // {7, 8, 9, 10}
const Subalgebra& m();     // {1, 2, 3, 4}
const Subalgebra& q();     // {1, 2, 4}
const Subalgebra& p();     // {1, 2, 3}

struct DimensionReport {
  int dim_p1, dim_p2, dim_p12;
  int dim_n1, dim_n2, dim_n12;
  int dim_m, dim_q, dim_p;
  bool p12_is_intersection;  // p12 == p1 intersect p2 as index sets
};

DimensionReport subalgebra_dimensions();

}  // namespace carengel::sp2r

#endif
