#ifndef CARENGEL_SYMMETRY_HPP
#define CARENGEL_SYMMETRY_HPP

#include <array>
#include <vector>

#include "carengel/car.hpp"
#include "carengel/distribution.hpp"

namespace carengel {

// The 10 closed-form generators S1..S10 of the symmetry algebra of the
// car split.
struct GeneratorSet {
  std::array<VectorField, 10> S;
  CarParams params;
};

GeneratorSet generators(const CarParams& params);

struct SymmetryReport {
  bool all_pass = true;
  std::array<double, 10> residuals{};  // per-generator max residual
};

// Every S_I must pass is_infinitesimal_symmetry on the car split.
SymmetryReport verify_all_symmetries(const GeneratorSet& gen,
                                     const std::vector<Point4>& samples,
                                     double tol);

// Antisymmetric c^K_IJ with [S_I,S_J] = sum_K c^K_IJ S_K, fit pointwise
// by least squares; `residual` is the worst relative misfit on held-out
// samples.
struct StructureConstants {
  double c[10][10][10] = {};  // c[K][I][J]
  double residual = 0.0;
};

StructureConstants extract_structure_constants(
    const GeneratorSet& gen, const std::vector<Point4>& sample_points,
    double tol);

struct KillingForm {
  Eigen::Matrix<double, 10, 10> K;
  int n_plus = 0, n_minus = 0, n_zero = 0;
};

// K_IJ = c^K_IL c^L_JK; signature from eigenvalues with relative
// threshold 1e-8.
KillingForm killing_form(const StructureConstants& c);

// Max |c^K_IJ [Jacobi cyclic sum]| over basis triples.
double jacobi_residual(const StructureConstants& c);

// Rank of the 45 bracket-coefficient vectors; 10 means the algebra is
// perfect (a necessary condition for simplicity).
int derived_algebra_rank(const StructureConstants& c);

}  // namespace carengel

#endif
