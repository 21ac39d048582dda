#ifndef CARENGEL_SWEEPS_HPP
#define CARENGEL_SWEEPS_HPP

#include <vector>

#include "carengel/ode.hpp"
#include "carengel/symmetry.hpp"

namespace carengel {

// Batch kernels over sample points. Each takes `parallel`: true runs
// the OpenMP version, false the serial reference; results are
// identical either way (per-point outputs, deterministic reduction).

struct InvariantSweep {
  std::vector<double> w, c;  // per point
  double max_abs_w = 0.0, max_abs_c = 0.0;
};

InvariantSweep invariant_sweep(const ThirdOrderODE& ode,
                               const std::vector<JetPoint>& points,
                               bool parallel);

// derived_flag_ranks at each sample.
std::vector<std::array<int, 3>> growth_vector_sweep(
    const SplitDistribution& split, const std::vector<Point4>& samples,
    bool parallel);

// Per-generator max parallelism residual of ([S,Dw] vs Dw, [S,Dg] vs Dg)
// over the samples.
std::array<double, 10> symmetry_residual_sweep(
    const GeneratorSet& gen, const std::vector<Point4>& samples,
    bool parallel);

}  // namespace carengel

#endif
