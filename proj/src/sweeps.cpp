#include "carengel/sweeps.hpp"

#include <cmath>

#include "carengel/parallel.hpp"

namespace carengel {

InvariantSweep invariant_sweep(const ThirdOrderODE& ode,
                               const std::vector<JetPoint>& points,
                               bool parallel) {
  const int n = static_cast<int>(points.size());
  InvariantSweep out;
  out.w.resize(n);
  out.c.resize(n);
  parallel_for(n, parallel, [&](int i) {
    out.w[i] = wunschmann(ode, points[i]);
    out.c[i] = chern_invariant(ode, points[i]);
  });
  for (int i = 0; i < n; ++i) {
    out.max_abs_w = std::max(out.max_abs_w, std::abs(out.w[i]));
    out.max_abs_c = std::max(out.max_abs_c, std::abs(out.c[i]));
  }
  return out;
}

std::vector<std::array<int, 3>> growth_vector_sweep(
    const SplitDistribution& split, const std::vector<Point4>& samples,
    bool parallel) {
  const int n = static_cast<int>(samples.size());
  std::vector<std::array<int, 3>> out(n);
  parallel_for(n, parallel,
               [&](int i) { out[i] = derived_flag_ranks(split, samples[i]); });
  return out;
}

std::array<double, 10> symmetry_residual_sweep(
    const GeneratorSet& gen, const std::vector<Point4>& samples,
    bool parallel) {
  const int n = static_cast<int>(samples.size());
  SplitDistribution split = car_split(gen.params);
  std::vector<std::array<double, 10>> per_point(n);
  parallel_for(n, parallel, [&](int i) {
    const Point4& p = samples[i];
    Vector4d dw = split.Dw.eval(p);
    Vector4d dg = split.Dg.eval(p);
    for (int k = 0; k < 10; ++k) {
      double rw = parallelism_residual(lie_bracket(gen.S[k], split.Dw, p), dw);
      double rg = parallelism_residual(lie_bracket(gen.S[k], split.Dg, p), dg);
      per_point[i][k] = std::max(rw, rg);
    }
  });
  std::array<double, 10> out{};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 10; ++k) out[k] = std::max(out[k], per_point[i][k]);
  return out;
}

}  // namespace carengel
