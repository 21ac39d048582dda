#ifndef CARENGEL_PARALLEL_HPP
#define CARENGEL_PARALLEL_HPP

namespace carengel {

// Runs f(0..n-1); OpenMP-parallel when built with CARENGEL_OPENMP and
// `parallel` is set, plain loop otherwise. f must be safe to call
// concurrently with distinct indices.
template <typename F>
void parallel_for(int n, bool parallel, F&& f) {
#ifdef CARENGEL_OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
#else
  (void)parallel;
#endif
  for (int i = 0; i < n; ++i) f(i);
}

}  // namespace carengel

#endif
