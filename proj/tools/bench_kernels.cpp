#include <chrono>
#include <cstdio>
#include <random>

#include "carengel/sweeps.hpp"
#include "carengel/verify.hpp"

using namespace carengel;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const char* name, double serial_ms, double parallel_ms,
         bool identical) {
  std::printf("%-24s %10.2f ms %10.2f ms   %5.2fx   %s\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms,
              identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 20000;
  std::mt19937_64 rng(42);

  std::printf("kernel                        serial     parallel   speedup\n");

  {
    std::vector<JetPoint> pts = random_jet_points(rng, n);
    const ThirdOrderODE& ode = car_ode();
    InvariantSweep a, b;
    double ts = time_ms([&] { a = invariant_sweep(ode, pts, false); });
    double tp = time_ms([&] { b = invariant_sweep(ode, pts, true); });
    row("invariant_sweep", ts, tp, a.w == b.w && a.c == b.c);
  }
  {
    std::vector<Point4> samples = random_configs(rng, n);
    SplitDistribution split = car_split({1.0});
    std::vector<std::array<int, 3>> a, b;
    double ts = time_ms([&] { a = growth_vector_sweep(split, samples, false); });
    double tp = time_ms([&] { b = growth_vector_sweep(split, samples, true); });
    row("growth_vector_sweep", ts, tp, a == b);
  }
  {
    std::vector<Point4> samples = random_configs(rng, n / 4);
    GeneratorSet gen = generators({1.0});
    std::array<double, 10> a{}, b{};
    double ts =
        time_ms([&] { a = symmetry_residual_sweep(gen, samples, false); });
    double tp =
        time_ms([&] { b = symmetry_residual_sweep(gen, samples, true); });
    row("symmetry_residual_sweep", ts, tp, a == b);
  }
  return 0;
}
