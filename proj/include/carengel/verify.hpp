#ifndef CARENGEL_VERIFY_HPP
#define CARENGEL_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "carengel/ode.hpp"
#include "carengel/report.hpp"
#include "carengel/symmetry.hpp"

namespace carengel {

struct VerifyOptions {
  std::uint64_t seed = 42;
  int samples = 100;
  double ell = 1.0;
  bool parallel = true;
  // Test hook: perturbs generator 1 so the symmetry suite must fail.
  bool break_generator = false;
};

// suite in {engel, symmetries, algebra, sp2r, quadric, twistor, all};
// throws DomainError on an unknown name.
Report run_suite(const std::string& suite, const VerifyOptions& opt);

// Seeded sample generators shared by the suites and the tests.
std::vector<Point4> random_configs(std::mt19937_64& rng, int n,
                                   double coord_range = 2.0,
                                   double angle_range = 1.3);
std::vector<JetPoint> random_jet_points(std::mt19937_64& rng, int n,
                                        double range = 2.0);

}  // namespace carengel

#endif
