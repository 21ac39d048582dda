#ifndef CARENGEL_REPORT_HPP
#define CARENGEL_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace carengel {

struct CheckRecord {
  std::string name;
  std::string status;  // "pass" | "fail" | "error"
  double residual = 0.0;
  double tol = 0.0;
};

// Machine-readable verification report; checks are sorted by name when
// serialized so runs are byte-comparable.
struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  double elapsed_ms = 0.0;  // stays 0 unless timing is requested

  void add(const std::string& name, double residual, double tol);
  void add_pass(const std::string& name, bool pass, double residual,
                double tol);
  void add_error(const std::string& name, double tol);

  bool all_pass() const;
  std::string to_json() const;
};

}  // namespace carengel

#endif
