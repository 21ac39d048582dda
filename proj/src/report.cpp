#include "carengel/report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace carengel {

void Report::add(const std::string& name, double residual, double tol) {
  add_pass(name, std::abs(residual) <= tol, residual, tol);
}

void Report::add_pass(const std::string& name, bool pass, double residual,
                      double tol) {
  checks.push_back({name, pass ? "pass" : "fail", residual, tol});
}

void Report::add_error(const std::string& name, double tol) {
  checks.push_back({name, "error", std::nan(""), tol});
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.status == "pass"; });
}

std::string Report::to_json() const {
  std::vector<CheckRecord> sorted = checks;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     return a.name < b.name;
                   });
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& c : sorted) {
    nlohmann::ordered_json r;
    r["name"] = c.name;
    r["status"] = c.status;
    if (std::isnan(c.residual))
      r["residual"] = nullptr;
    else
      r["residual"] = c.residual;
    r["tol"] = c.tol;
    j["checks"].push_back(r);
  }
  j["elapsed_ms"] = elapsed_ms;
  return j.dump(2);
}

}  // namespace carengel
