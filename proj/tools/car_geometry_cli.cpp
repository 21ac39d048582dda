#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "carengel/lie_sphere.hpp"
#include "carengel/report.hpp"
#include "carengel/sweeps.hpp"
#include "carengel/verify.hpp"

namespace {

using namespace carengel;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::vector<double> parse_csv_doubles(const std::string& text, int expect) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    out.push_back(std::stod(item, &pos));
    if (pos != item.size()) throw std::invalid_argument(item);
  }
  if (expect >= 0 && static_cast<int>(out.size()) != expect)
    throw std::invalid_argument("expected " + std::to_string(expect) +
                                " comma-separated numbers");
  return out;
}

int emit(const Report& rep) {
  std::cout << rep.to_json() << "\n";
  return rep.all_pass() ? kExitPass : kExitCheckFailure;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 =
      std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

int cmd_verify(const std::string& suite, const VerifyOptions& opt,
               bool timing) {
  Timer timer;
  Report rep = run_suite(suite, opt);
  if (timing) rep.elapsed_ms = timer.ms();
  return emit(rep);
}

int cmd_invariants(const std::string& ode_text, int points,
                   std::uint64_t seed, double tol, bool serial,
                   bool timing) {
  Timer timer;
  ThirdOrderODE ode = ThirdOrderODE::parse(ode_text);
  std::mt19937_64 rng(seed);
  std::vector<JetPoint> pts = random_jet_points(rng, points);
  InvariantSweep sweep = invariant_sweep(ode, pts, !serial);
  Report rep;
  rep.suite = "invariants";
  rep.seed = seed;
  rep.add("invariants.max_abs_W", sweep.max_abs_w, tol);
  rep.add("invariants.max_abs_C", sweep.max_abs_c, tol);
  if (timing) rep.elapsed_ms = timer.ms();
  return emit(rep);
}

int cmd_park(double offset, double ell, double beta0, double advance,
             bool compensate, const std::string& out_path, int steps) {
  CarConfig q0;
  ParkingPlan plan =
      plan_parallel_park(q0, offset, {ell}, beta0, advance, compensate);
  nlohmann::ordered_json summary;
  summary["offset"] = offset;
  summary["length"] = ell;
  summary["beta0"] = beta0;
  summary["no_op"] = plan.maneuver.empty();
  summary["segments"] = plan.maneuver.size();
  summary["arc_sweep"] = plan.arc_sweep;
  summary["longitudinal_drift"] = plan.longitudinal_drift;
  if (!plan.maneuver.empty()) {
    auto traj = execute_maneuver(q0, plan.maneuver, {ell}, steps);
    const CarConfig& end = traj.back().q;
    double err = std::max(
        {std::abs(end.x - plan.predicted_endpoint.x),
         std::abs(end.y - plan.predicted_endpoint.y),
         std::abs(end.alpha - plan.predicted_endpoint.alpha),
         std::abs(end.beta - plan.predicted_endpoint.beta)});
    summary["endpoint"] = {end.x, end.y, end.alpha, end.beta};
    summary["endpoint_error"] = err;
    summary["constraint_residual"] = max_constraint_residual(traj, {ell});
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw DomainError("cannot open output file " + out_path);
      write_trajectory_csv(f, traj);
      summary["trajectory"] = out_path;
    }
  }
  std::cout << summary.dump(2) << "\n";
  return kExitPass;
}

int cmd_simulate(const std::string& init, const std::string& field,
                 double time, int steps, const std::string& out_path) {
  std::vector<double> q = parse_csv_doubles(init, 4);
  Maneuver maneuver = {{field == "steer" ? Segment::Field::kSteer
                                         : Segment::Field::kGas,
                        time}};
  auto traj = execute_maneuver({q[0], q[1], q[2], q[3]}, maneuver, {1.0},
                               steps);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw DomainError("cannot open output file " + out_path);
    write_trajectory_csv(f, traj);
  } else {
    write_trajectory_csv(std::cout, traj);
  }
  return kExitPass;
}

int cmd_circles(const std::vector<std::string>& specs, double tol) {
  std::vector<OrientedCircle> circles;
  for (const std::string& s : specs) {
    std::vector<double> v = parse_csv_doubles(s, 3);
    circles.push_back({v[0], v[1], v[2]});
  }
  nlohmann::ordered_json j;
  j["circles"] = nlohmann::ordered_json::array();
  for (const auto& c : circles) j["circles"].push_back({c.a, c.b, c.R});
  j["incident"] = nlohmann::ordered_json::array();
  j["interval"] = nlohmann::ordered_json::array();
  for (size_t i = 0; i < circles.size(); ++i) {
    nlohmann::ordered_json row_inc = nlohmann::ordered_json::array();
    nlohmann::ordered_json row_int = nlohmann::ordered_json::array();
    for (size_t k = 0; k < circles.size(); ++k) {
      row_inc.push_back(incident(circle_to_quadric(circles[i]),
                                 circle_to_quadric(circles[k]), tol));
      row_int.push_back(minkowski_interval(circles[i], circles[k]));
    }
    j["incident"].push_back(row_inc);
    j["interval"].push_back(row_int);
  }
  std::cout << j.dump(2) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Car kinematics and geometry workbench"};
  app.require_subcommand(1);

  // verify
  std::string suite = "all";
  VerifyOptions opt;
  bool serial = false, timing = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify
      ->add_option("suite", suite,
                   "engel|symmetries|algebra|sp2r|quadric|twistor|all")
      ->required()
      ->check(CLI::IsMember({"engel", "symmetries", "algebra", "sp2r",
                             "quadric", "twistor", "all"}));
  verify->add_option("--seed", opt.seed, "Random seed");
  verify->add_option("--samples", opt.samples, "Sample points per check");
  verify->add_option("--length", opt.ell, "Car length")->check(CLI::PositiveNumber);
  verify->add_flag("--serial", serial, "Disable parallel kernels");
  verify->add_flag("--timing", timing,
                   "Record wall time (breaks byte-identical output)");
  verify->add_flag("--break-generator", opt.break_generator,
                   "Test hook: perturb a symmetry generator")
      ->group("");  // hidden

  // invariants
  std::string ode_text;
  int points = 100;
  std::uint64_t inv_seed = 42;
  double inv_tol = 1e-10;
  auto* invariants =
      app.add_subcommand("invariants", "Invariants of y''' = F(x,y,p,q)");
  invariants->add_option("--ode", ode_text, "F as an expression in x,y,p,q")
      ->required();
  invariants->add_option("--points", points, "Number of sample points");
  invariants->add_option("--seed", inv_seed, "Random seed");
  invariants->add_option("--tol", inv_tol, "Pass tolerance");
  invariants->add_flag("--serial", serial, "Disable parallel kernels");
  invariants->add_flag("--timing", timing, "Record wall time");

  // park
  double offset = 0.0, length = 1.0, beta0 = M_PI / 4, advance = 0.0;
  bool compensate = false;
  int park_steps = 4000;
  std::string out_path;
  auto* park = app.add_subcommand("park", "Plan and execute a parallel park");
  park->add_option("--offset", offset, "Lateral offset")->required();
  park->add_option("--length", length, "Car length")->check(CLI::PositiveNumber);
  park->add_option("--beta0", beta0, "Steering lock angle");
  park->add_option("--advance", advance, "Extra straight travel");
  park->add_flag("--compensate", compensate, "Cancel longitudinal drift");
  park->add_option("--steps", park_steps, "Integration steps per segment");
  park->add_option("--out", out_path, "Trajectory CSV path");

  // simulate
  std::string init = "0,0,0,0", field = "gas";
  double sim_time = 1.0;
  int sim_steps = 1000;
  auto* simulate = app.add_subcommand("simulate", "Flow a single control");
  simulate->add_option("--init", init, "Initial x,y,alpha,beta");
  simulate->add_option("--field", field, "gas|steer")
      ->check(CLI::IsMember({"gas", "steer"}));
  simulate->add_option("--time", sim_time, "Flow time");
  simulate->add_option("--steps", sim_steps, "Integration steps");
  simulate->add_option("--out", out_path, "Trajectory CSV path");

  // circles
  std::vector<std::string> circle_specs;
  double circ_tol = 1e-9;
  auto* circles = app.add_subcommand("circles", "Oriented-circle incidence");
  circles->add_option("spec", circle_specs, "Circles as a,b,R")->required();
  circles->add_option("--tol", circ_tol, "Incidence tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      opt.parallel = !serial;
      return cmd_verify(suite, opt, timing);
    }
    if (*invariants)
      return cmd_invariants(ode_text, points, inv_seed, inv_tol, serial,
                            timing);
    if (*park)
      return cmd_park(offset, length, beta0, advance, compensate, out_path,
                      park_steps);
    if (*simulate)
      return cmd_simulate(init, field, sim_time, sim_steps, out_path);
    if (*circles) return cmd_circles(circle_specs, circ_tol);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (offset " << e.offset() << ")\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
