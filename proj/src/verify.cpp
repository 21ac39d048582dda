#include "carengel/verify.hpp"

#include <cmath>
#include <cstdio>

#include "carengel/lie_sphere.hpp"
#include "carengel/sp2r.hpp"
#include "carengel/sweeps.hpp"
#include "carengel/twistor.hpp"

namespace carengel {
namespace {

std::string check_name(const std::string& prefix, int i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%02d", prefix.c_str(), i);
  return buf;
}

void run_engel(Report& rep, std::mt19937_64& rng, const VerifyOptions& opt) {
  std::vector<Point4> samples = random_configs(rng, opt.samples);
  SplitDistribution split = car_split({opt.ell});
  auto ranks = growth_vector_sweep(split, samples, opt.parallel);
  int bad = 0;
  for (const auto& r : ranks)
    if (r != std::array<int, 3>{2, 3, 4}) ++bad;
  rep.add("engel.growth_vector", bad, 0.0);

  double worst = 0.0;
  for (double ell : {0.5, 1.0, 2.0}) {
    CarFrame f = car_fields({ell});
    for (const Point4& p : samples) {
      Eigen::Matrix4d m;
      m.col(0) = f.X1.eval(p);
      m.col(1) = f.X2.eval(p);
      m.col(2) = f.X3.eval(p);
      m.col(3) = f.X4.eval(p);
      worst = std::max(worst,
                       std::abs(m.determinant() - ell * ell) / (ell * ell));
    }
  }
  rep.add("engel.frame_volume", worst, 1e-10);
}

void run_symmetries(Report& rep, std::mt19937_64& rng,
                    const VerifyOptions& opt) {
  std::vector<Point4> samples = random_configs(rng, opt.samples);
  GeneratorSet gen = generators({opt.ell});
  if (opt.break_generator)
    gen.S[0] = VectorField::parse(car_chart(), {"1", "0", "0.1*x", "0"});
  auto residuals = symmetry_residual_sweep(gen, samples, opt.parallel);
  for (int i = 0; i < 10; ++i)
    rep.add(check_name("symmetries.S", i + 1), residuals[i], 1e-9);
}

void run_algebra(Report& rep, std::mt19937_64& rng,
                 const VerifyOptions& opt) {
  std::vector<Point4> samples = random_configs(rng, std::max(30, opt.samples));
  GeneratorSet gen = generators({opt.ell});
  try {
    StructureConstants sc = extract_structure_constants(gen, samples, 1e-8);
    rep.add("algebra.closure_residual", sc.residual, 1e-8);
    rep.add("algebra.jacobi", jacobi_residual(sc), 1e-8);
    KillingForm kf = killing_form(sc);
    int sig_bad = std::abs(kf.n_plus - 6) + std::abs(kf.n_minus - 4) +
                  std::abs(kf.n_zero);
    rep.add("algebra.killing_signature", sig_bad, 0.0);
    rep.add("algebra.perfect", 10 - derived_algebra_rank(sc), 0.0);
  } catch (const Error&) {
    rep.add_error("algebra.closure_residual", 1e-8);
  }
}

void run_sp2r(Report& rep) {
  using namespace sp2r;
  rep.add("sp2r.gradation",
          double(verify_gradation().violations.size()), 0.0);
  rep.add("sp2r.jacobi", double(jacobi_max_violation()), 0.0);

  // Zero pattern, signs, and magnitude ratios of K up to one global
  // positive factor: off-diagonal pairs 4:2:1:2, diagonals twice the
  // unit (they appear once, not twice, in a symmetric-product
  // expansion, where the ratio pattern reads 4:2:1:2:1:1).
  const IntMat10& k = killing_matrix();
  long long unit = k(2, 7);  // K_{3,8}
  long long expected[10][10] = {};
  expected[0][9] = expected[9][0] = -4 * unit;
  expected[1][8] = expected[8][1] = 2 * unit;
  expected[2][7] = expected[7][2] = unit;
  expected[3][6] = expected[6][3] = -2 * unit;
  expected[4][4] = 2 * unit;
  expected[5][5] = 2 * unit;
  double pattern_bad = unit > 0 ? 0.0 : 1.0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      if (k(i, j) != expected[i][j]) pattern_bad += 1.0;
  rep.add("sp2r.killing_pattern", pattern_bad, 0.0);

  Eigen::Matrix<double, 10, 10> kd = k.cast<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 10, 10>> es(kd);
  int np = 0, nm = 0;
  for (int i = 0; i < 10; ++i) {
    if (es.eigenvalues()(i) > 1e-8) ++np;
    if (es.eigenvalues()(i) < -1e-8) ++nm;
  }
  rep.add("sp2r.killing_signature",
          std::abs(np - 6) + std::abs(nm - 4), 0.0);

  int bad = 0;
  if (killing_orthogonal(p1()) != n1()) ++bad;
  if (killing_orthogonal(p2()) != n2()) ++bad;
  if (killing_orthogonal(p12()) != n12()) ++bad;
  if (!is_parabolic(p1()) || !is_parabolic(p2()) || !is_parabolic(p12()))
    ++bad;
  rep.add("sp2r.parabolics", bad, 0.0);

  bad = 0;
  if (nilpotency_degree(n1()) != 2) ++bad;
  if (nilpotency_degree(n2()) != 1) ++bad;  // abelian
  if (!nilpotency_degree(n12()).has_value()) ++bad;
  if (nilpotency_degree(m()) != 3) ++bad;
  if (!nilpotency_degree(q()).has_value()) ++bad;
  if (!nilpotency_degree(p()).has_value()) ++bad;
  rep.add("sp2r.nilpotent_subalgebras", bad, 0.0);
}

void run_quadric(Report& rep, std::mt19937_64& rng,
                 const VerifyOptions& opt) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    OrientedCircle c1{u(rng), u(rng), u(rng)};
    OrientedCircle c2{u(rng), u(rng), u(rng)};
    double b = polar_form(circle_to_quadric(c1), circle_to_quadric(c2));
    worst = std::max(worst, std::abs(2.0 * b + minkowski_interval(c1, c2)));
  }
  rep.add("quadric.incidence_null_equivalence", worst, 1e-12);

  int bad = 0;
  QuadricPoint unit = circle_to_quadric({0, 0, 1});
  if (!incident(unit, circle_to_quadric({2, 0, -1}), 1e-12)) ++bad;
  if (incident(unit, circle_to_quadric({2, 0, 1}), 1e-12)) ++bad;
  if (!incident(unit, circle_to_quadric({1, 0, 0}), 1e-12)) ++bad;
  rep.add("quadric.tangency_cases", bad, 0.0);

  bad = 0;
  for (int i = 0; i < opt.samples; ++i) {
    OrientedCircle c{u(rng), u(rng), u(rng)};
    CycleKind expect =
        std::abs(c.R) <= 1e-6 ? CycleKind::kPoint : CycleKind::kCircle;
    if (std::abs(c.R) <= 1e-6) c.R = 0.0;
    if (classify(circle_to_quadric(c)) != expect) ++bad;
    QuadricPoint line = solution_to_cycle(u(rng), u(rng), u(rng), 0.0);
    if (classify(line) != CycleKind::kLine) ++bad;
  }
  rep.add("quadric.classify", bad, 0.0);
}

twistor::Matrix4d random_symplectic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  std::array<double, 10> a;
  for (double& v : a) v = u(rng);
  return twistor::symplectic_exp(twistor::sp_element(a));
}

void run_twistor(Report& rep, std::mt19937_64& rng,
                 const VerifyOptions& opt) {
  using namespace twistor;
  std::uniform_real_distribution<double> u(-2.0, 2.0);

  double worst = 0.0;
  for (int i = 0; i < opt.samples; ++i) {
    QuadricPoint v{u(rng), u(rng), u(rng), u(rng), u(rng)};
    worst = std::max(worst,
                     std::abs(wedge_square_coeff(omega_perp_embed(v)) +
                              2.0 * v.quadric_value()));
  }
  rep.add("twistor.wedge_square", worst, 1e-12);

  Eigen::Matrix<double, 5, 5> mi =
      induced_quadric_action(-Matrix4d::Identity());
  rep.add("twistor.double_cover",
          (mi - Eigen::Matrix<double, 5, 5>::Identity()).cwiseAbs().maxCoeff(),
          1e-12);

  double hom = 0.0, qpres = 0.0;
  Eigen::Matrix<double, 5, 5> g = quadric_gram();
  for (int i = 0; i < 50; ++i) {
    Matrix4d a = random_symplectic(rng), b = random_symplectic(rng);
    auto ma = induced_quadric_action(a), mb = induced_quadric_action(b);
    auto mab = induced_quadric_action(Matrix4d(a * b));
    hom = std::max(hom, (mab - ma * mb).cwiseAbs().maxCoeff());
    qpres = std::max(
        qpres,
        (ma.transpose() * g * ma - g).cwiseAbs().maxCoeff());
  }
  rep.add("twistor.homomorphism", hom, 1e-10);
  rep.add("twistor.quadric_preserved", qpres, 1e-10);

  LagrangianPlane plane = plane_from_params(0, 0, 0);
  Vector4d line(0, 0, 0, 1);
  int bad = 0;
  if (stabilizer_dimension_plane(plane) != 7) ++bad;
  if (stabilizer_dimension_line(line) != 7) ++bad;
  if (stabilizer_dimension_pair(line, plane) != 6) ++bad;
  rep.add("twistor.stabilizer_dims", bad, 0.0);
}

}  // namespace

std::vector<Point4> random_configs(std::mt19937_64& rng, int n,
                                   double coord_range, double angle_range) {
  std::uniform_real_distribution<double> uc(-coord_range, coord_range);
  std::uniform_real_distribution<double> ua(-angle_range, angle_range);
  std::vector<Point4> out(n);
  for (auto& p : out) p = {uc(rng), uc(rng), ua(rng), ua(rng)};
  return out;
}

std::vector<JetPoint> random_jet_points(std::mt19937_64& rng, int n,
                                        double range) {
  std::uniform_real_distribution<double> u(-range, range);
  std::vector<JetPoint> out(n);
  for (auto& p : out) p = {u(rng), u(rng), u(rng), u(rng)};
  return out;
}

Report run_suite(const std::string& suite, const VerifyOptions& opt) {
  Report rep;
  rep.suite = suite;
  rep.seed = opt.seed;
  std::mt19937_64 rng(opt.seed);
  if (suite == "engel")
    run_engel(rep, rng, opt);
  else if (suite == "symmetries")
    run_symmetries(rep, rng, opt);
  else if (suite == "algebra")
    run_algebra(rep, rng, opt);
  else if (suite == "sp2r")
    run_sp2r(rep);
  else if (suite == "quadric")
    run_quadric(rep, rng, opt);
  else if (suite == "twistor")
    run_twistor(rep, rng, opt);
  else if (suite == "all") {
    run_engel(rep, rng, opt);
    run_symmetries(rep, rng, opt);
    run_algebra(rep, rng, opt);
    run_sp2r(rep);
    run_quadric(rep, rng, opt);
    run_twistor(rep, rng, opt);
  } else {
    throw DomainError("unknown suite: " + suite);
  }
  return rep;
}

}  // namespace carengel
