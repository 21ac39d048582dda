#include "carengel/sp2r.hpp"

#include <algorithm>
#include <set>

#include "carengel/errors.hpp"

namespace carengel::sp2r {
namespace {

// Generic element E(a):
//   [  a5   a7   a9  2a10 ]
//   [ -a4   a6   a8   a9  ]
//   [  a2   a3  -a6  -a7  ]
//   [ -2a1  a2   a4  -a5  ]
IntMat4 generic(const std::array<long long, 10>& a) {
  IntMat4 e;
  e << a[4], a[6], a[8], 2 * a[9],
      -a[3], a[5], a[7], a[8],
      a[1], a[2], -a[5], -a[6],
      -2 * a[0], a[1], a[3], -a[4];
  return e;
}

// Reads the coefficient vector back off a matrix in the span of the
// basis; throws if the matrix is not in the span.
std::array<long long, 10> coefficients(const IntMat4& c) {
  std::array<long long, 10> a{};
  if (c(0, 3) % 2 != 0 || c(3, 0) % 2 != 0)
    throw Error("matrix is not in the sp(2,R) basis span");
  a[4] = c(0, 0);
  a[6] = c(0, 1);
  a[8] = c(0, 2);
  a[9] = c(0, 3) / 2;
  a[3] = -c(1, 0);
  a[5] = c(1, 1);
  a[7] = c(1, 2);
  a[1] = c(2, 0);
  a[2] = c(2, 1);
  a[0] = -c(3, 0) / 2;
  if (generic(a) != c) throw Error("matrix is not in the sp(2,R) basis span");
  return a;
}

// c[K][I][J] with [E_{I+1}, E_{J+1}] = sum_K c[K][I][J] E_{K+1}.
struct Tables {
  std::array<IntMat4, 10> E;
  long long c[10][10][10] = {};
  IntMat10 killing;

  Tables() {
    for (int i = 0; i < 10; ++i) {
      std::array<long long, 10> a{};
      a[i] = 1;
      E[i] = generic(a);
    }
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) {
        IntMat4 comm = E[i] * E[j] - E[j] * E[i];
        auto coef = coefficients(comm);
        for (int k = 0; k < 10; ++k) c[k][i][j] = coef[k];
      }
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) {
        long long sum = 0;
        for (int k = 0; k < 10; ++k)
          for (int l = 0; l < 10; ++l) sum += c[k][i][l] * c[l][j][k];
        killing(i, j) = sum;
      }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

void check_index(int i) {
  if (i < 1 || i > 10) throw DomainError("basis index out of range 1..10");
}

// Support of the span of brackets [E_i, E_j], i in a, j in b.
std::set<int> bracket_support(const std::set<int>& a, const std::set<int>& b) {
  const Tables& t = tables();
  std::set<int> out;
  for (int i : a)
    for (int j : b)
      for (int k = 0; k < 10; ++k)
        if (t.c[k][i - 1][j - 1] != 0) out.insert(k + 1);
  return out;
}

std::set<int> to_set(const Subalgebra& s) {
  std::set<int> out;
  for (int i : s) {
    check_index(i);
    out.insert(i);
  }
  return out;
}

bool subset(const std::set<int>& a, const std::set<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

IntMat4 omega() {
  IntMat4 w = IntMat4::Zero();
  w(0, 3) = 1;
  w(1, 2) = 1;
  w(2, 1) = -1;
  w(3, 0) = -1;
  return w;
}

const std::array<IntMat4, 10>& basis() { return tables().E; }

std::array<long long, 10> commutator(int I, int J) {
  check_index(I);
  check_index(J);
  const Tables& t = tables();
  std::array<long long, 10> out{};
  for (int k = 0; k < 10; ++k) out[k] = t.c[k][I - 1][J - 1];
  return out;
}

const std::array<int, 10>& grades() {
  static const std::array<int, 10> g = {-3, -2, -1, -1, 0, 0, 1, 1, 2, 3};
  return g;
}

GradationReport verify_gradation() {
  const Tables& t = tables();
  const auto& g = grades();
  GradationReport rep;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      for (int k = 0; k < 10; ++k)
        if (t.c[k][i][j] != 0 && g[k] != g[i] + g[j]) {
          rep.ok = false;
          rep.violations.push_back({i + 1, j + 1, k + 1});
        }
  return rep;
}

const IntMat10& killing_matrix() { return tables().killing; }

long long jacobi_max_violation() {
  const Tables& t = tables();
  long long worst = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      for (int l = j + 1; l < 10; ++l)
        for (int k = 0; k < 10; ++k) {
          long long sum = 0;
          for (int m = 0; m < 10; ++m)
            sum += t.c[m][i][j] * t.c[k][m][l] + t.c[m][j][l] * t.c[k][m][i] +
                   t.c[m][l][i] * t.c[k][m][j];
          worst = std::max(worst, std::abs(sum));
        }
  return worst;
}

bool is_closed(const Subalgebra& sub) {
  std::set<int> s = to_set(sub);
  return subset(bracket_support(s, s), s);
}

Subalgebra killing_orthogonal(const Subalgebra& sub) {
  std::set<int> s = to_set(sub);
  const IntMat10& k = killing_matrix();
  Subalgebra out;
  for (int j = 1; j <= 10; ++j) {
    bool orth = true;
    for (int i : s)
      if (k(i - 1, j - 1) != 0) {
        orth = false;
        break;
      }
    if (orth) out.push_back(j);
  }
  // K is nondegenerate, so the complement of an r-dimensional span has
  // dimension 10 - r; if the complement were not a basis span this count
  // would come up short.
  if (static_cast<int>(out.size()) != 10 - static_cast<int>(s.size()))
    throw Error("Killing orthogonal is not spanned by basis elements");
  return out;
}

std::optional<int> nilpotency_degree(const Subalgebra& sub) {
  std::set<int> s = to_set(sub);
  if (!subset(bracket_support(s, s), s))
    throw DomainError("index set is not closed under the bracket");
  std::set<int> term = s;
  int step = 0;
  while (!term.empty()) {
    std::set<int> next = bracket_support(s, term);
    ++step;
    if (next == term) return std::nullopt;  // series stabilized, nonzero
    term = std::move(next);
  }
  return step;
}

bool is_parabolic(const Subalgebra& sub) {
  Subalgebra orth = killing_orthogonal(sub);
  if (orth.empty()) return true;
  if (!is_closed(orth)) return false;
  return nilpotency_degree(orth).has_value();
}

const Subalgebra& p1() {
  static const Subalgebra s = {3, 5, 6, 7, 8, 9, 10};
  return s;
}
const Subalgebra& p2() {
  static const Subalgebra s = {4, 5, 6, 7, 8, 9, 10};
  return s;
}
const Subalgebra& p12() {
  static const Subalgebra s = {5, 6, 7, 8, 9, 10};
  return s;
}
const Subalgebra& n1() {
  static const Subalgebra s = {7, 9, 10};
  return s;
}
const Subalgebra& n2() {
  static const Subalgebra s = {8, 9, 10};
  return s;
}
const Subalgebra& n12() {
  static const Subalgebra s = {7, 8, 9, 10};
  return s;
}
const Subalgebra& m() {
  static const Subalgebra s = {1, 2, 3, 4};
  return s;
}
const Subalgebra& q() {
  static const Subalgebra s = {1, 2, 4};
  return s;
}
const Subalgebra& p() {
  static const Subalgebra s = {1, 2, 3};
  return s;
}

DimensionReport subalgebra_dimensions() {
  DimensionReport r;
  r.dim_p1 = static_cast<int>(p1().size());
  r.dim_p2 = static_cast<int>(p2().size());
  r.dim_p12 = static_cast<int>(p12().size());
  r.dim_n1 = static_cast<int>(n1().size());
  r.dim_n2 = static_cast<int>(n2().size());
  r.dim_n12 = static_cast<int>(n12().size());
  r.dim_m = static_cast<int>(m().size());
  r.dim_q = static_cast<int>(q().size());
  r.dim_p = static_cast<int>(p().size());
  Subalgebra inter;
  std::set_intersection(p1().begin(), p1().end(), p2().begin(), p2().end(),
                        std::back_inserter(inter));
  r.p12_is_intersection = inter == p12();
  return r;
}

}  // namespace carengel::sp2r
