#include "carengel/jet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace carengel {
namespace {

struct Tables {
  std::vector<Exponents> exps;              // graded ordering
  std::array<int, 70> cumulative{};         // unused slots zero
  int index_lut[5][5][5][5];                // exponents -> position
  std::array<int, kMaxJetOrder + 2> count{};

  Tables() {
    for (auto& a : index_lut)
      for (auto& b : a)
        for (auto& c : b)
          for (auto& d : c) d = -1;
    for (int deg = 0; deg <= kMaxJetOrder; ++deg) {
      for (int i = 0; i <= deg; ++i)
        for (int j = 0; j <= deg - i; ++j)
          for (int k = 0; k <= deg - i - j; ++k) {
            int l = deg - i - j - k;
            Exponents e{i, j, k, l};
            index_lut[i][j][k][l] = static_cast<int>(exps.size());
            exps.push_back(e);
          }
      count[deg + 1] = static_cast<int>(exps.size());
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

int degree(const Exponents& e) { return e[0] + e[1] + e[2] + e[3]; }

double factorial(int n) {
  static const double f[] = {1, 1, 2, 6, 24};
  return f[n];
}

}  // namespace

int monomial_count(int order) { return tables().count[order + 1]; }

const Exponents& monomial_exponents(int index) { return tables().exps[index]; }

int monomial_index(const Exponents& e) {
  for (int v : e)
    if (v < 0 || v > kMaxJetOrder) return -1;
  if (degree(e) > kMaxJetOrder) return -1;
  return tables().index_lut[e[0]][e[1]][e[2]][e[3]];
}

Jet::Jet(const Point4& base, int order) : base_(base), order_(order) {
  coeffs_.assign(monomial_count(order), 0.0);
}

Jet Jet::constant(const Point4& base, int order, double value) {
  Jet j(base, order);
  j.coeffs_[0] = value;
  return j;
}

Jet Jet::variable(const Point4& base, int order, int var) {
  Jet j(base, order);
  j.coeffs_[0] = base[var];
  if (order >= 1) {
    Exponents e{0, 0, 0, 0};
    e[var] = 1;
    j.coeffs_[monomial_index(e)] = 1.0;
  }
  return j;
}

double Jet::coeff(const Exponents& e) const {
  int idx = monomial_index(e);
  if (idx < 0 || idx >= size()) return 0.0;
  return coeffs_[idx];
}

double Jet::partial(const Exponents& e) const {
  double c = coeff(e);
  double f = 1.0;
  for (int v : e) f *= factorial(v);
  return c * f;
}

Jet Jet::derivative(int var) const {
  Jet out(base_, std::max(0, order_ - 1));
  for (int i = 0; i < out.size(); ++i) {
    Exponents e = monomial_exponents(i);
    e[var] += 1;
    int src = monomial_index(e);
    if (src >= 0 && src < size()) out.coeffs_[i] = coeffs_[src] * e[var];
  }
  return out;
}

Jet Jet::truncated(int order) const {
  Jet out(base_, std::min(order, order_));
  std::copy(coeffs_.begin(), coeffs_.begin() + out.size(), out.coeffs_.begin());
  return out;
}

Jet Jet::operator-() const {
  Jet out = *this;
  for (double& c : out.coeffs_) c = -c;
  return out;
}

Jet& Jet::operator+=(const Jet& o) {
  if (o.order_ < order_) {
    Jet t = truncated(o.order_);
    *this = t;
  }
  for (int i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  if (o.order_ < order_) {
    Jet t = truncated(o.order_);
    *this = t;
  }
  for (int i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Jet& Jet::operator+=(double c) {
  coeffs_[0] += c;
  return *this;
}

Jet& Jet::operator-=(double c) {
  coeffs_[0] -= c;
  return *this;
}

Jet& Jet::operator*=(double c) {
  for (double& x : coeffs_) x *= c;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  int order = std::min(a.order(), b.order());
  Jet out(a.base(), order);
  const auto& t = tables();
  for (int i = 0; i < monomial_count(order); ++i) {
    double ca = a.coeffs_[i];
    if (ca == 0.0) continue;
    const Exponents& ea = t.exps[i];
    int rem = order - degree(ea);
    for (int j = 0; j < monomial_count(rem); ++j) {
      double cb = b.coeffs_[j];
      if (cb == 0.0) continue;
      const Exponents& eb = t.exps[j];
      int idx = t.index_lut[ea[0] + eb[0]][ea[1] + eb[1]][ea[2] + eb[2]]
                           [ea[3] + eb[3]];
      out.coeffs_[idx] += ca * cb;
    }
  }
  return out;
}

Jet Jet::analytic(const Jet& u, const std::vector<double>& series) {
  // Horner evaluation in the nilpotent part w = u - u0.
  Jet w = u;
  w.coeffs_[0] = 0.0;
  int n = static_cast<int>(series.size()) - 1;
  Jet acc = Jet::constant(u.base_, u.order_, series[n]);
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * w;
    acc += series[k];
  }
  return acc;
}

Jet Jet::reciprocal() const {
  double u0 = value();
  if (std::abs(u0) < kPoleGuard) throw PoleError("division by ~zero value");
  std::vector<double> s(order_ + 1);
  double p = 1.0 / u0;
  for (int n = 0; n <= order_; ++n) {
    s[n] = p;
    p *= -1.0 / u0;
  }
  return analytic(*this, s);
}

Jet operator/(const Jet& a, const Jet& b) { return a * b.reciprocal(); }

Jet Jet::pow_int(int n) const {
  if (n == 0) return Jet::constant(base_, order_, 1.0);
  if (n < 0) return pow_int(-n).reciprocal();
  Jet acc = *this;
  for (int i = 1; i < n; ++i) acc = acc * *this;
  return acc;
}

Jet sin(const Jet& u) {
  double c = std::cos(u.value()), s = std::sin(u.value());
  std::vector<double> ser(u.order() + 1);
  const double cyc[4] = {s, c, -s, -c};
  for (int n = 0; n <= u.order(); ++n) ser[n] = cyc[n % 4] / factorial(n);
  return Jet::analytic(u, ser);
}

Jet cos(const Jet& u) {
  double c = std::cos(u.value()), s = std::sin(u.value());
  std::vector<double> ser(u.order() + 1);
  const double cyc[4] = {c, -s, -c, s};
  for (int n = 0; n <= u.order(); ++n) ser[n] = cyc[n % 4] / factorial(n);
  return Jet::analytic(u, ser);
}

Jet tan(const Jet& u) { return sin(u) / cos(u); }

Jet sec(const Jet& u) {
  Jet c = cos(u);
  if (std::abs(c.value()) < kPoleGuard) throw PoleError("sec at cos ~ 0");
  return c.reciprocal();
}

Jet sqrt(const Jet& u) {
  double u0 = u.value();
  if (u0 <= 0.0) throw PoleError("sqrt at nonpositive value");
  double r = std::sqrt(u0);
  // ser[n] = binom(1/2, n) * u0^(1/2 - n)
  std::vector<double> ser(u.order() + 1);
  double binom = 1.0;
  double power = r;
  for (int n = 0; n <= u.order(); ++n) {
    ser[n] = binom * power;
    binom *= (0.5 - n) / (n + 1);
    power /= u0;
  }
  return Jet::analytic(u, ser);
}

}  // namespace carengel
