#ifndef CARENGEL_JET_HPP
#define CARENGEL_JET_HPP

#include <array>
#include <vector>

#include "carengel/errors.hpp"

namespace carengel {

inline constexpr int kNumVars = 4;
inline constexpr int kMaxJetOrder = 4;

// Guard for reciprocals and trig poles.
inline constexpr double kPoleGuard = 1e-12;

using Point4 = std::array<double, 4>;
using Exponents = std::array<int, 4>;

// Number of monomials in 4 variables of total degree <= order.
int monomial_count(int order);

// Exponent tuple of the i-th monomial (graded ordering, constant first).
const Exponents& monomial_exponents(int index);

// Position of a monomial in the graded ordering, or -1 if degree > kMaxJetOrder.
int monomial_index(const Exponents& e);

// Truncated multivariate Taylor expansion of a scalar field at a base
// point in a 4-coordinate chart. Coefficients are Taylor coefficients,
// i.e. coeff(e) = (1/e!) * d^e f(base). Stored dense over the graded
// monomial basis.
class Jet {
 public:
  Jet(const Point4& base, int order);

  static Jet constant(const Point4& base, int order, double value);
  static Jet variable(const Point4& base, int order, int var);

  int order() const { return order_; }
  const Point4& base() const { return base_; }
  double value() const { return coeffs_[0]; }

  double coeff(int index) const { return coeffs_[index]; }
  double coeff(const Exponents& e) const;
  double& coeff_ref(int index) { return coeffs_[index]; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  // True partial derivative d^e f(base) = e! * coeff(e).
  double partial(const Exponents& e) const;

  // Jet of df/dx_var, one order lower.
  Jet derivative(int var) const;

  // Copy truncated to a (not larger) order.
  Jet truncated(int order) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator+=(double c);
  Jet& operator-=(double c);
  Jet& operator*=(double c);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, double c) { return a += c; }
  friend Jet operator+(double c, Jet a) { return a += c; }
  friend Jet operator-(Jet a, double c) { return a -= c; }
  friend Jet operator*(Jet a, double c) { return a *= c; }
  friend Jet operator*(double c, Jet a) { return a *= c; }

  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);

  // f(u) for analytic f, given series[n] = f^(n)(u.value())/n!.
  static Jet analytic(const Jet& u, const std::vector<double>& series);

  Jet reciprocal() const;
  Jet pow_int(int n) const;

 private:
  Point4 base_;
  int order_;
  std::vector<double> coeffs_;
};

Jet sin(const Jet& u);
Jet cos(const Jet& u);
Jet tan(const Jet& u);
Jet sec(const Jet& u);
Jet sqrt(const Jet& u);

}  // namespace carengel

#endif
