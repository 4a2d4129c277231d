#pragma once

// Truncated multivariate Taylor polynomials ("jets").
//
// A Jet stores every Taylor coefficient f_alpha / alpha! of a smooth function
// of up to kMaxVars variables, truncated at total degree `order`. Arithmetic
// and the elementary functions below are exact up to that degree, so mixed
// partial derivatives of analytic maps come out without finite differences.
//
// Monomials are laid out in graded order (all degree-0 terms, then degree 1,
// ...), so a jet of lower order is a prefix of the same layout. Binary
// operations on jets of different order truncate to the smaller order.

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace sasaki {

class Jet {
 public:
  static constexpr int kMaxVars = 4;
  static constexpr int kMaxOrder = 5;
  static constexpr std::size_t kMaxCoeffs = 126;  // C(kMaxVars + kMaxOrder, kMaxVars)

  Jet() : Jet(1, 0) {}
  Jet(int vars, int order);

  static Jet constant(double value, int vars, int order);
  // The coordinate function x_var evaluated at `value`.
  static Jet variable(double value, int var, int vars, int order);

  int vars() const { return vars_; }
  int order() const { return order_; }
  std::size_t size() const;

  double value() const { return c_[0]; }
  // Taylor coefficient of the monomial with the given exponents.
  double coeff(std::span<const int> exponents) const;
  // Mixed partial derivative d^|alpha| f / dx^alpha at the expansion point.
  double partial(std::span<const int> multi_index) const;

  // Jet of the partial derivative along `var`; its order drops by one.
  Jet derivative(int var) const;
  // Same function, truncated to a lower order.
  Jet truncated(int order) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator+=(double s) { c_[0] += s; return *this; }
  Jet& operator-=(double s) { c_[0] -= s; return *this; }
  Jet& operator*=(double s);
  Jet& operator/=(double s) { return *this *= (1.0 / s); }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator+(Jet a, double s) { return a += s; }
  friend Jet operator+(double s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, double s) { return a -= s; }
  friend Jet operator-(double s, const Jet& a) { return -a + s; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator/(Jet a, double s) { return a /= s; }
  Jet operator-() const { return Jet(*this) *= -1.0; }

  friend Jet sin(const Jet& x);
  friend Jet cos(const Jet& x);
  friend Jet exp(const Jet& x);
  friend Jet sqrt(const Jet& x);
  friend Jet reciprocal(const Jet& x);

 private:
  // g(x0 + h) = sum_k taylor[k] h^k where h = x - x0.
  Jet compose(std::span<const double> taylor) const;

  int vars_;
  int order_;
  std::array<double, kMaxCoeffs> c_{};
};

using JetVector = std::vector<Jet>;

// Parameter jets seeded at point p: component i is the variable x_i.
std::vector<Jet> seed_point(const Eigen::VectorXd& p, int order);

Jet dot(const JetVector& a, const JetVector& b);
JetVector operator+(const JetVector& a, const JetVector& b);
JetVector operator-(const JetVector& a, const JetVector& b);
JetVector operator*(const Jet& s, const JetVector& v);
JetVector operator*(double s, const JetVector& v);
JetVector derivative(const JetVector& v, int var);
Eigen::VectorXd values(const JetVector& v);
// Componentwise mixed partial derivative.
Eigen::VectorXd partial(const JetVector& v, std::span<const int> multi_index);

}  // namespace sasaki
