#pragma once

// Real univariate polynomials and real-root isolation by Sturm sequences.

#include <stdexcept>
#include <vector>

namespace sasaki {

struct RootIsolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Polynomial {
 public:
  Polynomial() = default;
  // Ascending coefficients: c[0] + c[1] x + ...
  explicit Polynomial(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  const std::vector<double>& coeffs() const { return c_; }
  double leading() const { return c_.back(); }

  double operator()(double x) const;
  Polynomial derivative() const;
  double max_abs_coeff() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, const Polynomial& a);

  // Quotient and remainder; remainder coefficients below rel_tol * scale are dropped.
  static std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b, double rel_tol = 0.0);

 private:
  void trim(double abs_tol = 0.0);
  std::vector<double> c_;
};

// Monic gcd computed with a remainder threshold, so that clusters of nearly
// equal roots produced by rounding are recognized as multiple roots.
Polynomial approximate_gcd(const Polynomial& a, const Polynomial& b, double rel_tol = 1e-9);
Polynomial square_free_part(const Polynomial& p, double rel_tol = 1e-9);

std::vector<Polynomial> sturm_sequence(const Polynomial& p);
// Number of distinct real roots in (lo, hi].
int sturm_count(const std::vector<Polynomial>& seq, double lo, double hi);

struct RealRoot {
  double value = 0.0;
  double bracket_lo = 0.0, bracket_hi = 0.0;
  bool multiple = false;  // root of p of multiplicity > 1
};

// All distinct real roots of p, ascending. Each is isolated by Sturm counts,
// bisected to width `width`, and Newton-polished on p (or on the square-free
// part at multiple roots). Throws RootIsolationError if two roots cannot be
// separated at that width.
std::vector<RealRoot> real_roots(const Polynomial& p, double width = 1e-14);

}  // namespace sasaki
