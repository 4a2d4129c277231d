#pragma once

// C^{n+1} <-> R^{2n+2}. The real ordering is (Re z_1..Re z_{n+1}, Im z_1..Im z_{n+1}),
// which matches the ambient convention; these two functions own that mapping.

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace sasaki {

using ComplexVector = Eigen::VectorXcd;

Eigen::VectorXd to_real(const ComplexVector& z);
ComplexVector to_complex(const Eigen::VectorXd& x);

// Columns E_1..E_{n+1}, orthonormal for the Hermitian product <E, z> = sum conj(E_j) z_j.
class UnitaryBasis {
 public:
  // Throws std::invalid_argument unless the Gram matrix is the identity within 1e-14.
  explicit UnitaryBasis(Eigen::MatrixXcd columns);
  static UnitaryBasis standard(int dim);
  // Haar-ish random basis from QR of a complex Gaussian matrix.
  static UnitaryBasis random(int dim, std::uint64_t seed);

  int dim() const { return static_cast<int>(columns_.cols()); }
  const Eigen::MatrixXcd& matrix() const { return columns_; }
  ComplexVector column(int k) const { return columns_.col(k); }
  // Coefficients of z in this basis.
  ComplexVector coordinates(const ComplexVector& z) const { return columns_.adjoint() * z; }
  double gram_error() const;

 private:
  Eigen::MatrixXcd columns_;
};

}  // namespace sasaki
