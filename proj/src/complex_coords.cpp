#include "sasaki/complex_coords.hpp"

#include <random>
#include <stdexcept>

namespace sasaki {

Eigen::VectorXd to_real(const ComplexVector& z) {
  const Eigen::Index n = z.size();
  Eigen::VectorXd x(2 * n);
  x.head(n) = z.real();
  x.tail(n) = z.imag();
  return x;
}

ComplexVector to_complex(const Eigen::VectorXd& x) {
  if (x.size() % 2 != 0) throw std::invalid_argument("to_complex: odd length");
  const Eigen::Index n = x.size() / 2;
  ComplexVector z(n);
  for (Eigen::Index k = 0; k < n; ++k) z[k] = {x[k], x[n + k]};
  return z;
}

UnitaryBasis::UnitaryBasis(Eigen::MatrixXcd columns) : columns_(std::move(columns)) {
  if (columns_.rows() != columns_.cols() || columns_.rows() == 0) {
    throw std::invalid_argument("UnitaryBasis: matrix must be square");
  }
  if (gram_error() > 1e-14) throw std::invalid_argument("UnitaryBasis: columns are not orthonormal");
}

double UnitaryBasis::gram_error() const {
  const Eigen::MatrixXcd gram = columns_.adjoint() * columns_;
  return (gram - Eigen::MatrixXcd::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

UnitaryBasis UnitaryBasis::standard(int dim) { return UnitaryBasis(Eigen::MatrixXcd::Identity(dim, dim)); }

UnitaryBasis UnitaryBasis::random(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = {normal(rng), normal(rng)};
  // Modified Gram-Schmidt twice keeps the Gram error at the 1e-16 level.
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < j; ++k) m.col(j) -= m.col(k).dot(m.col(j)) * m.col(k);
      m.col(j).normalize();
    }
  }
  return UnitaryBasis(std::move(m));
}

}  // namespace sasaki
