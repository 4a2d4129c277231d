#include "sasaki/shape_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace sasaki {

ShapeMatrices build_matrices(const AdaptedShapeOperators& p) {
  ShapeMatrices a;
  a[0] << p.lambda1, 0, 0, 0, p.lambda2, 0, 0, 0, p.lambda3;
  a[1] << 0, p.lambda2, 0, p.lambda2, p.alpha, p.beta, 0, p.beta, p.gamma;
  a[2] << 0, 0, p.lambda3, 0, p.beta, p.gamma, p.lambda3, p.gamma, p.delta;
  return a;
}

bool basis_constraints(const AdaptedShapeOperators& p, BasisCase which) {
  if (!(p.lambda1 > 0.0) || p.lambda1 < std::abs(p.alpha)) return false;
  switch (which) {
    case BasisCase::distinct:
      return p.lambda2 > p.lambda3;
    case BasisCase::equal_zero:
      return p.lambda2 == p.lambda3 && p.alpha == 0.0 && p.beta == 0.0 && p.gamma == 0.0 && p.delta == 0.0;
    case BasisCase::equal_max:
      return p.lambda2 == p.lambda3 && p.alpha > 0.0 && p.beta == 0.0 && p.alpha >= 2.0 * p.gamma;
  }
  return false;
}

double biharmonic_eigenvalue(double c, int n) { return (c * (n + 3) + 3 * n - 7) / 4.0; }

bool EigenResidual::biharmonic() const { return r.norm() / std::max(1.0, t.norm()) < 1e-10; }

namespace {

EigenResidual residual_with(const AdaptedShapeOperators& p, double k) {
  const ShapeMatrices a = build_matrices(p);
  EigenResidual out;
  out.k = k;
  out.t << a[0].trace(), a[1].trace(), a[2].trace();
  const Eigen::Matrix3d s = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
  out.r = s * out.t - k * out.t;
  return out;
}

}  // namespace

EigenResidual eigen_criterion_residual(const AdaptedShapeOperators& p, double c, int n,
                                       std::optional<double> k_override) {
  const double k = k_override ? *k_override : biharmonic_eigenvalue(c, n);
  if (!(k > 0.0)) throw std::domain_error("eigen criterion: k <= 0, no proper-biharmonic solution");
  return residual_with(p, k);
}

GramResidual gram_criterion_residual(const std::vector<Eigen::MatrixXd>& a, double k) {
  if (!(k > 0.0)) throw std::domain_error("eigen criterion: k <= 0, no proper-biharmonic solution");
  const Eigen::Index n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd g(n, n);
  GramResidual out;
  out.t.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.t[i] = a[i].trace();
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = (a[i] * a[j]).trace();
  }
  out.r = g * out.t - k * out.t;
  return out;
}

Eigen::Vector3d minus4_criterion_residual(const AdaptedShapeOperators& p) { return residual_with(p, 6.0).r; }

Eigen::Vector3d expanded_system_residual(const AdaptedShapeOperators& p, double c, CriterionMode mode) {
  const double l1 = p.lambda1, l2 = p.lambda2, l3 = p.lambda3;
  const double a = p.alpha, b = p.beta, g = p.gamma, d = p.delta;
  const double k = mode == CriterionMode::minus4 ? 6.0 : (3.0 * c + 1.0) / 2.0;
  const double s1 = l1 + l2 + l3, s2 = a + g, s3 = b + d;
  Eigen::Vector3d e;
  e[0] = s1 * (l1 * l1 + l2 * l2 + l3 * l3 - k) + s2 * (a * l2 + g * l3) + s3 * (b * l2 + d * l3);
  e[1] = s1 * (a * l2 + g * l3) + s2 * (2 * l2 * l2 + a * a + 3 * b * b + g * g + b * d - k) + g * s3 * s3;
  e[2] = s1 * (b * l2 + d * l3) + b * s2 * s2 + s3 * (2 * l3 * l3 + d * d + 3 * g * g + b * b + a * g - k);
  return e;
}

}  // namespace sasaki
