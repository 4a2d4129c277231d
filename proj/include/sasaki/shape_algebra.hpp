#pragma once

// Shape operators of a flat integral C-parallel 3-fold in an adapted basis
// {X_1, X_2, X_3}: A_i = A_{phi X_i}, with A_xi = 0.
//
//   A_1 = diag(l1, l2, l3)
//   A_2 = [[0, l2, 0], [l2, alpha, beta], [0, beta, gamma]]
//   A_3 = [[0, 0, l3], [0, beta, gamma], [l3, gamma, delta]]
//
// Proper biharmonicity reduces to the eigen-equation (sum A_i^2) t = k t for
// the trace vector t = (tr A_1, tr A_2, tr A_3).

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace sasaki {

struct AdaptedShapeOperators {
  double lambda1 = 0.0, lambda2 = 0.0, lambda3 = 0.0;
  double alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0;
};

using ShapeMatrices = std::array<Eigen::Matrix3d, 3>;

ShapeMatrices build_matrices(const AdaptedShapeOperators& p);

enum class BasisCase {
  distinct,    // l2 != l3
  equal_zero,  // l2 = l3, alpha = beta = gamma = delta = 0
  equal_max,   // l2 = l3, alpha > 0, beta = 0, alpha >= 2 gamma
};

// l1 > 0, l1 >= |alpha| always; l2 > l3 (distinct) or the case's extra relations.
bool basis_constraints(const AdaptedShapeOperators& p, BasisCase which);

// k = (c(n+3) + 3n - 7) / 4.
double biharmonic_eigenvalue(double c, int n = 3);

struct EigenResidual {
  Eigen::Vector3d r;  // (sum A_i^2) t - k t
  Eigen::Vector3d t;
  double k = 0.0;
  // |r| / max(1, |t|) < 1e-10
  bool biharmonic() const;
  bool proper() const { return biharmonic() && t.norm() > 1e-10; }
};

// Throws std::domain_error when k <= 0: no proper solution exists there,
// since sum A_i^2 is positive semidefinite.
EigenResidual eigen_criterion_residual(const AdaptedShapeOperators& p, double c, int n = 3,
                                       std::optional<double> k_override = std::nullopt);

// Any n: G t - k t with G_ij = tr(A_i A_j), t_i = tr A_i. Throws std::domain_error when k <= 0.
struct GramResidual {
  Eigen::VectorXd r, t;
  bool biharmonic() const { return r.norm() / std::max(1.0, t.norm()) < 1e-10; }
};
GramResidual gram_criterion_residual(const std::vector<Eigen::MatrixXd>& shape_ops, double k);

// (sum A_i^2) t - 6 t, the (-4)-biharmonic condition in S^7(1).
Eigen::Vector3d minus4_criterion_residual(const AdaptedShapeOperators& p);

enum class CriterionMode { biharmonic, minus4 };

// The three scalar equations written out in the parameters.
Eigen::Vector3d expanded_system_residual(const AdaptedShapeOperators& p, double c,
                                         CriterionMode mode = CriterionMode::biharmonic);

}  // namespace sasaki
