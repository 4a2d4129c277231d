#include <random>

#include "doctest.h"
#include "sasaki/shape_algebra.hpp"

using namespace sasaki;

namespace {

AdaptedShapeOperators random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  AdaptedShapeOperators p;
  p.lambda2 = u(rng);
  p.lambda3 = u(rng);
  p.alpha = u(rng);
  p.gamma = u(rng);
  p.beta = u(rng);
  p.delta = u(rng);
  p.lambda1 = u(rng);
  return p;
}

}  // namespace

TEST_CASE("expanded system equals the eigen-criterion at 1000 random draws") {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const AdaptedShapeOperators p = random_params(rng);
    for (double c : {-0.2, 1.0, 5.0 / 9.0, 3.0}) {
      const Eigen::Vector3d e = expanded_system_residual(p, c);
      const EigenResidual r = eigen_criterion_residual(p, c);
      worst = std::max(worst, (e - r.r).norm() / std::max(1.0, r.t.norm()));
    }
    const Eigen::Vector3d m = expanded_system_residual(p, 1.0, CriterionMode::minus4);
    worst = std::max(worst, (m - minus4_criterion_residual(p)).norm());
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("Gram form agrees with the matrix form") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const AdaptedShapeOperators p = random_params(rng);
    const ShapeMatrices A = build_matrices(p);
    const GramResidual g = gram_criterion_residual({A[0], A[1], A[2]}, biharmonic_eigenvalue(1.0));
    CHECK((g.r - eigen_criterion_residual(p, 1.0).r).norm() < 1e-12);
  }
}

TEST_CASE("shape matrices are totally symmetric") {
  std::mt19937_64 rng(9);
  const ShapeMatrices A = build_matrices(random_params(rng));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        CHECK(A[i](j, k) == A[i](k, j));
        CHECK(A[i](j, k) == A[j](i, k));
      }
}

TEST_CASE("the eigenvalue k and its positivity guard") {
  CHECK(biharmonic_eigenvalue(1.0) == doctest::Approx(2.0));
  CHECK(biharmonic_eigenvalue(1.0, 2) == doctest::Approx(1.0));
  CHECK(biharmonic_eigenvalue(-1.0 / 3.0) == doctest::Approx(0.0));
  AdaptedShapeOperators p;
  p.lambda1 = 1.0;
  CHECK_THROWS_AS(eigen_criterion_residual(p, -1.0 / 3.0), std::domain_error);
  CHECK_THROWS_AS(eigen_criterion_residual(p, -0.5), std::domain_error);
  CHECK_NOTHROW(eigen_criterion_residual(p, -0.3));
  CHECK_THROWS_AS(gram_criterion_residual({Eigen::MatrixXd::Identity(2, 2)}, 0.0), std::domain_error);
}

TEST_CASE("basis constraints") {
  AdaptedShapeOperators p{1.0, 0.5, -0.5, 0.2, 0.0, 0.1, 0.1};
  CHECK(basis_constraints(p, BasisCase::distinct));
  p.lambda1 = 0.1;  // |alpha| > l1
  CHECK_FALSE(basis_constraints(p, BasisCase::distinct));
  AdaptedShapeOperators q{1.0, 0.3, 0.3, 0.0, 0.0, 0.0, 0.0};
  CHECK(basis_constraints(q, BasisCase::equal_zero));
  CHECK_FALSE(basis_constraints(q, BasisCase::distinct));
}
