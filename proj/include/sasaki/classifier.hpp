#pragma once

// Classification of proper-biharmonic (and (-4)-biharmonic) flat integral
// C-parallel 3-folds in N^7(c).
//
// Writing K = (c+3)/4, B = 2(c+1), L = (7c+5)/4, the flat case is the system
//
//   (3l^2 - K)(3l^4 - B l^2 + K^2) + l^4((a+g)^2 + d^2) = 0
//   (a + g)(5l^2 + a^2 + g^2 - L) + g d^2             = 0
//   d(5l^2 + d^2 + 3g^2 + a g - L)                     = 0
//   K + l^2 + a g - g^2                                = 0
//
// with -sqrt(K) < l < 0, 0 < a <= (l^2 - K)/l, a >= d >= 0, a > 2g and
// l^2 != K/3. The (-4) variant in S^7(1) uses K = 1, B = 8, L = 7.
//
// The last equation and a > 2g force g < 0, so every solution has a = w g with
// w < 0. Each branch (d = 0, d > 0) turns into one univariate polynomial in w.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sasaki/parallel.hpp"
#include "sasaki/polynomial.hpp"
#include "sasaki/shape_algebra.hpp"

namespace sasaki {

struct SystemCoefficients {
  double K = 1.0, B = 4.0, L = 3.0;
  CriterionMode mode = CriterionMode::biharmonic;
  double c = 1.0;

  static SystemCoefficients biharmonic(double c);
  static SystemCoefficients minus4();
  double Q() const { return L + 5.0 * K; }
};

enum class SolutionCase { FlatI, CaseII_1, CaseII_2 };

struct SolutionTuple {
  double lam = 0.0, alpha = 0.0, gamma = 0.0, delta = 0.0;
  SolutionCase kind = SolutionCase::FlatI;
  double c = 1.0;
  CriterionMode mode = CriterionMode::biharmonic;
  bool boundary = false;  // a non-strict constraint holds only within tolerance
  bool fallback = false;  // found by the Newton sweep, not by the reduction

  double K() const;
  double lambda1() const { return (lam * lam - K()) / lam; }
  AdaptedShapeOperators params() const;
};

// Residuals of the four-equation system.
std::array<double, 4> flat_system_residual(const SystemCoefficients& s, double lam, double alpha, double gamma,
                                           double delta);

struct Admissibility {
  bool ok = false;
  bool boundary = false;
  std::string reason;  // first violated constraint, empty when ok
};
Admissibility check_flat_constraints(const SystemCoefficients& s, double lam, double alpha, double gamma,
                                     double delta);

enum class OmegaBranch { delta_zero, delta_pos, alpha_minus_gamma };
std::string to_string(OmegaBranch b);

struct CandidateRoot {
  double value = 0.0;  // w, or l^2 on the alpha = -gamma branch
  bool accepted = false;
  std::string reason;
};

struct ReductionTrace {
  OmegaBranch branch = OmegaBranch::delta_zero;
  std::vector<double> polynomial;  // ascending coefficients
  std::vector<CandidateRoot> roots;
  std::string error;  // root isolation failure, if any
};

struct FlatClassification {
  std::vector<SolutionTuple> tuples;  // sorted by (lam, alpha)
  std::vector<ReductionTrace> traces;
  int fallback_converged = 0;  // sweep starts that reached an admissible solution
};

struct FallbackOptions {
  bool enabled = true;
  int starts = 10000;
  std::uint64_t seed = 20240601;
  Execution execution = Execution::parallel;
};

// Cleared branch polynomials in w.
Polynomial branch_polynomial(const SystemCoefficients& s, OmegaBranch b);

// Empty for c <= -1/3.
FlatClassification solve_flat(double c, const FallbackOptions& fb = {});
FlatClassification solve_minus4_flat(const FallbackOptions& fb = {});
FlatClassification solve_system(const SystemCoefficients& s, const FallbackOptions& fb = {});

// Admissible solutions found by Newton's method from random starts, deduplicated
// and sorted. Serial and parallel runs return identical lists.
std::vector<SolutionTuple> fallback_sweep(const SystemCoefficients& s, const FallbackOptions& fb,
                                          int* converged = nullptr);

struct CaseIIEntry {
  SolutionCase kind = SolutionCase::CaseII_2;
  double c = 1.0;
  std::optional<double> lam;  // not defined for Case II(1)
  double kappa1 = 0.0;
  double kappa2 = 1.0;
  double radius = 0.0;
};

std::vector<CaseIIEntry> solve_caseII(double c);
CaseIIEntry solve_minus4_caseII();

struct CurvatureTable {
  std::vector<double> x1, x2, x3;
  bool x3_circle = false;
};
CurvatureTable curvature_tables(const SolutionTuple& t);

}  // namespace sasaki
