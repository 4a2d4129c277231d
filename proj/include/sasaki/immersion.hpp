#pragma once

// Parametric immersions F: R^m -> S^{2n+1}(1) subset R^{2n+2} and their
// extrinsic geometry, computed from jets of F.
//
// The sphere connection along F is nabla_X Y = D_X Y + <X, Y> F. Everything
// that differentiates a geometric field (B, H, tau) requires a flat
// orthonormal chart (G = I at every sampled point); there the Christoffel
// symbols of the induced metric vanish and covariant derivatives reduce to
// projected coordinate derivatives. Other charts raise ChartError.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sasaki/ambient.hpp"
#include "sasaki/complex_coords.hpp"
#include "sasaki/jets.hpp"
#include "sasaki/parallel.hpp"
#include "sasaki/report.hpp"

namespace sasaki {

struct ChartError : GeometryError {
  using GeometryError::GeometryError;
};

inline constexpr double kFlatChartTol = 1e-9;
inline constexpr double kGeometryTol = 1e-8;

using Point = Eigen::VectorXd;
using Grid = std::vector<Point>;

struct ParametricImmersion {
  using Map = std::function<JetVector(std::span<const Jet>)>;

  std::string name;
  int m = 0;  // domain dimension
  int n = 0;  // ambient sphere S^{2n+1}
  Map map;
  std::vector<Point> lattice;              // period vectors, when the map factors through a torus
  std::optional<UnitaryBasis> torus_basis;  // basis in which every complex coordinate is a circle

  int ambient_dim() const { return 2 * n + 2; }
  AmbientVector evaluate(const Point& p) const;
  JetVector jets(const Point& p, int order) const;
};

// per_axis^m points spread uniformly over one lattice cell, or over [0, 2pi)^m.
Grid period_grid(const ParametricImmersion& f, int per_axis);

struct GeometrySample {
  Point p;
  AmbientVector position;
  std::vector<AmbientVector> tangents;      // d_i F
  Eigen::MatrixXd metric;                   // G_ij
  std::vector<std::vector<AmbientVector>> second_fundamental_form;  // B_ij
  AmbientVector mean_curvature;             // H
  double mean_curvature_norm = 0.0;
};

// Works for any chart with nonsingular G.
GeometrySample sample_geometry(const ParametricImmersion& f, const Point& p);

// max |G - I| over the grid; the precondition for every derivative check below.
CheckResult check_flat_chart(const ParametricImmersion& f, const Grid& grid, Execution ex = Execution::parallel);
CheckResult check_unit_norm(const ParametricImmersion& f, const Grid& grid, double tol = 1e-13,
                            Execution ex = Execution::parallel);
// max |eta0(d_i F)|, tolerance 1e-10.
CheckResult check_integral(const ParametricImmersion& f, const Grid& grid, Execution ex = Execution::parallel);
// max |<B_ij, d_k F>| and max |<B_ij, xi0>|.
std::vector<CheckResult> check_gauss_orthogonality(const ParametricImmersion& f, const Grid& grid,
                                                   Execution ex = Execution::parallel);

struct CParallelResult {
  CheckResult c_parallel;  // |(nabla B)(X,Y,Z) - g(phi X, B(Y,Z)) xi|
  CheckResult symmetry;    // total symmetry of S(X,Y,Z) = g(phi X, B(Y,Z))
};
CParallelResult check_C_parallel(const ParametricImmersion& f, const Grid& grid, double tol = kGeometryTol,
                                 Execution ex = Execution::parallel);

struct NormalLaplacianResult {
  CheckResult laplacian;       // |Lap_perp H - H|
  CheckResult constant_norm;   // variance of |H| over the grid
  double mean_curvature = 0.0; // |H| at the first grid point
};
NormalLaplacianResult check_normal_laplacian(const ParametricImmersion& f, const Grid& grid,
                                             double tol = kGeometryTol, Execution ex = Execution::parallel);

enum class BitensionMode { biharmonic, minus4 };

// tau_2 (biharmonic) or tau_2 + 4 tau (minus4) at p, canonical structure.
AmbientVector bitension(const ParametricImmersion& f, const Point& p, BitensionMode mode);
// Sup norm over the grid.
CheckResult check_bitension(const ParametricImmersion& f, const Grid& grid, BitensionMode mode,
                            double tol = kGeometryTol, Execution ex = Execution::parallel);
// tau = m H at p.
AmbientVector tension(const ParametricImmersion& f, const Point& p);

// A_i = A_{phi0 d_i F} as m x m matrices, (A_i)_jk = <B_jk, phi0 d_i F>; flat chart.
std::vector<Eigen::MatrixXd> shape_operators(const ParametricImmersion& f, const Point& p);

// sum_i B(X_i, A_H X_i) in a flat orthonormal chart.
AmbientVector trace_B_AH(const ParametricImmersion& f, const Point& p);

struct LaplacianSplit {
  UnitaryBasis basis;
  std::vector<int> first;   // basis indices forming x_1
  std::vector<int> second;  // basis indices forming x_2
};

struct EigenCheckResult {
  double mu_first = 0.0;
  double mu_second = 0.0;
  CheckResult first;
  CheckResult second;
};

// Coordinate Laplacian -sum d_i d_i applied to the two parts of F.
EigenCheckResult coordinate_laplacian_eigencheck(const ParametricImmersion& f, const LaplacianSplit& split,
                                                 const Grid& grid, double tol = 1e-10);

// Throws ChartError when G deviates from the identity at p.
void require_flat_chart(const ParametricImmersion& f, const Point& p);

}  // namespace sasaki
