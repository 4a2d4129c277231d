#pragma once

// Explicit immersions into spheres, built as jet-valued maps.

#include <string>
#include <vector>

#include "sasaki/classifier.hpp"
#include "sasaki/immersion.hpp"

namespace sasaki {

// Sum_k coef_k exp(i <freq_k, p>) E_k.
struct ExponentialSum {
  std::vector<std::complex<double>> coef;
  std::vector<Eigen::VectorXd> freq;
  UnitaryBasis basis = UnitaryBasis::standard(1);
};
ParametricImmersion exponential_sum_immersion(std::string name, int n, const ExponentialSum& sum);

// The general flat 3-torus in N^7(c) for an admissible flat tuple; a = 4/(c+3).
// Throws GeometryError on a negative radicand.
struct FlatTorusData {
  ExponentialSum sum;
  double rho1 = 0.0, rho2 = 0.0;
};
FlatTorusData flat_torus_data(double c, const SolutionTuple& t, const UnitaryBasis& basis);
ParametricImmersion flat_torus(double c, const SolutionTuple& t, const UnitaryBasis& basis);

// Closed-form tuples.
SolutionTuple corollary_tuple();       // c = 1
SolutionTuple minus4_tuple(int k);     // k = 1, 2, 3

// The c = 1 proper-biharmonic 3-torus, with its coefficients written out.
ParametricImmersion corollary_c1(const UnitaryBasis& basis = UnitaryBasis::standard(4));
// The (-4)-biharmonic flat immersions of S^7(1).
ParametricImmersion minus4_immersion(int k, const UnitaryBasis& basis = UnitaryBasis::standard(4));

// Proper-biharmonic Legendre circle (1/sqrt2)(cos(sqrt2 s) e1 + sin(sqrt2 s) e2 + e3)
// with e_i the first three real coordinate vectors of C^{n+1}, n >= 2.
ParametricImmersion legendre_circle(int n = 3);

// (1/sqrt2)(cos(As) e1 + sin(As) e2 + cos(Bs) e3 + sin(Bs) e4),
// A = sqrt(1 + k1), B = sqrt(1 - k1), k1 in (0, 1).
struct HelixFrame {
  Eigen::VectorXd e1, e2, e3, e4;
};
// Throws std::invalid_argument naming the first violated condition.
ParametricImmersion legendre_helix(double kappa1, const HelixFrame& frame, int n);
// e1..e4 the first four real coordinate vectors of C^4.
ParametricImmersion legendre_helix(double kappa1);
// The n = 2 construction: e1 = (1,0,0,0,0,0), e3 = (0,0,1,0,0,0), f = (0,1,0,0,0,0),
// e2 = -+ (B/A) J e1 + a1 f + a2 J f, e4 = +- J e3. sign = +1 picks the upper signs.
HelixFrame helix_frame_n2(double kappa1, double a1, double a2, int sign = +1);
// Residuals of the unit/orthogonality conditions on a helix frame, in order:
// unit lengths, mutual orthogonality, the four <e_i, J e_j> = 0, and A<e1,Je2> + B<e3,Je4> = 0.
std::vector<CheckResult> helix_frame_conditions(double kappa1, const HelixFrame& frame);

// (1/sqrt2)(exp(iu), i exp(-iu) sin(sqrt2 v), i exp(-iu) cos(sqrt2 v)) in S^5.
ParametricImmersion s5_surface();

// Minimal flat Legendrian torus (1/2) sum_k exp(i <f_k, p>) e_k in S^7,
// f_k = sqrt3 times the vertices of a regular tetrahedron.
ParametricImmersion clifford_torus();

// y(t, p) = exp(-it) F(p); t is the first parameter.
ParametricImmersion cylinder(const ParametricImmersion& f);

// s -> F(p0 + s e_axis)
ParametricImmersion coordinate_curve(const ParametricImmersion& f, int axis, const Point& p0);

struct CircleProduct {
  std::vector<double> radii;
  std::vector<Eigen::VectorXd> frequencies;
  double modulus_spread = 0.0;    // max over coordinates of (max - min) |z_k|
  double frequency_spread = 0.0;  // max over coordinates of the phase-gradient variation
  double radius_sum_error = 0.0;  // |sum r^2 - 1|
};
// Requires f.torus_basis. Throws GeometryError if a coordinate is not a circle.
CircleProduct circle_decomposition(const ParametricImmersion& f, int per_axis = 4);

// max over a grid and generators of |F(p + a) - F(p)|, tolerance 1e-10.
CheckResult lattice_check(const ParametricImmersion& f, const std::vector<Point>& generators, int per_axis = 3);

// Orthogonal change of variables q~ = M q that turns the cylinder over the
// c = 1 torus into a product of four circles with coordinate frequencies.
Eigen::Matrix4d cylinder_change_of_variables();
// The cylinder over corollary_c1 written in the coordinates q~.
ParametricImmersion cylinder_c1_diagonal(const UnitaryBasis& basis = UnitaryBasis::standard(4));
// Lattice of that torus in the q~ coordinates.
std::vector<Point> cylinder_c1_diagonal_lattice();

}  // namespace sasaki
