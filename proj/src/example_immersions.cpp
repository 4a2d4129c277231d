#include "sasaki/example_immersions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sasaki {

namespace {

using std::sqrt;
constexpr double kPi = std::numbers::pi;

Point vec(std::initializer_list<double> v) {
  Point p(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) p[i++] = x;
  return p;
}

Jet linear_phase(const Eigen::VectorXd& w, std::span<const Jet> p) {
  Jet theta = 0.0 * p[0];
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w[i] != 0.0) theta = theta + w[i] * p[i];
  return theta;
}

}  // namespace

ParametricImmersion exponential_sum_immersion(std::string name, int n, const ExponentialSum& sum) {
  if (sum.basis.dim() != n + 1 || sum.coef.size() != sum.freq.size() ||
      static_cast<int>(sum.coef.size()) > n + 1) {
    throw std::invalid_argument(name + ": inconsistent exponential sum");
  }
  ParametricImmersion f;
  f.name = std::move(name);
  f.m = static_cast<int>(sum.freq.front().size());
  f.n = n;
  f.torus_basis = sum.basis;
  f.map = [sum, n](std::span<const Jet> p) {
    const int d = n + 1;
    JetVector out(2 * d, 0.0 * p[0]);
    for (std::size_t k = 0; k < sum.coef.size(); ++k) {
      const Jet theta = linear_phase(sum.freq[k], p);
      const Jet ct = cos(theta), st = sin(theta);
      // coef * exp(i theta) = re + i im
      const Jet re = sum.coef[k].real() * ct - sum.coef[k].imag() * st;
      const Jet im = sum.coef[k].real() * st + sum.coef[k].imag() * ct;
      const ComplexVector e = sum.basis.column(static_cast<int>(k));
      for (int j = 0; j < d; ++j) {
        out[j] = out[j] + e[j].real() * re - e[j].imag() * im;
        out[d + j] = out[d + j] + e[j].real() * im + e[j].imag() * re;
      }
    }
    return out;
  };
  return f;
}

FlatTorusData flat_torus_data(double c, const SolutionTuple& t, const UnitaryBasis& basis) {
  if (basis.dim() != 4) throw std::invalid_argument("flat_torus: basis must span C^4");
  const double a = 4.0 / (c + 3.0);
  const double l = t.lam, al = t.alpha, g = t.gamma, d = t.delta;
  const double disc = 4.0 * g * (2.0 * g - al) + d * d;
  if (!(disc >= 0.0)) throw GeometryError("flat_torus: negative radicand 4 gamma (2 gamma - alpha) + delta^2");
  FlatTorusData out;
  out.rho1 = 0.5 * (sqrt(disc) + d);
  out.rho2 = 0.5 * (sqrt(disc) - d);
  const double r1 = out.rho1, r2 = out.rho2;
  const double q2 = a * (g - al) * (2.0 * g - al);
  const double q3 = a * r1 * (r1 + r2);
  const double q4 = a * r2 * (r1 + r2);
  if (!(q2 > 0.0) || !(q3 > 0.0) || !(q4 > 0.0)) throw GeometryError("flat_torus: negative radicand");
  out.sum.basis = basis;
  out.sum.coef = {l / sqrt(l * l + 1.0 / a), 1.0 / sqrt(q2), 1.0 / sqrt(q3), 1.0 / sqrt(q4)};
  out.sum.freq = {vec({1.0 / (a * l), 0.0, 0.0}), vec({-l, g - al, 0.0}), vec({-l, -g, -r1}), vec({-l, -g, r2})};
  return out;
}

ParametricImmersion flat_torus(double c, const SolutionTuple& t, const UnitaryBasis& basis) {
  return exponential_sum_immersion("flat-torus", 3, flat_torus_data(c, t, basis).sum);
}

SolutionTuple corollary_tuple() {
  SolutionTuple t;
  t.lam = -1.0 / sqrt(5.0);
  t.alpha = 3.0 * sqrt(3.0) / sqrt(10.0);
  t.gamma = -sqrt(3.0) / sqrt(10.0);
  t.delta = sqrt(2.0);
  t.c = 1.0;
  return t;
}

SolutionTuple minus4_tuple(int k) {
  SolutionTuple t;
  t.mode = CriterionMode::minus4;
  const double s3 = sqrt(3.0), s13 = sqrt(13.0);
  switch (k) {
    case 1:
      t.lam = -sqrt((4.0 - s13) / 3.0);
      t.alpha = sqrt((7.0 - s13) / 6.0);
      t.gamma = -sqrt((7.0 - s13) / 6.0);
      break;
    case 2:
      t.lam = -sqrt(1.0 / (5.0 + 2.0 * s3));
      t.alpha = sqrt((45.0 + 21.0 * s3) / 13.0);
      t.gamma = -sqrt(6.0 / (21.0 + 11.0 * s3));
      break;
    case 3:
      t.lam = -sqrt(1.0 / (6.0 + s13));
      t.alpha = sqrt((523.0 + 139.0 * s13) / 138.0);
      t.gamma = -sqrt((79.0 - 17.0 * s13) / 138.0);
      t.delta = sqrt((14.0 + 2.0 * s13) / 3.0);
      break;
    default:
      throw std::invalid_argument("minus4_tuple: k must be 1, 2 or 3");
  }
  return t;
}

ParametricImmersion corollary_c1(const UnitaryBasis& basis) {
  if (basis.dim() != 4) throw std::invalid_argument("corollary_c1: basis must span C^4");
  const double s2 = sqrt(2.0), s5 = sqrt(5.0), s6 = sqrt(6.0), s3_10 = sqrt(3.0) / sqrt(10.0);
  ExponentialSum sum;
  sum.basis = basis;
  sum.coef = {-1.0 / s6, 1.0 / s6, 1.0 / s6, 1.0 / s2};
  sum.freq = {vec({-s5, 0.0, 0.0}), vec({1.0 / s5, -4.0 * s3_10, 0.0}), vec({1.0 / s5, s3_10, -3.0 * s2 / 2.0}),
              vec({1.0 / s5, s3_10, s2 / 2.0})};
  ParametricImmersion f = exponential_sum_immersion("corollary-c1", 3, sum);
  f.lattice = {vec({6.0 * kPi / s5, sqrt(3.0) * kPi / sqrt(10.0), kPi / s2}),
               vec({0.0, -3.0 * s5 * kPi / s6, -kPi / s2}), vec({0.0, 0.0, -4.0 * kPi / s2})};
  return f;
}

ParametricImmersion minus4_immersion(int k, const UnitaryBasis& basis) {
  ParametricImmersion f = flat_torus(1.0, minus4_tuple(k), basis);
  f.name = "minus4-" + std::to_string(k);
  return f;
}

ParametricImmersion legendre_circle(int n) {
  if (n < 2) throw std::invalid_argument("legendre_circle: need n >= 2");
  ParametricImmersion f;
  f.name = "legendre-circle";
  f.m = 1;
  f.n = n;
  f.lattice = {vec({sqrt(2.0) * kPi})};
  f.map = [n](std::span<const Jet> p) {
    JetVector out(2 * n + 2, 0.0 * p[0]);
    const Jet th = sqrt(2.0) * p[0];
    out[0] = cos(th) / sqrt(2.0);
    out[1] = sin(th) / sqrt(2.0);
    out[2] = out[2] + 1.0 / sqrt(2.0);
    return out;
  };
  return f;
}

std::vector<CheckResult> helix_frame_conditions(double kappa1, const HelixFrame& fr) {
  const double A = sqrt(1.0 + kappa1), B = sqrt(1.0 - kappa1);
  const std::array<const Eigen::VectorXd*, 4> e{&fr.e1, &fr.e2, &fr.e3, &fr.e4};
  double unit = 0.0, orth = 0.0;
  for (int i = 0; i < 4; ++i) {
    unit = std::max(unit, std::abs(e[i]->squaredNorm() - 1.0));
    for (int j = i + 1; j < 4; ++j) orth = std::max(orth, std::abs(e[i]->dot(*e[j])));
  }
  auto J = [](const Eigen::VectorXd& v) { return complex_structure(v); };
  const double cross = std::max({std::abs(fr.e1.dot(J(fr.e3))), std::abs(fr.e1.dot(J(fr.e4))),
                                 std::abs(fr.e2.dot(J(fr.e3))), std::abs(fr.e2.dot(J(fr.e4)))});
  const double balance = std::abs(A * fr.e1.dot(J(fr.e2)) + B * fr.e3.dot(J(fr.e4)));
  return {make_check("frame_unit", unit, 1e-12), make_check("frame_orthogonal", orth, 1e-12),
          make_check("frame_J_cross", cross, 1e-12), make_check("frame_J_balance", balance, 1e-12)};
}

ParametricImmersion legendre_helix(double kappa1, const HelixFrame& frame, int n) {
  if (!(kappa1 > 0.0 && kappa1 < 1.0)) throw std::invalid_argument("legendre_helix: kappa1 must lie in (0, 1)");
  for (const Eigen::VectorXd* e : {&frame.e1, &frame.e2, &frame.e3, &frame.e4})
    if (e->size() != 2 * n + 2) throw std::invalid_argument("legendre_helix: frame vectors have wrong dimension");
  for (const CheckResult& c : helix_frame_conditions(kappa1, frame))
    if (!c.pass) throw std::invalid_argument("legendre_helix: frame violates " + c.name);
  const double A = sqrt(1.0 + kappa1), B = sqrt(1.0 - kappa1);
  ParametricImmersion f;
  f.name = "legendre-helix";
  f.m = 1;
  f.n = n;
  f.map = [frame, A, B, n](std::span<const Jet> p) {
    JetVector out(2 * n + 2, 0.0 * p[0]);
    const Jet ca = cos(A * p[0]) / sqrt(2.0), sa = sin(A * p[0]) / sqrt(2.0);
    const Jet cb = cos(B * p[0]) / sqrt(2.0), sb = sin(B * p[0]) / sqrt(2.0);
    for (int j = 0; j < 2 * n + 2; ++j)
      out[j] = frame.e1[j] * ca + frame.e2[j] * sa + frame.e3[j] * cb + frame.e4[j] * sb;
    return out;
  };
  return f;
}

ParametricImmersion legendre_helix(double kappa1) {
  HelixFrame fr;
  for (Eigen::VectorXd* e : {&fr.e1, &fr.e2, &fr.e3, &fr.e4}) *e = Eigen::VectorXd::Zero(8);
  fr.e1[0] = fr.e2[1] = fr.e3[2] = fr.e4[3] = 1.0;
  return legendre_helix(kappa1, fr, 3);
}

HelixFrame helix_frame_n2(double kappa1, double a1, double a2, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("helix_frame_n2: sign must be +1 or -1");
  const double A = sqrt(1.0 + kappa1), B = sqrt(1.0 - kappa1);
  HelixFrame fr;
  fr.e1 = Eigen::VectorXd::Unit(6, 0);
  fr.e3 = Eigen::VectorXd::Unit(6, 2);
  const Eigen::VectorXd f = Eigen::VectorXd::Unit(6, 1);
  fr.e2 = -sign * (B / A) * complex_structure(fr.e1) + a1 * f + a2 * complex_structure(f);
  fr.e4 = sign * complex_structure(fr.e3);
  return fr;
}

ParametricImmersion s5_surface() {
  ParametricImmersion f;
  f.name = "s5-surface";
  f.m = 2;
  f.n = 2;
  f.lattice = {vec({2.0 * kPi, 0.0}), vec({0.0, sqrt(2.0) * kPi})};
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(3, 3);
  const std::complex<double> i(0.0, 1.0);
  e(0, 0) = 1.0;
  e(1, 1) = -i / sqrt(2.0);
  e(2, 1) = 1.0 / sqrt(2.0);
  e(1, 2) = i / sqrt(2.0);
  e(2, 2) = 1.0 / sqrt(2.0);
  f.torus_basis = UnitaryBasis(e);
  f.map = [](std::span<const Jet> p) {
    const double r = 1.0 / sqrt(2.0);
    const Jet cu = cos(p[0]), su = sin(p[0]);
    const Jet sv = sin(sqrt(2.0) * p[1]), cv = cos(sqrt(2.0) * p[1]);
    // i exp(-iu) = sin u + i cos u
    return JetVector{r * cu, r * su * sv, r * su * cv, r * su, r * cu * sv, r * cu * cv};
  };
  return f;
}

ParametricImmersion clifford_torus() {
  ExponentialSum sum;
  sum.basis = UnitaryBasis::standard(4);
  sum.coef = {0.5, 0.5, 0.5, 0.5};
  // sqrt3 times the unit vertices (+-1, +-1, +-1)/sqrt3
  sum.freq = {vec({1, 1, 1}), vec({1, -1, -1}), vec({-1, 1, -1}), vec({-1, -1, 1})};
  ParametricImmersion f = exponential_sum_immersion("clifford-torus", 3, sum);
  f.lattice = {vec({kPi, kPi, 0.0}), vec({kPi, 0.0, kPi}), vec({0.0, kPi, kPi})};
  return f;
}

ParametricImmersion cylinder(const ParametricImmersion& f) {
  if (f.m + 1 > Jet::kMaxVars) throw std::invalid_argument("cylinder: too many parameters");
  ParametricImmersion y;
  y.name = "cylinder(" + f.name + ")";
  y.m = f.m + 1;
  y.n = f.n;
  y.torus_basis = f.torus_basis;
  if (!f.lattice.empty()) {
    y.lattice.push_back(2.0 * kPi * Point::Unit(y.m, 0));
    for (const Point& a : f.lattice) {
      Point b = Point::Zero(y.m);
      b.tail(f.m) = a;
      y.lattice.push_back(b);
    }
  }
  y.map = [inner = f.map, d = f.n + 1](std::span<const Jet> p) {
    const JetVector x = inner(p.subspan(1));
    const Jet ct = cos(p[0]), st = sin(p[0]);
    JetVector out(2 * d, 0.0 * p[0]);
    // exp(-it)(a + ib) = (a cos t + b sin t) + i(b cos t - a sin t)
    for (int j = 0; j < d; ++j) {
      out[j] = x[j] * ct + x[d + j] * st;
      out[d + j] = x[d + j] * ct - x[j] * st;
    }
    return out;
  };
  return y;
}

ParametricImmersion coordinate_curve(const ParametricImmersion& f, int axis, const Point& p0) {
  if (axis < 0 || axis >= f.m || p0.size() != f.m) throw std::invalid_argument("coordinate_curve: bad axis or point");
  ParametricImmersion c;
  c.name = f.name + "/axis" + std::to_string(axis);
  c.m = 1;
  c.n = f.n;
  c.map = [inner = f.map, axis, p0](std::span<const Jet> s) {
    std::vector<Jet> q;
    for (Eigen::Index i = 0; i < p0.size(); ++i) q.push_back(Jet::constant(p0[i], s[0].vars(), s[0].order()));
    q[axis] = q[axis] + s[0];
    return inner(q);
  };
  return c;
}

CircleProduct circle_decomposition(const ParametricImmersion& f, int per_axis) {
  if (!f.torus_basis) throw std::invalid_argument(f.name + ": no torus basis for a circle decomposition");
  const UnitaryBasis& basis = *f.torus_basis;
  const int d = f.n + 1;
  const Grid grid = period_grid(f, per_axis);
  CircleProduct out;
  std::vector<double> rmin(d, INFINITY), rmax(d, 0.0);
  std::vector<Eigen::VectorXd> wmin(d, Eigen::VectorXd::Constant(f.m, INFINITY)),
      wmax(d, Eigen::VectorXd::Constant(f.m, -INFINITY));
  for (const Point& p : grid) {
    const JetVector F = f.jets(p, 1);
    const ComplexVector z = basis.coordinates(to_complex(values(F)));
    std::vector<ComplexVector> dz;
    for (int i = 0; i < f.m; ++i) dz.push_back(basis.coordinates(to_complex(values(derivative(F, i)))));
    for (int k = 0; k < d; ++k) {
      const double r = std::abs(z[k]);
      rmin[k] = std::min(rmin[k], r);
      rmax[k] = std::max(rmax[k], r);
      if (r < 1e-12) continue;
      for (int i = 0; i < f.m; ++i) {
        const double w = (std::conj(z[k]) * dz[i][k]).imag() / (r * r);
        wmin[k][i] = std::min(wmin[k][i], w);
        wmax[k][i] = std::max(wmax[k][i], w);
      }
    }
  }
  double sum = 0.0;
  for (int k = 0; k < d; ++k) {
    out.modulus_spread = std::max(out.modulus_spread, rmax[k] - rmin[k]);
    if (rmax[k] < 1e-12) continue;  // unused coordinate
    out.radii.push_back(0.5 * (rmin[k] + rmax[k]));
    out.frequencies.push_back(0.5 * (wmin[k] + wmax[k]));
    out.frequency_spread = std::max(out.frequency_spread, (wmax[k] - wmin[k]).maxCoeff());
    sum += out.radii.back() * out.radii.back();
  }
  out.radius_sum_error = std::abs(sum - 1.0);
  if (out.modulus_spread > 1e-10) throw GeometryError(f.name + ": a coordinate modulus is not constant");
  if (out.frequency_spread > 1e-10) throw GeometryError(f.name + ": a coordinate phase is not affine");
  return out;
}

CheckResult lattice_check(const ParametricImmersion& f, const std::vector<Point>& generators, int per_axis) {
  Grid grid;
  {
    ParametricImmersion cube = f;
    cube.lattice.clear();
    grid = period_grid(cube, per_axis);
  }
  double worst = 0.0;
  for (const Point& a : generators) {
    if (a.size() != f.m) throw std::invalid_argument("lattice_check: generator has wrong dimension");
    for (const Point& p : grid) worst = std::max(worst, (f.evaluate(p + a) - f.evaluate(p)).norm());
  }
  return make_check("lattice", worst, 1e-10);
}

Eigen::Matrix4d cylinder_change_of_variables() {
  const double s2 = sqrt(2.0), s3 = sqrt(3.0), s5 = sqrt(5.0), s6 = sqrt(6.0), s10 = sqrt(10.0);
  Eigen::Matrix4d t1, t2;
  t1 << 1 / s2, 1 / s10, s3 / (2 * s5), 0.5,
        0, 2 / s5, -s6 / (4 * s5), -s2 / 4,
        0, 0, s5 / (2 * s2), -s3 / (2 * s2),
        1 / s2, -1 / s10, -s3 / (2 * s5), -0.5;
  t2 << s2 / s6, 2 / s6, 0, 0,
        -s2 / s6, 1 / s6, -s3 / s6, 0,
        -s2 / s6, 1 / s6, s3 / s6, 0,
        0, 0, 0, 1;
  return t2 * t1;
}

ParametricImmersion cylinder_c1_diagonal(const UnitaryBasis& basis) {
  const double s2 = sqrt(2.0), s6 = sqrt(6.0);
  ExponentialSum sum;
  sum.basis = basis;
  sum.coef = {-1.0 / s6, 1.0 / s6, 1.0 / s6, 1.0 / s2};
  sum.freq = {vec({-s6, 0, 0, 0}), vec({0, s6, 0, 0}), vec({0, 0, s6, 0}), vec({0, 0, 0, -s2})};
  ParametricImmersion f = exponential_sum_immersion("cylinder-c1-diagonal", 3, sum);
  f.lattice = cylinder_c1_diagonal_lattice();
  return f;
}

std::vector<Point> cylinder_c1_diagonal_lattice() {
  const double s = 2.0 * kPi / sqrt(6.0);
  return {vec({s, 0, 0, 0}), vec({0, s, 0, 0}), vec({0, 0, s, 0}), vec({0, 0, 0, 2.0 * kPi / sqrt(2.0)})};
}

}  // namespace sasaki
