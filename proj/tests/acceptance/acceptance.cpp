// One line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "sasaki/classifier.hpp"
#include "sasaki/example_immersions.hpp"
#include "sasaki/frenet.hpp"

using namespace sasaki;

namespace {

const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s5 = std::sqrt(5.0), s6 = std::sqrt(6.0),
             s10 = std::sqrt(10.0), s13 = std::sqrt(13.0), s145 = std::sqrt(145.0);
constexpr double pi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " failed: " << what << ";";
    }
  }
};

Point vec(std::initializer_list<double> v) {
  Point p(static_cast<Eigen::Index>(v.size()));
  int i = 0;
  for (double x : v) p[i++] = x;
  return p;
}

double max_diff(const SolutionTuple& t, std::array<double, 4> e) {
  return std::max({std::abs(t.lam - e[0]), std::abs(t.alpha - e[1]), std::abs(t.gamma - e[2]), std::abs(t.delta - e[3])});
}

double max_diff_sorted(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double max_mean_curvature_error(const ParametricImmersion& f, const Grid& g, double expected) {
  double worst = 0.0;
  for (const Point& p : g) worst = std::max(worst, std::abs(tension(f, p).norm() / f.m - expected));
  return worst;
}

Outcome criterion1() {
  Outcome o;
  const auto t = solve_flat(1.0).tuples;
  o.require(t.size() == 1, "expected one tuple, got " + std::to_string(t.size()));
  if (t.size() == 1) {
    const double d = max_diff(t[0], {-1 / s5, 3 * s3 / s10, -s3 / s10, s2});
    o.detail << " max deviation " << d;
    o.require(d < 1e-12, "tuple values");
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t = solve_minus4_flat().tuples;
  o.require(t.size() == 3, "expected three tuples, got " + std::to_string(t.size()));
  const std::array<std::array<double, 4>, 3> expected = {{
      {-std::sqrt((4 - s13) / 3), std::sqrt((7 - s13) / 6), -std::sqrt((7 - s13) / 6), 0.0},
      {-std::sqrt(1 / (5 + 2 * s3)), std::sqrt((45 + 21 * s3) / 13), -std::sqrt(6 / (21 + 11 * s3)), 0.0},
      {-std::sqrt(1 / (6 + s13)), std::sqrt((523 + 139 * s13) / 138), -std::sqrt((79 - 17 * s13) / 138),
       std::sqrt((14 + 2 * s13) / 3)},
  }};
  double worst = 0.0;
  for (const auto& e : expected) {
    double best = INFINITY;
    for (const auto& s : t) best = std::min(best, max_diff(s, e));
    worst = std::max(worst, best);
  }
  o.detail << " max deviation " << worst;
  o.require(worst < 1e-12, "tuple values");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const ParametricImmersion f = corollary_c1();
  const std::vector<std::vector<double>> expected = {
      {4 * s5 / 5, 1.0}, {std::sqrt(29.0) / s10, 9 * s2 / s145, 2 * s3 / s145}, {s5 / s2, 2 * s3 / s10, s3 / s10}};
  double diff = 0.0, spread = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    const FrenetApparatus app = frenet(coordinate_curve(f, axis, Point::Zero(3)), {0.0, 1.3, 2.6, 3.9, 5.2}, 4);
    o.require(app.curvatures.size() == expected[axis].size() && !app.indeterminate,
              "X" + std::to_string(axis + 1) + " order");
    for (std::size_t k = 0; k < std::min(app.curvatures.size(), expected[axis].size()); ++k) {
      spread = std::max(spread, app.curvatures[k].spread);
      for (double v : app.curvatures[k].samples) diff = std::max(diff, std::abs(v - expected[axis][k]));
    }
  }
  o.detail << " max deviation " << diff << ", spread " << spread;
  o.require(diff < 1e-8, "curvature values");
  o.require(spread < 1e-8, "constancy");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const ParametricImmersion x = corollary_c1(), s = s5_surface();
  double worst = 0.0;
  for (const ParametricImmersion& f : {x, s, cylinder(x), cylinder(s)}) {
    const double r = check_bitension(f, period_grid(f, 5), BitensionMode::biharmonic).residual;
    worst = std::max(worst, r);
    o.require(r < 1e-8, f.name + " bitension");
  }
  const double h = max_mean_curvature_error(x, period_grid(x, 5), 2.0 / 3.0);
  const ParametricImmersion y = cylinder(x);
  const double hy = max_mean_curvature_error(y, period_grid(y, 5), 0.5);
  o.detail << " bitension " << worst << ", |H| error " << h << ", cylinder error " << hy;
  o.require(h < 1e-10, "|H| = 2/3");
  o.require(hy < 1e-10, "cylinder mean curvature 1/2");
  return o;
}

Outcome criterion5() {
  Outcome o;
  double worst = 0.0;
  for (int k = 1; k <= 3; ++k) {
    const ParametricImmersion f = minus4_immersion(k);
    worst = std::max(worst, check_bitension(f, period_grid(f, 5), BitensionMode::minus4).residual);
  }
  o.detail << " max |tau2 + 4 tau| " << worst;
  o.require(worst < 1e-8, "(-4) bitension");
  return o;
}

double structure_defect(double c) {
  const SasakianSphere sp = SasakianSphere::with_curvature(3, c);
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g;
  const auto rand_vec = [&] {
    Eigen::VectorXd v(8);
    for (int i = 0; i < 8; ++i) v[i] = g(rng);
    return v;
  };
  double worst = 0.0;
  for (int s = 0; s < 100; ++s) {
    const Eigen::VectorXd z = rand_vec().normalized();
    const auto tangent = [&] {
      Eigen::VectorXd v = rand_vec();
      return Eigen::VectorXd(v - v.dot(z) * z);
    };
    const Eigen::VectorXd u = tangent(), v = tangent(), w = tangent(), x = tangent(), xz = xi(sp, z);
    const auto m = [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return metric(sp, z, a, b); };
    worst = std::max(worst, (phi(sp, z, phi(sp, z, u)) + u - eta(sp, z, u) * xz).norm());
    worst = std::max(worst, std::abs(eta(sp, z, xz) - 1.0));
    worst = std::max(worst, std::abs(m(phi(sp, z, u), phi(sp, z, v)) - m(u, v) + eta(sp, z, u) * eta(sp, z, v)));
    worst = std::max(worst, (curvature(sp, z, u, v, w) + curvature(sp, z, v, w, u) + curvature(sp, z, w, u, v)).norm());
    worst = std::max(worst, std::abs(m(curvature(sp, z, u, v, w), x) + m(curvature(sp, z, u, v, x), w)));
  }
  return worst;
}

Outcome criterion6() {
  Outcome o;
  double structure = 0.0;
  for (double c : {-2.0, 5.0 / 9.0, 1.0, 7.0}) structure = std::max(structure, structure_defect(c));
  o.require(structure < 1e-10, "structure identities");
  double lap = 0.0, cpar = 0.0;
  std::vector<ParametricImmersion> integral = {corollary_c1(), s5_surface(), clifford_torus()};
  for (int k = 1; k <= 3; ++k) integral.push_back(minus4_immersion(k));
  for (const ParametricImmersion& f : integral) {
    const Grid g = period_grid(f, 5);
    lap = std::max(lap, check_normal_laplacian(f, g).laplacian.residual);
    cpar = std::max(cpar, check_C_parallel(f, g).c_parallel.residual);
  }
  o.require(lap < 1e-8, "normal Laplacian");
  o.require(cpar < 1e-8, "C-parallel");
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double agree = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const AdaptedShapeOperators p{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    const double c = std::uniform_real_distribution<double>(-0.3, 7.0)(rng);
    const EigenResidual r = eigen_criterion_residual(p, c);
    agree = std::max(agree, (expanded_system_residual(p, c) - r.r).norm() / std::max(1.0, r.t.norm()));
  }
  o.require(agree < 1e-10, "expanded system vs eigen-criterion");
  o.detail << " structure " << structure << ", normal Laplacian " << lap << ", C-parallel " << cpar
           << ", criterion agreement " << agree;
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (double c : {-1.0 / 3.0, -0.34, -0.5, -1.0, -2.9}) {
    o.require(solve_flat(c).tuples.empty(), "flat tuples at c = " + std::to_string(c));
    o.require(solve_caseII(c).empty(), "Case II at c = " + std::to_string(c));
  }
  const AdaptedShapeOperators p{1.0, 0.5, -0.5, 0.2, 0.0, 0.1, 0.1};
  for (double c : {-1.0 / 3.0, -0.5}) {
    bool threw = false;
    try {
      eigen_criterion_residual(p, c);
    } catch (const std::domain_error&) {
      threw = true;
    }
    o.require(threw, "k <= 0 guard");
  }
  o.detail << " k(-1/3) = " << biharmonic_eigenvalue(-1.0 / 3.0);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const std::vector<std::pair<ParametricImmersion, std::vector<double>>> cases = {
      {cylinder(corollary_c1()), {1 / s2, 1 / s6, 1 / s6, 1 / s6}},
      {cylinder(s5_surface()), {1 / s2, 0.5, 0.5}},
      {cylinder(minus4_immersion(1)),
       {std::sqrt((5 - s13) / 12), std::sqrt((7 + s13) / 36), std::sqrt((7 + s13) / 36), std::sqrt((7 + s13) / 36)}},
      {cylinder(minus4_immersion(2)),
       {std::sqrt((3 + s3) / 12), std::sqrt((3 + s3) / 12), std::sqrt((3 - s3) / 12), std::sqrt((3 - s3) / 12)}},
      {cylinder(minus4_immersion(3)),
       {std::sqrt((5 + s13) / 12), std::sqrt((7 - s13) / 36), std::sqrt((7 - s13) / 36), std::sqrt((7 - s13) / 36)}},
  };
  double worst = 0.0, sum = 0.0;
  for (const auto& [f, radii] : cases) {
    const CircleProduct cp = circle_decomposition(f);
    worst = std::max(worst, max_diff_sorted(cp.radii, radii));
    sum = std::max(sum, cp.radius_sum_error);
  }
  o.detail << " radius deviation " << worst << ", |sum r^2 - 1| " << sum;
  o.require(worst < 1e-10, "radii");
  o.require(sum < 1e-10, "sum of squares");
  return o;
}

Outcome criterion9() {
  Outcome o;
  const double l = 2 * pi / s6;
  const Eigen::Matrix4d M = cylinder_change_of_variables();
  std::vector<Point> torus;
  for (const Point& a : {vec({l, 0, 0, 0}), vec({0, l, 0, 0}), vec({0, 0, l, 0}), vec({0, 0, 0, 2 * pi / s2})})
    torus.push_back(M.transpose() * a);
  const std::vector<std::pair<ParametricImmersion, std::vector<Point>>> cases = {
      {s5_surface(), {vec({2 * pi, 0}), vec({0, s2 * pi})}},
      {cylinder(s5_surface()), {vec({2 * pi, 0, 0}), vec({0, 2 * pi, 0}), vec({0, 0, s2 * pi})}},
      {corollary_c1(),
       {vec({6 * pi / s5, s3 * pi / s10, pi / s2}), vec({0, -3 * s5 * pi / s6, -pi / s2}), vec({0, 0, -4 * pi / s2})}},
      {cylinder_c1_diagonal(), {vec({l, 0, 0, 0}), vec({0, l, 0, 0}), vec({0, 0, l, 0}), vec({0, 0, 0, 2 * pi / s2})}},
      {cylinder(corollary_c1()), torus},
  };
  double worst = 0.0;
  for (const auto& [f, gens] : cases) worst = std::max(worst, lattice_check(f, gens).residual);
  o.detail << " max periodicity residual " << worst;
  o.require(worst < 1e-10, "periodicity");
  return o;
}

Outcome criterion10() {
  Outcome o;
  const ParametricImmersion x = corollary_c1(), y = cylinder(x);
  const LaplacianSplit split{*x.torus_basis, {3}, {0, 1, 2}};
  const EigenCheckResult ex = coordinate_laplacian_eigencheck(x, split, period_grid(x, 5));
  const EigenCheckResult ey = coordinate_laplacian_eigencheck(y, split, period_grid(y, 5));
  const double d = std::max({std::abs(ex.mu_first - 1), std::abs(ex.mu_second - 5), std::abs(ey.mu_first - 2),
                             std::abs(ey.mu_second - 6)});
  o.detail << " eigenvalues (" << ex.mu_first << ", " << ex.mu_second << ") and (" << ey.mu_first << ", "
           << ey.mu_second << "), eigen-equation residual "
           << std::max({ex.first.residual, ex.second.residual, ey.first.residual, ey.second.residual});
  o.require(d < 1e-10, "eigenvalues");
  o.require(ex.first.pass && ex.second.pass && ey.first.pass && ey.second.pass, "eigen-equations");
  return o;
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    Outcome (*run)();
  };
  const Entry entries[] = {
      {"unique flat solution at c = 1", criterion1},
      {"three (-4) flat solutions", criterion2},
      {"Frenet curvatures of the coordinate curves", criterion3},
      {"bitension and mean curvature of the c = 1 and S^5 examples", criterion4},
      {"(-4) bitension of the three flat immersions", criterion5},
      {"structure, normal Laplacian, C-parallel and criterion agreement", criterion6},
      {"no solutions for c <= -1/3 and the k > 0 guard", criterion7},
      {"circle decompositions", criterion8},
      {"lattice periodicity", criterion9},
      {"coordinate Laplacian eigenvalues", criterion10},
  };
  int failed = 0, index = 0;
  for (const Entry& e : entries) {
    ++index;
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail << " exception: " << ex.what();
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2d %s:%s\n", o.pass ? "PASS" : "FAIL", index, e.title, o.detail.str().c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
