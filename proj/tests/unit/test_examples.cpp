#include <cmath>

#include "doctest.h"
#include "sasaki/classifier.hpp"
#include "sasaki/example_immersions.hpp"
#include "sasaki/frenet.hpp"

using namespace sasaki;

TEST_CASE("the explicit corollary torus is the general flat torus at c = 1") {
  const ParametricImmersion a = corollary_c1();
  const ParametricImmersion b = flat_torus(1.0, corollary_tuple(), UnitaryBasis::standard(4));
  for (const Point& p : period_grid(a, 3)) CHECK((a.evaluate(p) - b.evaluate(p)).norm() < 1e-14);
}

TEST_CASE("flat tori for other c are integral maps into the unit sphere") {
  for (double c : {2.0, 5.0}) {
    const auto tuples = solve_flat(c).tuples;
    REQUIRE_FALSE(tuples.empty());
    const ParametricImmersion f = flat_torus(c, tuples[0], UnitaryBasis::standard(4));
    const Grid g = period_grid(f, 2);
    CHECK(check_unit_norm(f, g).pass);
    CHECK(check_integral(f, g).pass);
  }
}

TEST_CASE("lattices of the displayed examples") {
  CHECK(lattice_check(corollary_c1(), corollary_c1().lattice).pass);
  CHECK(lattice_check(s5_surface(), s5_surface().lattice).pass);
  const ParametricImmersion cyl = cylinder(s5_surface());
  CHECK(lattice_check(cyl, cyl.lattice).pass);
  CHECK(lattice_check(cylinder_c1_diagonal(), cylinder_c1_diagonal_lattice()).pass);
  // Half a generator is not a period.
  std::vector<Point> half{corollary_c1().lattice[0] / 2};
  CHECK_FALSE(lattice_check(corollary_c1(), half).pass);
}

TEST_CASE("circle decompositions") {
  const auto radii = [](const ParametricImmersion& f) {
    auto r = circle_decomposition(f).radii;
    std::sort(r.begin(), r.end());
    return r;
  };
  const auto r1 = radii(cylinder(corollary_c1()));
  CHECK(r1[0] == doctest::Approx(1 / std::sqrt(6.0)));
  CHECK(r1[3] == doctest::Approx(1 / std::sqrt(2.0)));
  const auto r2 = radii(cylinder(s5_surface()));
  CHECK(r2[0] == doctest::Approx(0.5));
  CHECK(r2[2] == doctest::Approx(1 / std::sqrt(2.0)));
  for (int k = 1; k <= 3; ++k) CHECK(circle_decomposition(cylinder(minus4_immersion(k))).radius_sum_error < 1e-12);
  CHECK_THROWS(circle_decomposition(legendre_helix(0.5)));
}

TEST_CASE("the cylinder change of variables is orthogonal and diagonalizes") {
  const Eigen::Matrix4d M = cylinder_change_of_variables();
  CHECK((M * M.transpose() - Eigen::Matrix4d::Identity()).norm() < 1e-14);
  const ParametricImmersion y = cylinder(corollary_c1()), d = cylinder_c1_diagonal();
  for (const Point& q : period_grid(y, 2)) CHECK((d.evaluate(M * q) - y.evaluate(q)).norm() < 1e-13);
}

TEST_CASE("Legendre helices are biharmonic for every curvature in (0, 1)") {
  for (double k : {0.1, 0.5, 0.9}) {
    const ParametricImmersion f = legendre_helix(k);
    const Grid g = period_grid(f, 6);
    CHECK(check_integral(f, g).pass);
    CHECK(check_bitension(f, g, BitensionMode::biharmonic).pass);
    const FrenetApparatus app = frenet(f, {0.0, 0.7, 1.9}, 4);
    CHECK(app.order == 3);
    CHECK(app.curvatures[0].mean == doctest::Approx(k).epsilon(1e-12));
  }
  CHECK_THROWS(legendre_helix(1.2));
  CHECK_THROWS(legendre_helix(0.0));
}

TEST_CASE("the n = 2 helix frame") {
  const double k = 0.4, A = std::sqrt(1 + k), B = std::sqrt(1 - k);
  // a1^2 + a2^2 = 1 - B^2/A^2
  const double rest = std::sqrt(1 - B * B / (A * A));
  for (int sign : {+1, -1}) {
    const HelixFrame fr = helix_frame_n2(k, rest * std::cos(0.3), rest * std::sin(0.3), sign);
    for (const CheckResult& c : helix_frame_conditions(k, fr)) CHECK_MESSAGE(c.pass, c.name);
    const ParametricImmersion f = legendre_helix(k, fr, 2);
    const Grid g = period_grid(f, 5);
    CHECK(check_integral(f, g).pass);
    CHECK(check_bitension(f, g, BitensionMode::biharmonic).pass);
    const double align = phi_alignment(frenet(f, {0.0, 0.5}, 4)).mean;
    CHECK(align == doctest::Approx(-sign * B).epsilon(1e-10));
  }
  HelixFrame bad = helix_frame_n2(k, rest, 0.0, +1);
  bad.e2 *= 2.0;
  CHECK_THROWS_AS(legendre_helix(k, bad, 2), std::invalid_argument);
}

TEST_CASE("Legendre circle") {
  const ParametricImmersion f = legendre_circle(3);
  const FrenetApparatus app = frenet(f, {0.0, 1.0, 2.0}, 4);
  CHECK(app.order == 2);
  CHECK(app.curvatures[0].mean == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(phi_alignment(app).mean) < 1e-12);
}
