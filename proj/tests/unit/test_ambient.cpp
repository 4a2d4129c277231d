#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "sasaki/ambient.hpp"
#include "sasaki/complex_coords.hpp"

using namespace sasaki;

namespace {

double max_structure_defect(double c, int n, int samples) {
  const SasakianSphere sp = SasakianSphere::with_curvature(n, c);
  std::mt19937_64 rng(17 + static_cast<int>(10 * c));
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Eigen::VectorXd z = test::random_sphere_point(rng, sp.ambient_dim());
    const Eigen::VectorXd u = test::random_tangent(rng, z), v = test::random_tangent(rng, z),
                          w = test::random_tangent(rng, z), x = test::random_tangent(rng, z);
    const Eigen::VectorXd xi_z = xi(sp, z);
    const auto d = [&](double r) { worst = std::max(worst, std::abs(r)); };
    const auto dv = [&](const Eigen::VectorXd& r) { worst = std::max(worst, r.norm()); };
    // phi^2 = -I + eta (x) xi, eta(xi) = 1, phi xi = 0
    dv(phi(sp, z, phi(sp, z, u)) + u - eta(sp, z, u) * xi_z);
    d(eta(sp, z, xi_z) - 1.0);
    dv(phi(sp, z, xi_z));
    // g(phi u, phi v) = g(u, v) - eta(u) eta(v); eta = g(xi, .)
    d(metric(sp, z, phi(sp, z, u), phi(sp, z, v)) - metric(sp, z, u, v) + eta(sp, z, u) * eta(sp, z, v));
    d(metric(sp, z, xi_z, u) - eta(sp, z, u));
    // contact condition g(u, phi v) = d eta(u, v) with d eta0(u, v) = <u, J v>
    d(metric(sp, z, u, phi(sp, z, v)) - sp.a() * u.dot(complex_structure(v)));
    // first Bianchi identity and curvature symmetries
    dv(curvature(sp, z, u, v, w) + curvature(sp, z, v, w, u) + curvature(sp, z, w, u, v));
    dv(curvature(sp, z, u, v, w) + curvature(sp, z, v, u, w));
    d(metric(sp, z, curvature(sp, z, u, v, w), x) + metric(sp, z, curvature(sp, z, u, v, x), w));
    d(metric(sp, z, curvature(sp, z, u, v, w), x) - metric(sp, z, curvature(sp, z, w, x, u), v));
    // phi-sectional curvature of a unit horizontal vector
    Eigen::VectorXd h = u - eta(sp, z, u) * xi_z;
    h /= std::sqrt(metric(sp, z, h, h));
    d(metric(sp, z, curvature(sp, z, h, phi(sp, z, h), phi(sp, z, h)), h) - c);
    // sectional curvature of a plane containing xi is 1
    d(metric(sp, z, curvature(sp, z, h, xi_z, xi_z), h) - 1.0);
  }
  return worst;
}

}  // namespace

TEST_CASE("Sasakian structure identities hold at 100 random samples") {
  for (double c : {-2.0, 5.0 / 9.0, 1.0, 7.0}) {
    for (int n : {1, 3}) {
      CAPTURE(c);
      CAPTURE(n);
      CHECK(max_structure_defect(c, n, 100) < 1e-10);
    }
  }
}

TEST_CASE("c = 1 curvature is the round-sphere curvature") {
  const SasakianSphere sp = SasakianSphere::canonical(3);
  std::mt19937_64 rng(3);
  for (int s = 0; s < 50; ++s) {
    const Eigen::VectorXd z = test::random_sphere_point(rng, 8);
    const Eigen::VectorXd u = test::random_tangent(rng, z), v = test::random_tangent(rng, z),
                          w = test::random_tangent(rng, z);
    const Eigen::VectorXd round = v.dot(w) * u - u.dot(w) * v;
    CHECK((curvature(sp, z, u, v, w) - round).norm() < 1e-12);
  }
}

TEST_CASE("Tanno parameter and constructor guards") {
  CHECK(SasakianSphere::with_curvature(3, 1.0).a() == doctest::Approx(1.0));
  CHECK(SasakianSphere::with_curvature(3, 5.0 / 9.0).a() == doctest::Approx(9.0 / 8.0));
  CHECK(SasakianSphere(2, 0.5).c() == doctest::Approx(5.0));
  CHECK_THROWS_AS(SasakianSphere(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SasakianSphere(2, 0.0), std::invalid_argument);
}

TEST_CASE("complex structure is multiplication by i") {
  ComplexVector z(3);
  z << std::complex<double>(1, 2), std::complex<double>(-0.5, 0.25), std::complex<double>(0, -3);
  const Eigen::VectorXd x = to_real(z);
  CHECK((to_complex(x) - z).norm() == 0.0);
  const ComplexVector iz = std::complex<double>(0, 1) * z;
  CHECK((complex_structure(x) - to_real(iz)).norm() < 1e-15);
  CHECK((xi0(x) + complex_structure(x)).norm() < 1e-15);
  CHECK_THROWS(to_complex(Eigen::VectorXd::Zero(3)));
}

TEST_CASE("random unitary bases are orthonormal") {
  for (std::uint64_t seed : {1u, 2u, 3u}) CHECK(UnitaryBasis::random(4, seed).gram_error() < 1e-14);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2);
  bad(0, 1) = 0.5;
  CHECK_THROWS_AS(UnitaryBasis{bad}, std::invalid_argument);
}
