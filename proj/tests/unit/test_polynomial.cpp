#include <cmath>

#include "doctest.h"
#include "sasaki/polynomial.hpp"

using namespace sasaki;

namespace {

Polynomial from_roots(std::initializer_list<double> roots) {
  Polynomial p({1.0});
  for (double r : roots) p = p * Polynomial({-r, 1.0});
  return p;
}

}  // namespace

TEST_CASE("evaluation, derivative and division") {
  const Polynomial p({1.0, -3.0, 0.0, 2.0});  // 2x^3 - 3x + 1
  CHECK(p(2.0) == doctest::Approx(11.0));
  CHECK(p.derivative()(1.0) == doctest::Approx(3.0));
  const auto [q, r] = Polynomial::divide(p, Polynomial({-1.0, 1.0}));
  CHECK(r.is_zero());
  CHECK(q.degree() == 2);
  CHECK(q(0.0) == doctest::Approx(-1.0));
}

TEST_CASE("simple real roots") {
  const auto roots = real_roots(from_roots({-3.0, 0.5, 2.0}) * Polynomial({1.0, 0.0, 1.0}));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].value == doctest::Approx(-3.0).epsilon(1e-15));
  CHECK(roots[1].value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(roots[2].value == doctest::Approx(2.0).epsilon(1e-15));
  for (const auto& r : roots) CHECK_FALSE(r.multiple);
}

TEST_CASE("multiple roots are reported once and flagged") {
  const auto roots = real_roots(from_roots({1.0, 1.0, 1.0, -2.0}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].value == doctest::Approx(-2.0));
  CHECK(roots[1].value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(roots[1].multiple);
  CHECK_FALSE(roots[0].multiple);
}

TEST_CASE("Sturm counts") {
  const auto seq = sturm_sequence(from_roots({-1.0, 0.25, 4.0}));
  CHECK(sturm_count(seq, -10.0, 10.0) == 3);
  CHECK(sturm_count(seq, 0.0, 1.0) == 1);
  CHECK(sturm_count(seq, 5.0, 6.0) == 0);
}

TEST_CASE("irrational roots are polished to full precision") {
  const auto roots = real_roots(Polynomial({-2.0, 0.0, 1.0}));
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[1].value - std::sqrt(2.0)) < 1e-15);
}
