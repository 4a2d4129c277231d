#pragma once

#include <cmath>
#include <random>

#include "sasaki/immersion.hpp"

namespace test {

// Random point on S^{2n+1} and a random tangent vector there.
inline Eigen::VectorXd random_sphere_point(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Eigen::VectorXd z(dim);
  for (int i = 0; i < dim; ++i) z[i] = g(rng);
  return z.normalized();
}

inline Eigen::VectorXd random_tangent(std::mt19937_64& rng, const Eigen::VectorXd& z) {
  std::normal_distribution<double> g;
  Eigen::VectorXd v(z.size());
  for (int i = 0; i < z.size(); ++i) v[i] = g(rng);
  return v - v.dot(z) * z;
}

// Unit-speed circle of radius r in S^3: r cos(s/r) e1 + r sin(s/r) e2 + sqrt(1 - r^2) e3.
inline sasaki::ParametricImmersion small_circle(double r) {
  sasaki::ParametricImmersion f;
  f.name = "small-circle";
  f.m = 1;
  f.n = 1;
  f.map = [r](std::span<const sasaki::Jet> p) {
    const sasaki::Jet s = p[0] / r;
    sasaki::JetVector out(4, sasaki::Jet::constant(0.0, p[0].vars(), p[0].order()));
    out[0] = r * cos(s);
    out[1] = r * sin(s);
    out[2] = sasaki::Jet::constant(std::sqrt(1.0 - r * r), p[0].vars(), p[0].order());
    return out;
  };
  f.lattice = {Eigen::VectorXd::Constant(1, 2.0 * M_PI * r)};
  return f;
}

}  // namespace test
