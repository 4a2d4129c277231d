#include "sasaki/ambient.hpp"

#include <cmath>

namespace sasaki {

namespace {

void check_dim(const SasakianSphere& space, const AmbientVector& v, const char* what) {
  if (v.size() != space.ambient_dim()) {
    throw GeometryError(std::string(what) + ": expected length " + std::to_string(space.ambient_dim()) +
                        ", got " + std::to_string(v.size()));
  }
}

void check_point(const SasakianSphere& space, const AmbientVector& z) {
  check_dim(space, z, "point");
  if (std::abs(z.norm() - 1.0) > kSphereTol) throw GeometryError("point is not on the unit sphere");
}

void check_tangent(const SasakianSphere& space, const AmbientVector& z, const AmbientVector& v) {
  check_dim(space, v, "vector");
  if (std::abs(z.dot(v)) > kTangentTol) throw GeometryError("vector is not tangent to the sphere");
}

}  // namespace

SasakianSphere::SasakianSphere(int n, double a) : n_(n), a_(a) {
  if (n < 1) throw std::invalid_argument("SasakianSphere: n must be positive");
  if (!(a > 0.0)) throw std::invalid_argument("SasakianSphere: a must be positive");
}

SasakianSphere SasakianSphere::with_curvature(int n, double c) {
  if (!(c > -3.0)) throw std::invalid_argument("SasakianSphere: c must exceed -3");
  return SasakianSphere(n, 4.0 / (c + 3.0));
}

AmbientVector complex_structure(const AmbientVector& v) {
  if (v.size() % 2 != 0 || v.size() == 0) throw GeometryError("complex_structure: odd length");
  const Eigen::Index h = v.size() / 2;
  AmbientVector out(v.size());
  out.head(h) = -v.tail(h);
  out.tail(h) = v.head(h);
  return out;
}

AmbientVector xi0(const AmbientVector& z) { return -complex_structure(z); }

double eta0(const AmbientVector& z, const AmbientVector& v) { return v.dot(xi0(z)); }

AmbientVector phi0(const AmbientVector& z, const AmbientVector& v) {
  AmbientVector jv = complex_structure(v);
  return jv - jv.dot(z) * z;
}

AmbientVector tangent_part(const AmbientVector& z, const AmbientVector& v) { return v - v.dot(z) * z; }

AmbientVector xi(const SasakianSphere& space, const AmbientVector& z) {
  check_point(space, z);
  return xi0(z) / space.a();
}

AmbientVector phi(const SasakianSphere& space, const AmbientVector& z, const AmbientVector& v) {
  check_point(space, z);
  check_tangent(space, z, v);
  return phi0(z, v);
}

double eta(const SasakianSphere& space, const AmbientVector& z, const AmbientVector& v) {
  check_point(space, z);
  check_tangent(space, z, v);
  return space.a() * eta0(z, v);
}

double metric(const SasakianSphere& space, const AmbientVector& z, const AmbientVector& u,
              const AmbientVector& v) {
  check_point(space, z);
  check_tangent(space, z, u);
  check_tangent(space, z, v);
  const double a = space.a();
  return a * u.dot(v) + a * (a - 1.0) * eta0(z, u) * eta0(z, v);
}

AmbientVector curvature(const SasakianSphere& space, const AmbientVector& z, const AmbientVector& u,
                        const AmbientVector& v, const AmbientVector& w) {
  check_point(space, z);
  check_tangent(space, z, u);
  check_tangent(space, z, v);
  check_tangent(space, z, w);
  const double c = space.c();
  const double a = space.a();
  auto g = [&](const AmbientVector& x, const AmbientVector& y) {
    return a * x.dot(y) + a * (a - 1.0) * eta0(z, x) * eta0(z, y);
  };
  auto et = [&](const AmbientVector& x) { return a * eta0(z, x); };
  const AmbientVector xi_z = xi0(z) / a;
  const AmbientVector phi_u = phi0(z, u);
  const AmbientVector phi_v = phi0(z, v);
  const AmbientVector phi_w = phi0(z, w);

  AmbientVector out = (c + 3.0) / 4.0 * (g(w, v) * u - g(w, u) * v);
  out += (c - 1.0) / 4.0 *
         (et(w) * et(u) * v - et(w) * et(v) * u + g(w, u) * et(v) * xi_z - g(w, v) * et(u) * xi_z +
          g(w, phi_v) * phi_u - g(w, phi_u) * phi_v + 2.0 * g(u, phi_v) * phi_w);
  return out;
}

}  // namespace sasaki
