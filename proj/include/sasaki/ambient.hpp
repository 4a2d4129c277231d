#pragma once

// Sasakian structure of S^{2n+1} inside R^{2n+2} = C^{n+1}, with the Tanno
// deformation (eta = a eta0, xi = xi0 / a, phi = phi0,
// g = a g0 + a(a-1) eta0 (x) eta0) of phi-sectional curvature c = 4/a - 3.
//
// Coordinates are ordered (x^1..x^{n+1}, y^1..y^{n+1}).

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sasaki {

using AmbientVector = Eigen::VectorXd;

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kSphereTol = 1e-12;
inline constexpr double kTangentTol = 1e-10;

class SasakianSphere {
 public:
  // Throws std::invalid_argument unless n >= 1 and a > 0.
  SasakianSphere(int n, double a);
  static SasakianSphere canonical(int n) { return SasakianSphere(n, 1.0); }
  static SasakianSphere with_curvature(int n, double c);  // a = 4 / (c + 3), c > -3

  int n() const { return n_; }
  double a() const { return a_; }
  double c() const { return 4.0 / a_ - 3.0; }
  int ambient_dim() const { return 2 * n_ + 2; }

 private:
  int n_;
  double a_;
};

AmbientVector complex_structure(const AmbientVector& v);

// Undeformed tensors; they do not check the base point.
AmbientVector xi0(const AmbientVector& z);
double eta0(const AmbientVector& z, const AmbientVector& v);
AmbientVector phi0(const AmbientVector& z, const AmbientVector& v);

AmbientVector xi(const SasakianSphere& space, const AmbientVector& z);
AmbientVector phi(const SasakianSphere& space, const AmbientVector& z, const AmbientVector& v);
double eta(const SasakianSphere& space, const AmbientVector& z, const AmbientVector& v);
double metric(const SasakianSphere& space, const AmbientVector& z, const AmbientVector& u,
              const AmbientVector& v);

// R(u, v) w of the Sasakian space form N(c).
AmbientVector curvature(const SasakianSphere& space, const AmbientVector& z, const AmbientVector& u,
                        const AmbientVector& v, const AmbientVector& w);

// Projection of an arbitrary vector onto the tangent space of the sphere at z.
AmbientVector tangent_part(const AmbientVector& z, const AmbientVector& v);

}  // namespace sasaki
