#pragma once

// Frenet apparatus of arc-length curves in S^{2n+1}(1), with
// nabla_T V = V' + <T, V> Gamma.

#include <vector>

#include "sasaki/immersion.hpp"

namespace sasaki {

struct SampledQuantity {
  std::vector<double> samples;
  double mean = 0.0;
  double spread = 0.0;  // max - min
  bool constant(double tol = 1e-8) const { return spread < tol; }
};

struct FrenetApparatus {
  int order = 0;  // osculating order r
  bool indeterminate = false;
  std::vector<SampledQuantity> curvatures;            // kappa_1 .. kappa_{r-1}
  std::vector<std::vector<AmbientVector>> frame;      // frame[sample][k] = E_{k+1}
  std::vector<AmbientVector> tangent, position;       // per sample
  double frame_error = 0.0;    // max |<E_i, E_j> - delta_ij|
  double frenet_residual = 0.0;  // max |nabla_T E_k - (-kappa_{k-1} E_{k-1} + kappa_k E_{k+1})|
  double dependence_residual = 0.0;  // norm of the first dependent derivative
};

inline constexpr double kOrderTol = 1e-8;
inline constexpr double kIndeterminateTol = 1e-6;

// Throws GeometryError if |Gamma'| deviates from 1 by more than 1e-10, or if
// the osculating order differs between samples.
FrenetApparatus frenet(const ParametricImmersion& curve, const std::vector<double>& s_grid, int max_order = 4);

// g0(E_2, phi0 T) over the samples; requires order >= 2.
SampledQuantity phi_alignment(const FrenetApparatus& app);

}  // namespace sasaki
