#include "sasaki/immersion.hpp"

#include <cmath>
#include <numbers>

namespace sasaki {

namespace {

// Jets of F and its first derivatives in a chart verified to be flat orthonormal.
struct FlatField {
  int m;
  JetVector F;
  std::vector<JetVector> dF;

  FlatField(const ParametricImmersion& f, const Point& p, int order) : m(f.m), F(f.jets(p, order)) {
    dF.reserve(m);
    for (int i = 0; i < m; ++i) dF.push_back(derivative(F, i));
    for (int i = 0; i < m; ++i) {
      const Eigen::VectorXd di = values(dF[i]);
      for (int j = 0; j < m; ++j) {
        const double g = di.dot(values(dF[j]));
        if (std::abs(g - (i == j ? 1.0 : 0.0)) > kFlatChartTol) {
          throw ChartError(f.name + ": induced metric is not the identity at this point");
        }
      }
    }
  }

  // Component normal to M inside the sphere.
  JetVector normal(const JetVector& v) const {
    JetVector out = v - dot(v, F) * F;
    for (int k = 0; k < m; ++k) out = out - dot(v, dF[k]) * dF[k];
    return out;
  }

  JetVector second_form(int j, int k) const { return normal(derivative(dF[j], k)); }

  JetVector mean_curvature() const {
    JetVector h = second_form(0, 0);
    for (int i = 1; i < m; ++i) h = h + second_form(i, i);
    return (1.0 / m) * h;
  }

  // nabla_i V = d_i V + <d_i F, V> F for V tangent to the sphere along F.
  JetVector covariant(const JetVector& v, int i) const { return derivative(v, i) + dot(dF[i], v) * F; }
};

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

AmbientVector ParametricImmersion::evaluate(const Point& p) const { return values(jets(p, 0)); }

JetVector ParametricImmersion::jets(const Point& p, int order) const {
  if (p.size() != m) throw std::invalid_argument(name + ": parameter point has wrong dimension");
  const std::vector<Jet> seeds = seed_point(p, order);
  JetVector out = map(seeds);
  if (static_cast<int>(out.size()) != ambient_dim()) {
    throw std::logic_error(name + ": map returned the wrong number of components");
  }
  return out;
}

Grid period_grid(const ParametricImmersion& f, int per_axis) {
  if (per_axis < 1) throw std::invalid_argument("period_grid: need at least one point per axis");
  std::vector<Point> cell = f.lattice;
  if (cell.empty()) {
    for (int i = 0; i < f.m; ++i) cell.push_back(2.0 * std::numbers::pi * Point::Unit(f.m, i));
  }
  Grid grid;
  std::vector<int> idx(f.m, 0);
  while (true) {
    Point p = Point::Zero(f.m);
    for (int i = 0; i < f.m; ++i) p += (static_cast<double>(idx[i]) / per_axis) * cell[i];
    grid.push_back(std::move(p));
    int k = 0;
    while (k < f.m && ++idx[k] == per_axis) idx[k++] = 0;
    if (k == f.m) break;
  }
  return grid;
}

GeometrySample sample_geometry(const ParametricImmersion& f, const Point& p) {
  const JetVector F = f.jets(p, 2);
  GeometrySample s;
  s.p = p;
  s.position = values(F);
  std::vector<JetVector> dF;
  for (int i = 0; i < f.m; ++i) {
    dF.push_back(derivative(F, i));
    s.tangents.push_back(values(dF.back()));
  }
  s.metric.resize(f.m, f.m);
  for (int i = 0; i < f.m; ++i)
    for (int j = 0; j < f.m; ++j) s.metric(i, j) = s.tangents[i].dot(s.tangents[j]);

  Eigen::LDLT<Eigen::MatrixXd> ldlt(s.metric);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
      std::abs(s.metric.determinant()) < 1e-14 * std::pow(s.metric.norm(), f.m)) {
    throw GeometryError(f.name + ": singular induced metric (not an immersion here)");
  }
  const Eigen::MatrixXd g_inv = ldlt.solve(Eigen::MatrixXd::Identity(f.m, f.m));

  Eigen::MatrixXd tangent_matrix(f.ambient_dim(), f.m);
  for (int i = 0; i < f.m; ++i) tangent_matrix.col(i) = s.tangents[i];
  auto normal_part = [&](const AmbientVector& v) -> AmbientVector {
    AmbientVector w = v - v.dot(s.position) * s.position;
    return w - tangent_matrix * (g_inv * (tangent_matrix.transpose() * w));
  };

  s.second_fundamental_form.assign(f.m, std::vector<AmbientVector>(f.m));
  s.mean_curvature = AmbientVector::Zero(f.ambient_dim());
  for (int i = 0; i < f.m; ++i) {
    for (int j = 0; j < f.m; ++j) {
      // normal part of D_i d_j F + G_ij F; the F term drops under the projection
      s.second_fundamental_form[i][j] = normal_part(values(derivative(dF[j], i)));
      s.mean_curvature += g_inv(i, j) * s.second_fundamental_form[i][j];
    }
  }
  s.mean_curvature /= f.m;
  s.mean_curvature_norm = s.mean_curvature.norm();
  return s;
}

void require_flat_chart(const ParametricImmersion& f, const Point& p) { FlatField(f, p, 1); }

CheckResult check_flat_chart(const ParametricImmersion& f, const Grid& grid, Execution ex) {
  const double worst = max_over(
      grid.size(),
      [&](std::size_t k) {
        const JetVector F = f.jets(grid[k], 1);
        std::vector<Eigen::VectorXd> d;
        for (int i = 0; i < f.m; ++i) d.push_back(values(derivative(F, i)));
        Eigen::MatrixXd g(f.m, f.m);
        for (int i = 0; i < f.m; ++i)
          for (int j = 0; j < f.m; ++j) g(i, j) = d[i].dot(d[j]);
        return max_abs(g - Eigen::MatrixXd::Identity(f.m, f.m));
      },
      ex);
  return make_check("flat_chart", worst, kFlatChartTol);
}

CheckResult check_unit_norm(const ParametricImmersion& f, const Grid& grid, double tol, Execution ex) {
  const double worst =
      max_over(grid.size(), [&](std::size_t k) { return std::abs(f.evaluate(grid[k]).norm() - 1.0); }, ex);
  return make_check("unit_norm", worst, tol);
}

CheckResult check_integral(const ParametricImmersion& f, const Grid& grid, Execution ex) {
  const double worst = max_over(
      grid.size(),
      [&](std::size_t k) {
        const JetVector F = f.jets(grid[k], 1);
        const AmbientVector z = values(F);
        double w = 0.0;
        for (int i = 0; i < f.m; ++i) w = std::max(w, std::abs(eta0(z, values(derivative(F, i)))));
        return w;
      },
      ex);
  return make_check("integral", worst, 1e-10);
}

std::vector<CheckResult> check_gauss_orthogonality(const ParametricImmersion& f, const Grid& grid, Execution ex) {
  std::vector<std::pair<double, double>> per_point = map_indices<std::pair<double, double>>(
      grid.size(),
      [&](std::size_t k) {
        const GeometrySample s = sample_geometry(f, grid[k]);
        const AmbientVector reeb = xi0(s.position);
        double tangential = 0.0, vertical = 0.0;
        for (int i = 0; i < f.m; ++i) {
          for (int j = 0; j < f.m; ++j) {
            const AmbientVector& b = s.second_fundamental_form[i][j];
            for (int l = 0; l < f.m; ++l) tangential = std::max(tangential, std::abs(b.dot(s.tangents[l])));
            vertical = std::max(vertical, std::abs(b.dot(reeb)));
          }
        }
        return std::make_pair(tangential, vertical);
      },
      ex);
  double tangential = 0.0, vertical = 0.0;
  for (const auto& [t, v] : per_point) {
    tangential = std::max(tangential, t);
    vertical = std::max(vertical, v);
  }
  return {make_check("gauss_orthogonality", tangential, 1e-10), make_check("second_form_reeb", vertical, 1e-10)};
}

CParallelResult check_C_parallel(const ParametricImmersion& f, const Grid& grid, double tol, Execution ex) {
  auto per_point = map_indices<std::pair<double, double>>(
      grid.size(),
      [&](std::size_t k) {
        const FlatField field(f, grid[k], 3);
        const AmbientVector z = values(field.F);
        const AmbientVector reeb = xi0(z);
        std::vector<std::vector<JetVector>> B(f.m, std::vector<JetVector>(f.m));
        for (int j = 0; j < f.m; ++j)
          for (int l = j; l < f.m; ++l) B[j][l] = B[l][j] = field.second_form(j, l);

        const int m = f.m;
        std::vector<double> S(m * m * m);
        double residual = 0.0;
        for (int i = 0; i < m; ++i) {
          const AmbientVector phi_i = phi0(z, values(field.dF[i]));
          for (int j = 0; j < m; ++j) {
            for (int l = 0; l < m; ++l) {
              const AmbientVector b = values(B[j][l]);
              const double s = phi_i.dot(b);
              S[(i * m + j) * m + l] = s;
              const AmbientVector lhs = values(field.normal(derivative(B[j][l], i)));
              residual = std::max(residual, (lhs - s * reeb).norm());
            }
          }
        }
        double asym = 0.0;
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            for (int l = 0; l < m; ++l) {
              const double s = S[(i * m + j) * m + l];
              asym = std::max({asym, std::abs(s - S[(j * m + i) * m + l]), std::abs(s - S[(l * m + j) * m + i])});
            }
        return std::make_pair(residual, asym);
      },
      ex);
  double residual = 0.0, asym = 0.0;
  for (const auto& [r, a] : per_point) {
    residual = std::max(residual, r);
    asym = std::max(asym, a);
  }
  return {make_check("c_parallel", residual, tol), make_check("s_symmetric", asym, 1e-10)};
}

NormalLaplacianResult check_normal_laplacian(const ParametricImmersion& f, const Grid& grid, double tol,
                                             Execution ex) {
  auto per_point = map_indices<std::pair<double, double>>(
      grid.size(),
      [&](std::size_t k) {
        const FlatField field(f, grid[k], 4);
        const JetVector H = field.mean_curvature();
        AmbientVector lap = AmbientVector::Zero(f.ambient_dim());
        for (int i = 0; i < f.m; ++i) {
          const JetVector first = field.normal(derivative(H, i));
          lap -= values(field.normal(derivative(first, i)));
        }
        const AmbientVector h = values(H);
        return std::make_pair((lap - h).norm(), h.norm());
      },
      ex);
  NormalLaplacianResult out;
  double residual = 0.0, mean = 0.0;
  for (const auto& [r, h] : per_point) {
    residual = std::max(residual, r);
    mean += h;
  }
  mean /= static_cast<double>(per_point.size());
  double variance = 0.0;
  for (const auto& [r, h] : per_point) variance += (h - mean) * (h - mean);
  variance /= static_cast<double>(per_point.size());
  out.laplacian = make_check("normal_laplacian", residual, tol);
  out.constant_norm = make_check("mean_curvature_constant", variance, 1e-16);
  out.mean_curvature = per_point.empty() ? 0.0 : per_point.front().second;
  return out;
}

AmbientVector tension(const ParametricImmersion& f, const Point& p) {
  const FlatField field(f, p, 2);
  return static_cast<double>(f.m) * values(field.mean_curvature());
}

AmbientVector bitension(const ParametricImmersion& f, const Point& p, BitensionMode mode) {
  const FlatField field(f, p, 4);
  const JetVector tau = static_cast<double>(f.m) * field.mean_curvature();
  const AmbientVector z = values(field.F);
  const AmbientVector tau0 = values(tau);
  const SasakianSphere sphere = SasakianSphere::canonical(f.n);

  // -Lap tau = sum_i nabla_i nabla_i tau
  AmbientVector out = AmbientVector::Zero(f.ambient_dim());
  for (int i = 0; i < f.m; ++i) out += values(field.covariant(field.covariant(tau, i), i));
  for (int i = 0; i < f.m; ++i) {
    const AmbientVector di = values(field.dF[i]);
    out -= curvature(sphere, z, di, tau0, di);
  }
  if (mode == BitensionMode::minus4) out += 4.0 * tau0;
  return out;
}

CheckResult check_bitension(const ParametricImmersion& f, const Grid& grid, BitensionMode mode, double tol,
                            Execution ex) {
  const double worst = max_over(grid.size(), [&](std::size_t k) { return bitension(f, grid[k], mode).norm(); }, ex);
  return make_check(mode == BitensionMode::biharmonic ? "bitension" : "minus4_bitension", worst, tol);
}

std::vector<Eigen::MatrixXd> shape_operators(const ParametricImmersion& f, const Point& p) {
  const FlatField field(f, p, 2);
  const AmbientVector z = values(field.F);
  std::vector<Eigen::MatrixXd> out(f.m, Eigen::MatrixXd(f.m, f.m));
  for (int i = 0; i < f.m; ++i) {
    const AmbientVector phi_i = phi0(z, values(field.dF[i]));
    for (int j = 0; j < f.m; ++j)
      for (int k = 0; k < f.m; ++k) out[i](j, k) = values(field.second_form(j, k)).dot(phi_i);
  }
  return out;
}

AmbientVector trace_B_AH(const ParametricImmersion& f, const Point& p) {
  const FlatField field(f, p, 2);
  const AmbientVector h = values(field.mean_curvature());
  AmbientVector out = AmbientVector::Zero(f.ambient_dim());
  // A_H X_i = sum_j <B_ij, H> X_j
  for (int i = 0; i < f.m; ++i)
    for (int j = 0; j < f.m; ++j) {
      const AmbientVector b = values(field.second_form(i, j));
      out += b.dot(h) * b;
    }
  return out;
}

EigenCheckResult coordinate_laplacian_eigencheck(const ParametricImmersion& f, const LaplacianSplit& split,
                                                 const Grid& grid, double tol) {
  if (split.basis.dim() != f.n + 1) throw std::invalid_argument("eigencheck: basis dimension mismatch");
  auto part = [&](const ComplexVector& z, const std::vector<int>& group) {
    ComplexVector out = ComplexVector::Zero(z.size());
    const ComplexVector coords = split.basis.coordinates(z);
    for (int k : group) out += coords[k] * split.basis.column(k);
    return to_real(out);
  };

  std::vector<std::array<AmbientVector, 4>> samples;  // x1, lap x1, x2, lap x2
  for (const Point& p : grid) {
    require_flat_chart(f, p);
    const JetVector F = f.jets(p, 2);
    AmbientVector lap = AmbientVector::Zero(f.ambient_dim());
    for (int i = 0; i < f.m; ++i) lap -= values(derivative(derivative(F, i), i));
    const ComplexVector z = to_complex(values(F));
    const ComplexVector lz = to_complex(lap);
    samples.push_back({part(z, split.first), part(lz, split.first), part(z, split.second), part(lz, split.second)});
  }

  auto fit = [&](int xi, int li, const char* name, double& mu) {
    double num = 0.0, den = 0.0;
    for (const auto& s : samples) {
      num += s[li].dot(s[xi]);
      den += s[xi].squaredNorm();
    }
    if (den == 0.0) throw GeometryError("eigencheck: coordinate group vanishes on the grid");
    mu = num / den;
    double residual = 0.0;
    for (const auto& s : samples) residual = std::max(residual, (s[li] - mu * s[xi]).norm());
    return make_check(name, residual, tol);
  };

  EigenCheckResult out;
  out.first = fit(0, 1, "laplacian_eigen_first", out.mu_first);
  out.second = fit(2, 3, "laplacian_eigen_second", out.mu_second);
  return out;
}

}  // namespace sasaki
