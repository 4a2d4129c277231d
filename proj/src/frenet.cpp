#include "sasaki/frenet.hpp"

#include <algorithm>
#include <cmath>

namespace sasaki {

namespace {

SampledQuantity summarize(std::vector<double> v) {
  SampledQuantity q;
  q.samples = std::move(v);
  if (q.samples.empty()) return q;
  const auto [lo, hi] = std::minmax_element(q.samples.begin(), q.samples.end());
  q.spread = *hi - *lo;
  double sum = 0.0;
  for (double x : q.samples) sum += x;
  q.mean = sum / static_cast<double>(q.samples.size());
  return q;
}

struct PointFrame {
  int order = 0;
  bool indeterminate = false;
  double dependence = 0.0;
  std::vector<double> kappa;
  std::vector<AmbientVector> frame;
  AmbientVector tangent, position;
  double frame_error = 0.0;
  double frenet_residual = 0.0;
};

PointFrame frame_at(const ParametricImmersion& curve, double s, int max_order) {
  const int seed_order = max_order + 1;
  const JetVector G = curve.jets(Point::Constant(1, s), seed_order);
  const JetVector T = derivative(G, 0);
  if (std::abs(values(T).norm() - 1.0) > 1e-10) throw GeometryError(curve.name + ": curve is not unit speed");

  auto nabla = [&](const JetVector& v) { return derivative(v, 0) + dot(T, v) * G; };

  // Gram-Schmidt on T, nabla T, nabla^2 T, ... carried out in jets so that the
  // frame can be differentiated once more.
  PointFrame out;
  out.tangent = values(T);
  out.position = values(G);
  std::vector<JetVector> E;
  std::vector<double> norms;
  JetVector V = T;
  for (int k = 0; k <= max_order; ++k) {
    if (k > 0) V = nabla(V);
    JetVector W = V;
    for (const JetVector& e : E) W = W - dot(W, e) * e;
    const double n = values(W).norm();
    if (k > 0 && n < kIndeterminateTol) {
      out.dependence = n;
      out.indeterminate = n >= kOrderTol;
      break;
    }
    if (k == max_order) {
      out.dependence = n;
      out.indeterminate = true;  // order exceeds max_order
      break;
    }
    const Jet inv = reciprocal(sqrt(dot(W, W)));
    E.push_back(inv * W);
    norms.push_back(n);
  }
  out.order = static_cast<int>(E.size());
  for (std::size_t k = 1; k < norms.size(); ++k) out.kappa.push_back(norms[k] / norms[k - 1]);
  for (const JetVector& e : E) out.frame.push_back(values(e));

  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = 0; j < E.size(); ++j)
      out.frame_error = std::max(out.frame_error, std::abs(out.frame[i].dot(out.frame[j]) - (i == j ? 1.0 : 0.0)));

  for (int k = 0; k < out.order; ++k) {
    if (E[k][0].order() < 1) break;
    AmbientVector expected = AmbientVector::Zero(out.position.size());
    if (k > 0) expected -= out.kappa[k - 1] * out.frame[k - 1];
    if (k + 1 < out.order) expected += out.kappa[k] * out.frame[k + 1];
    out.frenet_residual = std::max(out.frenet_residual, (values(nabla(E[k])) - expected).norm());
  }
  return out;
}

}  // namespace

FrenetApparatus frenet(const ParametricImmersion& curve, const std::vector<double>& s_grid, int max_order) {
  if (curve.m != 1) throw std::invalid_argument("frenet: expected a curve");
  if (max_order < 1 || max_order + 1 > Jet::kMaxOrder) throw std::invalid_argument("frenet: max_order out of range");
  if (s_grid.empty()) throw std::invalid_argument("frenet: empty grid");
  FrenetApparatus app;
  std::vector<std::vector<double>> kappa;
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    PointFrame pf = frame_at(curve, s_grid[i], max_order);
    if (i == 0) {
      app.order = pf.order;
      kappa.resize(std::max(0, pf.order - 1));
    } else if (pf.order != app.order) {
      throw GeometryError(curve.name + ": osculating order varies along the curve");
    }
    app.indeterminate = app.indeterminate || pf.indeterminate;
    app.dependence_residual = std::max(app.dependence_residual, pf.dependence);
    app.frame_error = std::max(app.frame_error, pf.frame_error);
    app.frenet_residual = std::max(app.frenet_residual, pf.frenet_residual);
    for (std::size_t k = 0; k < kappa.size(); ++k) kappa[k].push_back(pf.kappa[k]);
    app.frame.push_back(std::move(pf.frame));
    app.tangent.push_back(std::move(pf.tangent));
    app.position.push_back(std::move(pf.position));
  }
  for (auto& k : kappa) app.curvatures.push_back(summarize(std::move(k)));
  return app;
}

SampledQuantity phi_alignment(const FrenetApparatus& app) {
  if (app.order < 2) throw std::invalid_argument("phi_alignment: osculating order must be at least 2");
  std::vector<double> v;
  for (std::size_t i = 0; i < app.frame.size(); ++i)
    v.push_back(app.frame[i][1].dot(phi0(app.position[i], app.tangent[i])));
  return summarize(std::move(v));
}

}  // namespace sasaki
