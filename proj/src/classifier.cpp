#include "sasaki/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sasaki/jets.hpp"

namespace sasaki {

namespace {

constexpr double kConstraintTol = 1e-12;
constexpr double kSystemTol = 1e-10;
constexpr double kMinimalTol = 1e-8;

Polynomial poly(std::initializer_list<double> c) { return Polynomial(std::vector<double>(c)); }

// Strict constraint margin > 0.
bool strict_fails(double margin, double scale, const char* name, Admissibility& a) {
  if (margin > kConstraintTol * scale) return false;
  a.reason = std::string(name) + (margin > -kConstraintTol * scale ? " (boundary)" : "");
  return true;
}

// Non-strict constraint margin >= 0.
bool loose_fails(double margin, double scale, const char* name, Admissibility& a) {
  if (margin < -kConstraintTol * scale) {
    a.reason = name;
    return true;
  }
  if (margin <= kConstraintTol * scale) a.boundary = true;
  return false;
}

template <class T>
std::array<T, 4> system_terms(const SystemCoefficients& s, const T& l, const T& a, const T& g, const T& d) {
  const T l2 = l * l;
  const T ag = a + g;
  return {(3.0 * l2 - s.K) * (3.0 * l2 * l2 - s.B * l2 + s.K * s.K) + l2 * l2 * (ag * ag + d * d),
          ag * (5.0 * l2 + a * a + g * g - s.L) + g * d * d,
          d * (5.0 * l2 + d * d + 3.0 * g * g + a * g - s.L),
          s.K + l2 + a * g - g * g};
}

double max_abs(const std::array<double, 4>& r) {
  double m = 0.0;
  for (double v : r) m = std::max(m, std::abs(v));
  return m;
}

double validation_residual(const SystemCoefficients& s, const SolutionTuple& t) {
  const double sys = max_abs(flat_system_residual(s, t.lam, t.alpha, t.gamma, t.delta));
  const AdaptedShapeOperators p = t.params();
  const double crit = s.mode == CriterionMode::minus4 ? minus4_criterion_residual(p).norm()
                                                       : expanded_system_residual(p, s.c).norm();
  return std::max(sys, crit);
}

SolutionTuple make_tuple(const SystemCoefficients& s, double lam, double alpha, double gamma, double delta) {
  SolutionTuple t;
  t.lam = lam;
  t.alpha = alpha;
  t.gamma = gamma;
  t.delta = delta;
  t.c = s.c;
  t.mode = s.mode;
  return t;
}

// Accepts a candidate; on rejection fills `reason`.
std::optional<SolutionTuple> admit(const SystemCoefficients& s, double lam, double alpha, double gamma,
                                   double delta, std::string& reason) {
  const Admissibility a = check_flat_constraints(s, lam, alpha, gamma, delta);
  if (!a.ok) {
    reason = a.reason;
    return std::nullopt;
  }
  SolutionTuple t = make_tuple(s, lam, alpha, gamma, delta);
  t.boundary = a.boundary;
  if (validation_residual(s, t) >= kSystemTol) {
    reason = "system residual";
    return std::nullopt;
  }
  // Points near the excluded l^2 = (c+3)/12 locus can pass the band above
  // when Newton lands there; they are minimal (zero trace vector).
  const ShapeMatrices A = build_matrices(t.params());
  const Eigen::Vector3d trace(A[0].trace(), A[1].trace(), A[2].trace());
  if (trace.norm() < kMinimalTol) {
    reason = "minimal (zero mean curvature)";
    return std::nullopt;
  }
  return t;
}

bool same_tuple(const SolutionTuple& a, const SolutionTuple& b) {
  const double tol = 1e-8;
  return std::abs(a.lam - b.lam) < tol && std::abs(a.alpha - b.alpha) < tol && std::abs(a.gamma - b.gamma) < tol &&
         std::abs(a.delta - b.delta) < tol;
}

void sort_tuples(std::vector<SolutionTuple>& v) {
  std::sort(v.begin(), v.end(), [](const SolutionTuple& a, const SolutionTuple& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.lam != b.lam) return a.lam < b.lam;
    return a.alpha < b.alpha;
  });
}

ReductionTrace omega_branch(const SystemCoefficients& s, OmegaBranch branch, std::vector<SolutionTuple>& out) {
  ReductionTrace trace;
  trace.branch = branch;
  const Polynomial p = branch_polynomial(s, branch);
  trace.polynomial = p.coeffs();
  std::vector<RealRoot> roots;
  try {
    roots = real_roots(p);
  } catch (const RootIsolationError& e) {
    trace.error = e.what();
    return trace;
  }
  const double K = s.K, Q = s.Q();
  for (const RealRoot& r : roots) {
    CandidateRoot cand;
    cand.value = r.value;
    const double w = r.value;
    auto reject = [&](std::string why) {
      cand.reason = std::move(why);
      trace.roots.push_back(cand);
    };
    if (w >= -kConstraintTol) {
      reject("omega >= 0 (alpha and gamma must have opposite signs)");
      continue;
    }
    if (std::abs(w + 1.0) <= 1e-7) {
      reject("omega = -1 excluded (alpha = -gamma handled separately)");
      continue;
    }
    double l2, g2, d2 = 0.0;
    if (branch == OmegaBranch::delta_zero) {
      const double D = (w - 2.0) * (w - 3.0);
      const double P = (1.0 - w) * Q - K * D;
      l2 = P / D;
      g2 = Q / D;
    } else {
      const double D1 = (w - 1.0) * (w - 2.0);
      const double P1 = -Q * w - K * D1;
      l2 = P1 / D1;
      g2 = Q * w / ((w - 1.0) * (w - 1.0) * (w - 2.0));
      d2 = Q * (w + 1.0) * (w + 1.0) / ((w - 1.0) * (w - 1.0));
    }
    if (!(l2 > 0.0)) {
      reject("lambda^2 <= 0");
      continue;
    }
    if (!(g2 > 0.0)) {
      reject("gamma^2 <= 0");
      continue;
    }
    if (branch == OmegaBranch::delta_pos && !(d2 > 0.0)) {
      reject("delta^2 <= 0");
      continue;
    }
    const double lam = -std::sqrt(l2);
    const double gamma = -std::sqrt(g2);
    const double alpha = w * gamma;
    const double delta = std::sqrt(d2);
    std::string why;
    if (auto t = admit(s, lam, alpha, gamma, delta, why)) {
      cand.accepted = true;
      trace.roots.push_back(cand);
      out.push_back(*t);
    } else {
      reject(why);
    }
  }
  return trace;
}

// alpha = -gamma, delta = 0: l^2 solves 3x^2 - B x + K^2 and g^2 = (K + l^2)/2.
ReductionTrace alpha_minus_gamma_branch(const SystemCoefficients& s, std::vector<SolutionTuple>& out) {
  ReductionTrace trace;
  trace.branch = OmegaBranch::alpha_minus_gamma;
  const Polynomial p = branch_polynomial(s, OmegaBranch::alpha_minus_gamma);
  trace.polynomial = p.coeffs();
  for (const RealRoot& r : real_roots(p)) {
    CandidateRoot cand;
    cand.value = r.value;
    if (!(r.value > 0.0)) {
      cand.reason = "lambda^2 <= 0";
      trace.roots.push_back(cand);
      continue;
    }
    const double lam = -std::sqrt(r.value);
    const double gamma = -std::sqrt((s.K + r.value) / 2.0);
    std::string why;
    if (auto t = admit(s, lam, -gamma, gamma, 0.0, why)) {
      cand.accepted = true;
      out.push_back(*t);
    } else {
      cand.reason = why;
    }
    trace.roots.push_back(cand);
  }
  return trace;
}

}  // namespace

SystemCoefficients SystemCoefficients::biharmonic(double c) {
  return {(c + 3.0) / 4.0, 2.0 * (c + 1.0), (7.0 * c + 5.0) / 4.0, CriterionMode::biharmonic, c};
}

SystemCoefficients SystemCoefficients::minus4() { return {1.0, 8.0, 7.0, CriterionMode::minus4, 1.0}; }

double SolutionTuple::K() const { return mode == CriterionMode::minus4 ? 1.0 : (c + 3.0) / 4.0; }

AdaptedShapeOperators SolutionTuple::params() const {
  AdaptedShapeOperators p;
  p.lambda1 = lambda1();
  p.lambda2 = p.lambda3 = lam;
  p.alpha = alpha;
  p.beta = 0.0;
  p.gamma = gamma;
  p.delta = delta;
  return p;
}

std::array<double, 4> flat_system_residual(const SystemCoefficients& s, double lam, double alpha, double gamma,
                                           double delta) {
  return system_terms(s, lam, alpha, gamma, delta);
}

Admissibility check_flat_constraints(const SystemCoefficients& s, double lam, double alpha, double gamma,
                                     double delta) {
  Admissibility a;
  const double K = s.K;
  const double l2 = lam * lam;
  if (strict_fails(-lam, 1.0, "lambda < 0", a)) return a;
  if (strict_fails(K - l2, K, "lambda > -sqrt(c+3)/2", a)) return a;
  if (strict_fails(alpha, 1.0, "alpha > 0", a)) return a;
  const double lambda1 = (l2 - K) / lam;
  if (loose_fails(lambda1 - alpha, std::max(1.0, std::abs(lambda1)), "alpha <= lambda1", a)) return a;
  if (loose_fails(alpha - delta, std::max(1.0, alpha), "alpha >= delta", a)) return a;
  if (delta != 0.0 && loose_fails(delta, 1.0, "delta >= 0", a)) return a;
  if (strict_fails(alpha - 2.0 * gamma, std::max(1.0, alpha), "alpha > 2 gamma", a)) return a;
  if (std::abs(l2 - K / 3.0) <= kConstraintTol * K) {
    a.reason = "lambda^2 = (c+3)/12 excluded (boundary)";
    return a;
  }
  a.ok = true;
  return a;
}

std::string to_string(OmegaBranch b) {
  switch (b) {
    case OmegaBranch::delta_zero:
      return "delta_zero";
    case OmegaBranch::delta_pos:
      return "delta_pos";
    case OmegaBranch::alpha_minus_gamma:
      return "alpha_minus_gamma";
  }
  return "?";
}

Polynomial branch_polynomial(const SystemCoefficients& s, OmegaBranch b) {
  const double K = s.K, B = s.B, Q = s.Q();
  const Polynomial w1 = poly({1.0, 1.0});  // w + 1
  if (b == OmegaBranch::alpha_minus_gamma) return poly({K * K, -B, 3.0});
  if (b == OmegaBranch::delta_zero) {
    const Polynomial D = poly({6.0, -5.0, 1.0});
    const Polynomial P = Q * poly({1.0, -1.0}) - K * D;
    return (3.0 * P - K * D) * (3.0 * (P * P) - B * (P * D) + (K * K) * (D * D)) + Q * (P * P * w1 * w1);
  }
  const Polynomial D1 = poly({2.0, -3.0, 1.0});
  const Polynomial P1 = (-Q) * poly({0.0, 1.0}) - K * D1;
  return (3.0 * P1 - K * D1) * (3.0 * (P1 * P1) - B * (P1 * D1) + (K * K) * (D1 * D1)) +
         (2.0 * Q) * (P1 * P1 * w1 * w1);
}

std::vector<SolutionTuple> fallback_sweep(const SystemCoefficients& s, const FallbackOptions& fb, int* converged) {
  const double span = 2.0 * std::sqrt(std::max(s.K, s.L)) + 1.0;
  const double root_k = std::sqrt(s.K);

  auto newton = [&](Eigen::Vector4d& x, Eigen::Vector4d& r, Eigen::Matrix4d& J) {
    std::array<Jet, 4> v;
    for (int k = 0; k < 4; ++k) v[k] = Jet::variable(x[k], k, 4, 1);
    const auto e = system_terms(s, v[0], v[1], v[2], v[3]);
    for (int row = 0; row < 4; ++row) {
      r[row] = e[row].value();
      for (int col = 0; col < 4; ++col) J(row, col) = e[row].derivative(col).value();
    }
  };

  auto run = [&](std::size_t i) -> std::optional<SolutionTuple> {
    std::mt19937_64 rng(fb.seed ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Eigen::Vector4d x(-root_k * u(rng), span * u(rng), -span * u(rng), span * u(rng));
    Eigen::Vector4d r;
    Eigen::Matrix4d J;
    for (int it = 0; it < 80; ++it) {
      newton(x, r, J);
      if (!r.allFinite() || x.norm() > 1e6) return std::nullopt;
      if (r.cwiseAbs().maxCoeff() < 1e-14) break;
      Eigen::Vector4d step = J.fullPivLu().solve(r);
      if (!step.allFinite()) return std::nullopt;
      x -= step / std::max(1.0, step.norm() / span);
    }
    // Only isolated roots count: at a singular Jacobian the residual is small on
    // a whole neighbourhood and the point is not a reliable solution.
    newton(x, r, J);
    const Eigen::Vector4d sv = J.jacobiSvd().singularValues();
    if (!(sv[3] > 1e-5 * sv[0])) return std::nullopt;
    x[3] = std::abs(x[3]);
    if (x[3] < 1e-10) x[3] = 0.0;
    const double res = max_abs(flat_system_residual(s, x[0], x[1], x[2], x[3]));
    if (!(res < 1e-12)) return std::nullopt;
    std::string why;
    auto t = admit(s, x[0], x[1], x[2], x[3], why);
    if (t) t->fallback = true;
    return t;
  };

  const auto found = map_indices<std::optional<SolutionTuple>>(static_cast<std::size_t>(fb.starts), run, fb.execution);
  std::vector<SolutionTuple> unique;
  int hits = 0;
  for (const auto& t : found) {
    if (!t) continue;
    ++hits;
    if (std::none_of(unique.begin(), unique.end(), [&](const SolutionTuple& u) { return same_tuple(u, *t); }))
      unique.push_back(*t);
  }
  if (converged) *converged = hits;
  sort_tuples(unique);
  return unique;
}

FlatClassification solve_system(const SystemCoefficients& s, const FallbackOptions& fb) {
  FlatClassification out;
  std::vector<SolutionTuple> found;
  out.traces.push_back(omega_branch(s, OmegaBranch::delta_zero, found));
  out.traces.push_back(omega_branch(s, OmegaBranch::delta_pos, found));
  out.traces.push_back(alpha_minus_gamma_branch(s, found));
  for (const auto& t : found)
    if (std::none_of(out.tuples.begin(), out.tuples.end(), [&](const SolutionTuple& u) { return same_tuple(u, t); }))
      out.tuples.push_back(t);

  if (fb.enabled) {
    for (const auto& t : fallback_sweep(s, fb, &out.fallback_converged)) {
      if (std::none_of(out.tuples.begin(), out.tuples.end(), [&](const SolutionTuple& u) { return same_tuple(u, t); }))
        out.tuples.push_back(t);
    }
  }
  sort_tuples(out.tuples);
  return out;
}

FlatClassification solve_flat(double c, const FallbackOptions& fb) {
  if (!(c > -1.0 / 3.0)) return {};
  return solve_system(SystemCoefficients::biharmonic(c), fb);
}

FlatClassification solve_minus4_flat(const FallbackOptions& fb) { return solve_system(SystemCoefficients::minus4(), fb); }

std::vector<CaseIIEntry> solve_caseII(double c) {
  std::vector<CaseIIEntry> out;
  if (!(c > -1.0 / 3.0)) return out;
  if (std::abs(c - 5.0 / 9.0) < 1e-12) {
    CaseIIEntry e;
    e.kind = SolutionCase::CaseII_1;
    e.c = c;
    e.kappa1 = 1.0 / std::sqrt(2.0);
    e.radius = std::sqrt(3.0) / 2.0;
    out.push_back(e);
  }
  const double disc = 13.0 * c * c + 14.0 * c - 11.0;
  if (disc < 0.0 || std::abs(c - 1.0) < 1e-12) return out;
  const double K = (c + 3.0) / 4.0;
  std::vector<double> candidates{(4.0 * c + 4.0 - std::sqrt(disc)) / 12.0};
  if (c < 1.0) candidates.push_back((4.0 * c + 4.0 + std::sqrt(disc)) / 12.0);
  for (double l2 : candidates) {
    if (!(l2 > 0.0) || !(l2 < K) || std::abs(l2 - K / 3.0) <= kConstraintTol * K) continue;
    CaseIIEntry e;
    e.c = c;
    e.lam = -std::sqrt(l2);
    e.kappa1 = (l2 - K) / *e.lam;
    e.radius = 2.0 / std::sqrt(4.0 * l2 + c + 3.0);
    out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [](const CaseIIEntry& a, const CaseIIEntry& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.lam.value_or(0.0) < b.lam.value_or(0.0);
  });
  return out;
}

CaseIIEntry solve_minus4_caseII() {
  const double l2 = (4.0 - std::sqrt(13.0)) / 3.0;
  CaseIIEntry e;
  e.c = 1.0;
  e.lam = -std::sqrt(l2);
  e.kappa1 = (l2 - 1.0) / *e.lam;
  e.radius = 1.0 / std::sqrt(1.0 + l2);
  return e;
}

CurvatureTable curvature_tables(const SolutionTuple& t) {
  CurvatureTable out;
  const double l2 = t.lam * t.lam;
  out.x1 = {t.lambda1(), 1.0};
  const double k2 = std::sqrt(l2 + t.alpha * t.alpha);
  if (t.alpha == 0.0) {
    out.x2 = {k2};
  } else {
    out.x2 = {k2, t.alpha / k2 * std::sqrt(l2 + 1.0), -t.lam * std::sqrt(l2 + 1.0) / k2};
  }
  if (t.delta == 0.0) {
    out.x3 = {std::sqrt(l2 + t.gamma * t.gamma)};
    out.x3_circle = true;
  } else {
    const double k3 = std::sqrt(l2 + t.gamma * t.gamma + t.delta * t.delta);
    const double k3_2 = t.delta / k3 * std::sqrt(l2 + t.gamma * t.gamma + 1.0);
    out.x3 = {k3, k3_2, k3_2 * std::sqrt(l2 + t.gamma * t.gamma) / t.delta};
  }
  return out;
}

}  // namespace sasaki
