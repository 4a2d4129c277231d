#include "sasaki/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sasaki/example_immersions.hpp"
#include "sasaki/frenet.hpp"

namespace sasaki {

namespace {

using nlohmann::json;
using std::sqrt;
constexpr double kPi = std::numbers::pi;

struct Symbol {
  double value;
  const char* text;
};

// Closed forms that appear in reports.
const std::vector<Symbol>& symbols() {
  static const std::vector<Symbol> table = [] {
    const double s2 = sqrt(2.0), s3 = sqrt(3.0), s5 = sqrt(5.0), s10 = sqrt(10.0), s13 = sqrt(13.0),
                 s145 = sqrt(145.0);
    return std::vector<Symbol>{
        {0.0, "0"},
        {1.0, "1"},
        {2.0 / 3.0, "2/3"},
        {0.5, "1/2"},
        {-1.0 / s5, "-1/sqrt(5)"},
        {3.0 * s3 / s10, "3 sqrt(3)/sqrt(10)"},
        {-s3 / s10, "-sqrt(3)/sqrt(10)"},
        {s2, "sqrt(2)"},
        {4.0 * s5 / 5.0, "4 sqrt(5)/5"},
        {sqrt(29.0) / s10, "sqrt(29)/sqrt(10)"},
        {9.0 * s2 / s145, "9 sqrt(2)/sqrt(145)"},
        {2.0 * s3 / s145, "2 sqrt(3)/sqrt(145)"},
        {s5 / s2, "sqrt(5)/sqrt(2)"},
        {2.0 * s3 / s10, "2 sqrt(3)/sqrt(10)"},
        {s3 / s10, "sqrt(3)/sqrt(10)"},
        {1.0 / s2, "1/sqrt(2)"},
        {1.0 / sqrt(6.0), "1/sqrt(6)"},
        {s3 / 2.0, "sqrt(3)/2"},
        {-sqrt((4.0 - s13) / 3.0), "-sqrt((4-sqrt(13))/3)"},
        {(4.0 - s13) / 3.0, "(4-sqrt(13))/3"},
        {sqrt((7.0 - s13) / 6.0), "sqrt((7-sqrt(13))/6)"},
        {-sqrt((7.0 - s13) / 6.0), "-sqrt((7-sqrt(13))/6)"},
        {-sqrt(1.0 / (5.0 + 2.0 * s3)), "-sqrt(1/(5+2 sqrt(3)))"},
        {sqrt((45.0 + 21.0 * s3) / 13.0), "sqrt((45+21 sqrt(3))/13)"},
        {-sqrt(6.0 / (21.0 + 11.0 * s3)), "-sqrt(6/(21+11 sqrt(3)))"},
        {-sqrt(1.0 / (6.0 + s13)), "-sqrt(1/(6+sqrt(13)))"},
        {sqrt((523.0 + 139.0 * s13) / 138.0), "sqrt((523+139 sqrt(13))/138)"},
        {-sqrt((79.0 - 17.0 * s13) / 138.0), "-sqrt((79-17 sqrt(13))/138)"},
        {sqrt((14.0 + 2.0 * s13) / 3.0), "sqrt((14+2 sqrt(13))/3)"},
        {(s13 - 1.0) / sqrt(12.0 - 3.0 * s13), "(sqrt(13)-1)/sqrt(12-3 sqrt(13))"},
        {sqrt(3.0 / (7.0 - s13)), "sqrt(3/(7-sqrt(13)))"},
        {sqrt((5.0 - s13) / 12.0), "sqrt((5-sqrt(13))/12)"},
        {sqrt((7.0 + s13) / 36.0), "sqrt((7+sqrt(13))/36)"},
        {sqrt((3.0 + s3) / 12.0), "sqrt((3+sqrt(3))/12)"},
        {sqrt((3.0 - s3) / 12.0), "sqrt((3-sqrt(3))/12)"},
        {sqrt((5.0 + s13) / 12.0), "sqrt((5+sqrt(13))/12)"},
        {sqrt((7.0 - s13) / 36.0), "sqrt((7-sqrt(13))/36)"},
    };
  }();
  return table;
}

json scalar(double v) {
  json s = {{"value", v}, {"decimal", decimal17(v)}};
  for (const Symbol& sym : symbols()) {
    if (std::abs(sym.value - v) <= 1e-13 * std::max(1.0, std::abs(v))) {
      s["symbolic"] = sym.text;
      break;
    }
  }
  return s;
}

json scalars(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(scalar(x));
  return a;
}

void set_scalar(VerificationReport& r, const std::string& key, double v) { r.set(key, scalar(v)); }

json grid_spec(const ParametricImmersion& f, int per_axis, std::size_t points) {
  json cell = json::array();
  for (const Point& a : f.lattice) cell.push_back(std::vector<double>(a.data(), a.data() + a.size()));
  return {{"per_axis", per_axis},
          {"points", points},
          {"cell", f.lattice.empty() ? json("[0, 2 pi)^m") : cell}};
}

double max_diff_sorted(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

struct Suite {
  VerificationReport& report;
  const ParametricImmersion& f;
  Grid grid;
  Execution ex;

  void core() {
    report.add(check_flat_chart(f, grid, ex));
    report.add(check_unit_norm(f, grid, 1e-13, ex));
  }

  void integral_c_parallel() {
    report.add(check_integral(f, grid, ex));
    report.add(check_gauss_orthogonality(f, grid, ex));
    const CParallelResult cp = check_C_parallel(f, grid, kGeometryTol, ex);
    report.add(cp.c_parallel);
    report.add(cp.symmetry);
    const NormalLaplacianResult nl = check_normal_laplacian(f, grid, kGeometryTol, ex);
    report.add(nl.laplacian);
    report.add(nl.constant_norm);
  }

  void mean_curvature(const std::string& key, std::optional<double> expected) {
    double lo = INFINITY, hi = 0.0;
    for (const Point& p : grid) {
      const double h = tension(f, p).norm() / f.m;
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
    set_scalar(report, key, 0.5 * (lo + hi));
    if (expected) report.add(make_check(key, std::max(std::abs(lo - *expected), std::abs(hi - *expected)), 1e-10));
  }

  // trace B(., A_H .) = k H over the grid, and the Gram-matrix form at one point.
  void eigen_criterion(double k) {
    double worst = 0.0;
    for (const Point& p : grid) {
      const AmbientVector h = tension(f, p) / f.m;
      worst = std::max(worst, (trace_B_AH(f, p) - k * h).norm());
    }
    report.add(make_check("trace_B_AH_eq_kH", worst, kGeometryTol));
    const GramResidual g = gram_criterion_residual(shape_operators(f, grid.front()), k);
    report.add(make_check("gram_eigen_criterion", g.r.norm() / std::max(1.0, g.t.norm()), 1e-10));
  }

  void bitension(BitensionMode mode) { report.add(check_bitension(f, grid, mode, kGeometryTol, ex)); }

  void frenet_curve(const std::string& label, const ParametricImmersion& curve, int expected_order,
                    const std::vector<double>& expected) {
    std::vector<double> s;
    for (int i = 0; i < 5; ++i) s.push_back(2.0 * kPi * i / 5.0);
    const FrenetApparatus app = frenet(curve, s, 4);
    std::vector<double> means;
    double spread = 0.0, diff = app.curvatures.size() == expected.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < app.curvatures.size(); ++i) {
      means.push_back(app.curvatures[i].mean);
      spread = std::max(spread, app.curvatures[i].spread);
      if (i < expected.size())
        for (double v : app.curvatures[i].samples) diff = std::max(diff, std::abs(v - expected[i]));
    }
    report.add(make_check(label + "_order", std::abs(app.order - expected_order) + (app.indeterminate ? 1.0 : 0.0), 0.5));
    report.add(make_check(label + "_curvatures", diff, 1e-8));
    report.add(make_check(label + "_constancy", spread, 1e-8));
    report.add(make_check(label + "_frenet_equations", app.frenet_residual, 1e-7));
    report.add(make_check(label + "_frame_orthonormal", app.frame_error, 1e-9));
    report.set(label + "_curvatures", scalars(means));
    report.set(label + "_order", app.order);
    if (app.order >= 2) report.set(label + "_phi_alignment", scalar(phi_alignment(app).mean));
  }

  void coordinate_frenet(int axis, int expected_order, const std::vector<double>& expected) {
    const ParametricImmersion curve = coordinate_curve(f, axis, Point::Zero(f.m));
    frenet_curve("X" + std::to_string(axis + 1), curve, expected_order, expected);
  }

  void decomposition(const std::vector<double>& expected) {
    const CircleProduct cp = circle_decomposition(f);
    report.add(make_check("circle_radii", max_diff_sorted(cp.radii, expected), 1e-10));
    report.add(make_check("circle_radius_sum", cp.radius_sum_error, 1e-12));
    report.add(make_check("circle_modulus_constant", cp.modulus_spread, 1e-10));
    std::vector<double> sorted = cp.radii;
    std::sort(sorted.begin(), sorted.end());
    report.set("radii", scalars(sorted));
  }

  void lattice(const std::vector<Point>& gens, const std::string& name = "lattice") {
    CheckResult c = lattice_check(f, gens);
    c.name = name;
    report.add(c);
  }

  void eigencheck(const LaplacianSplit& split, double mu1, double mu2) {
    const EigenCheckResult e = coordinate_laplacian_eigencheck(f, split, grid);
    report.add(e.first);
    report.add(e.second);
    report.add(make_check("laplacian_mu_first", std::abs(e.mu_first - mu1), 1e-10));
    report.add(make_check("laplacian_mu_second", std::abs(e.mu_second - mu2), 1e-10));
    report.set("laplacian_eigenvalues", scalars({e.mu_first, e.mu_second}));
  }
};


VerificationReport run(const std::string& name, const ParametricImmersion& f, const VerifyOptions& opt,
                       const std::function<void(Suite&)>& body) {
  VerificationReport report(name);
  Suite s{report, f, period_grid(f, opt.grid), opt.execution};
  report.set("grid", grid_spec(f, opt.grid, s.grid.size()));
  body(s);
  if (opt.tol) {
    report.override_tolerance(*opt.tol);
    report.set("tolerance_override", *opt.tol);
  }
  return report;
}

LaplacianSplit corollary_split(const UnitaryBasis& basis) { return {basis, {3}, {0, 1, 2}}; }

std::vector<double> minus4_radii(int k) {
  const double s3 = sqrt(3.0), s13 = sqrt(13.0);
  switch (k) {
    case 1: {
      const double r = sqrt((7.0 + s13) / 36.0);
      return {sqrt((5.0 - s13) / 12.0), r, r, r};
    }
    case 2: {
      const double a = sqrt((3.0 + s3) / 12.0), b = sqrt((3.0 - s3) / 12.0);
      return {a, a, b, b};
    }
    default: {
      const double r = sqrt((7.0 - s13) / 36.0);
      return {sqrt((5.0 + s13) / 12.0), r, r, r};
    }
  }
}

int parse_suffix_index(const std::string& name, const std::string& prefix) {
  const std::string tail = name.substr(prefix.size());
  if (tail != "1" && tail != "2" && tail != "3") throw UnknownExample("unknown example: " + name);
  return tail[0] - '0';
}

json tuple_json(const SolutionTuple& t) {
  const CurvatureTable ct = curvature_tables(t);
  return {{"lambda", scalar(t.lam)},
          {"alpha", scalar(t.alpha)},
          {"gamma", scalar(t.gamma)},
          {"delta", scalar(t.delta)},
          {"lambda1", scalar(t.lambda1())},
          {"boundary", t.boundary},
          {"fallback", t.fallback},
          {"curvatures", {{"X1", scalars(ct.x1)}, {"X2", scalars(ct.x2)}, {"X3", scalars(ct.x3)},
                          {"X3_circle", ct.x3_circle}}}};
}

json case2_json(const CaseIIEntry& e) {
  json j = {{"case", e.kind == SolutionCase::CaseII_1 ? "II(1)" : "II(2)"},
            {"kappa1", scalar(e.kappa1)},
            {"kappa2", scalar(e.kappa2)},
            {"sphere_radius", scalar(e.radius)}};
  if (e.lam) {
    j["lambda"] = scalar(*e.lam);
    j["lambda_squared"] = scalar(*e.lam * *e.lam);
  }
  return j;
}

json traces_json(const FlatClassification& fc) {
  json a = json::array();
  for (const ReductionTrace& t : fc.traces) {
    json roots = json::array();
    for (const CandidateRoot& r : t.roots) {
      json jr = {{"value", scalar(r.value)}, {"accepted", r.accepted}};
      if (!r.accepted) jr["reason"] = r.reason;
      roots.push_back(jr);
    }
    json jt = {{"branch", to_string(t.branch)}, {"polynomial", t.polynomial}, {"roots", roots}};
    if (!t.error.empty()) jt["error"] = t.error;
    a.push_back(jt);
  }
  return a;
}

void add_flat_checks(VerificationReport& r, const SystemCoefficients& s, const FlatClassification& fc,
                     const std::string& prefix) {
  for (std::size_t i = 0; i < fc.tuples.size(); ++i) {
    const SolutionTuple& t = fc.tuples[i];
    double res = 0.0;
    for (double v : flat_system_residual(s, t.lam, t.alpha, t.gamma, t.delta)) res = std::max(res, std::abs(v));
    const double crit = s.mode == CriterionMode::minus4 ? minus4_criterion_residual(t.params()).norm()
                                                        : expanded_system_residual(t.params(), s.c).norm();
    const std::string id = prefix + "tuple" + std::to_string(i + 1);
    r.add(make_check(id + "_system", res, 1e-10));
    r.add(make_check(id + "_criterion", crit, 1e-10));
    r.add(make_check(id + "_constraints", check_flat_constraints(s, t.lam, t.alpha, t.gamma, t.delta).ok ? 0.0 : 1.0,
                     0.5));
  }
  for (const ReductionTrace& t : fc.traces)
    if (!t.error.empty()) r.add(make_check(prefix + to_string(t.branch) + "_isolation", 1.0, 0.5));
}

json flat_json(const FlatClassification& fc) {
  json a = json::array();
  for (const SolutionTuple& t : fc.tuples) a.push_back(tuple_json(t));
  return a;
}

void add_case2_checks(VerificationReport& r, const std::vector<CaseIIEntry>& entries, double c,
                      const std::string& prefix) {
  const double K = (c + 3.0) / 4.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const CaseIIEntry& e = entries[i];
    if (!e.lam) continue;
    const double l2 = *e.lam * *e.lam;
    const double q = 3.0 * l2 * l2 - 2.0 * (c + 1.0) * l2 + K * K;
    r.add(make_check(prefix + "caseII_" + std::to_string(i + 1) + "_equation", std::abs(q), 1e-12));
  }
}

}  // namespace

std::vector<std::string> registered_examples() {
  return {"corollary-c1",     "s5-surface",       "cylinder-c1",      "cylinder-s5",      "legendre-circle",
          "legendre-helix:<k1>", "minus4-1",      "minus4-2",         "minus4-3",         "cylinder-minus4-1",
          "cylinder-minus4-2", "cylinder-minus4-3", "clifford-torus"};
}

VerificationReport verify_example(const std::string& name, const VerifyOptions& opt) {
  if (opt.grid < 1) throw std::invalid_argument("grid must be at least 1");
  const double s2 = sqrt(2.0), s5 = sqrt(5.0);

  if (name == "corollary-c1") {
    const ParametricImmersion f = corollary_c1();
    return run(name, f, opt, [&](Suite& s) {
      s.core();
      s.integral_c_parallel();
      s.bitension(BitensionMode::biharmonic);
      s.mean_curvature("mean_curvature", 2.0 / 3.0);
      s.eigen_criterion(2.0);
      s.coordinate_frenet(0, 3, {4.0 * s5 / 5.0, 1.0});
      s.coordinate_frenet(1, 4, {sqrt(29.0) / sqrt(10.0), 9.0 * s2 / sqrt(145.0), 2.0 * sqrt(3.0) / sqrt(145.0)});
      s.coordinate_frenet(2, 4, {s5 / s2, 2.0 * sqrt(3.0) / sqrt(10.0), sqrt(3.0) / sqrt(10.0)});
      s.lattice(f.lattice);
      s.decomposition({1.0 / s2, 1.0 / sqrt(6.0), 1.0 / sqrt(6.0), 1.0 / sqrt(6.0)});
      s.eigencheck(corollary_split(*f.torus_basis), 1.0, 5.0);
      s.report.set("tuple", tuple_json(corollary_tuple()));
    });
  }
  if (name == "cylinder-c1") {
    const ParametricImmersion x = corollary_c1();
    const ParametricImmersion f = cylinder(x);
    return run(name, f, opt, [&](Suite& s) {
      s.core();
      s.report.add(check_gauss_orthogonality(f, s.grid, s.ex)[0]);
      s.bitension(BitensionMode::biharmonic);
      s.mean_curvature("mean_curvature", 0.5);
      s.decomposition({1.0 / s2, 1.0 / sqrt(6.0), 1.0 / sqrt(6.0), 1.0 / sqrt(6.0)});
      s.lattice(f.lattice, "lattice_product");
      // Torus lattice in the original coordinates q = M^T q~.
      const Eigen::Matrix4d M = cylinder_change_of_variables();
      std::vector<Point> gens;
      for (const Point& a : cylinder_c1_diagonal_lattice()) gens.push_back(M.transpose() * a);
      s.lattice(gens, "lattice_torus");
      s.report.add(make_check("change_of_variables_orthogonal",
                              (M * M.transpose() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff(), 1e-14));
      const ParametricImmersion diag = cylinder_c1_diagonal();
      double worst = 0.0;
      for (const Point& q : s.grid) worst = std::max(worst, (diag.evaluate(M * q) - f.evaluate(q)).norm());
      s.report.add(make_check("change_of_variables_image", worst, 1e-12));
      CheckResult diag_lattice = lattice_check(diag, diag.lattice);
      diag_lattice.name = "lattice_diagonal";
      s.report.add(diag_lattice);
      s.eigencheck(corollary_split(*f.torus_basis), 2.0, 6.0);
    });
  }
  if (name == "s5-surface") {
    const ParametricImmersion f = s5_surface();
    return run(name, f, opt, [&](Suite& s) {
      s.core();
      s.integral_c_parallel();
      s.bitension(BitensionMode::biharmonic);
      s.mean_curvature("mean_curvature", std::nullopt);
      s.eigen_criterion(biharmonic_eigenvalue(1.0, 2));
      s.lattice(f.lattice);
      s.decomposition({1.0 / s2, 0.5, 0.5});
    });
  }
  if (name == "cylinder-s5") {
    const ParametricImmersion f = cylinder(s5_surface());
    return run(name, f, opt, [&](Suite& s) {
      s.core();
      s.report.add(check_gauss_orthogonality(f, s.grid, s.ex)[0]);
      s.bitension(BitensionMode::biharmonic);
      s.mean_curvature("mean_curvature", std::nullopt);
      s.lattice(f.lattice);
      s.decomposition({1.0 / s2, 0.5, 0.5});
    });
  }
  if (name == "legendre-circle") {
    const ParametricImmersion f = legendre_circle(3);
    return run(name, f, opt, [&](Suite& s) {
      s.core();
      s.report.add(check_integral(f, s.grid, s.ex));
      s.bitension(BitensionMode::biharmonic);
      s.frenet_curve("curve", f, 2, {1.0});
      const double align = phi_alignment(frenet(f, {0.0, 1.0, 2.0}, 4)).mean;
      s.report.add(make_check("phi_alignment_zero", std::abs(align), 1e-10));
      s.lattice(f.lattice);
    });
  }
  if (name.rfind("legendre-helix:", 0) == 0) {
    double k1 = 0.0;
    try {
      std::size_t used = 0;
      const std::string arg = name.substr(15);
      k1 = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw UnknownExample("legendre-helix expects a curvature, e.g. legendre-helix:0.5");
    }
    if (!(k1 > 0.0 && k1 < 1.0)) throw UnknownExample("legendre-helix curvature must lie in (0, 1)");
    const ParametricImmersion f = legendre_helix(k1);
    return run(name, f, opt, [&](Suite& s) {
      s.core();
      s.report.add(check_integral(f, s.grid, s.ex));
      s.bitension(BitensionMode::biharmonic);
      s.frenet_curve("curve", f, 3, {k1, sqrt(1.0 - k1 * k1)});
      set_scalar(s.report, "A", sqrt(1.0 + k1));
      set_scalar(s.report, "B", sqrt(1.0 - k1));
    });
  }
  if (name.rfind("minus4-", 0) == 0) {
    const int k = parse_suffix_index(name, "minus4-");
    const ParametricImmersion f = minus4_immersion(k);
    const CurvatureTable ct = curvature_tables(minus4_tuple(k));
    return run(name, f, opt, [&](Suite& s) {
      s.core();
      s.integral_c_parallel();
      s.bitension(BitensionMode::minus4);
      s.mean_curvature("mean_curvature", std::nullopt);
      s.eigen_criterion(6.0);
      s.coordinate_frenet(0, 3, ct.x1);
      s.coordinate_frenet(1, 4, ct.x2);
      s.coordinate_frenet(2, ct.x3_circle ? 2 : 4, ct.x3);
      s.report.set("tuple", tuple_json(minus4_tuple(k)));
    });
  }
  if (name.rfind("cylinder-minus4-", 0) == 0) {
    const int k = parse_suffix_index(name, "cylinder-minus4-");
    const ParametricImmersion f = cylinder(minus4_immersion(k));
    return run(name, f, opt, [&](Suite& s) {
      s.core();
      s.report.add(check_gauss_orthogonality(f, s.grid, s.ex)[0]);
      s.decomposition(minus4_radii(k));
    });
  }
  if (name == "clifford-torus") {
    const ParametricImmersion f = clifford_torus();
    return run(name, f, opt, [&](Suite& s) {
      s.core();
      s.integral_c_parallel();
      s.bitension(BitensionMode::biharmonic);
      s.mean_curvature("mean_curvature", 0.0);
      s.lattice(f.lattice);
      s.decomposition({0.5, 0.5, 0.5, 0.5});
    });
  }
  throw UnknownExample("unknown example: " + name);
}

VerificationReport classify_report(double c, const FallbackOptions& fb) {
  VerificationReport r("classify c=" + decimal17(c));
  r.set("c", scalar(c));
  r.set("mode", "biharmonic");
  const FlatClassification fc = solve_flat(c, fb);
  const std::vector<CaseIIEntry> case2 = solve_caseII(c);
  add_flat_checks(r, SystemCoefficients::biharmonic(c), fc, "");
  add_case2_checks(r, case2, c, "");
  r.set("flat", flat_json(fc));
  json c2 = json::array();
  for (const auto& e : case2) c2.push_back(case2_json(e));
  r.set("case_II", c2);
  r.set("traces", traces_json(fc));
  r.set("fallback_converged", fc.fallback_converged);
  if (!(c > -1.0 / 3.0)) r.set("note", "no proper-biharmonic solutions for c <= -1/3");
  return r;
}

VerificationReport classify_minus4_report(const FallbackOptions& fb) {
  VerificationReport r("classify minus4");
  r.set("mode", "minus4");
  const FlatClassification fc = solve_minus4_flat(fb);
  add_flat_checks(r, SystemCoefficients::minus4(), fc, "");
  const CaseIIEntry e = solve_minus4_caseII();
  const double s13 = sqrt(13.0);
  r.add(make_check("caseII_kappa1", std::abs(e.kappa1 - (s13 - 1.0) / sqrt(12.0 - 3.0 * s13)), 1e-12));
  r.add(make_check("caseII_radius", std::abs(e.radius - sqrt(3.0 / (7.0 - s13))), 1e-14));
  r.set("flat", flat_json(fc));
  r.set("case_II", json::array({case2_json(e)}));
  r.set("traces", traces_json(fc));
  r.set("fallback_converged", fc.fallback_converged);
  return r;
}

VerificationReport classify_sweep_report(double lo, double hi, double step, const FallbackOptions& fb) {
  if (!(step > 0.0) || !(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("invalid sweep: need lo <= hi and step > 0");
  const double count = std::floor((hi - lo) / step + 1e-9) + 1.0;
  if (count > 10000.0) throw std::invalid_argument("invalid sweep: more than 10000 values");
  VerificationReport r("classify sweep " + decimal17(lo) + ":" + decimal17(hi) + ":" + decimal17(step));
  json runs = json::array();
  for (int i = 0; i < static_cast<int>(count); ++i) {
    const double c = lo + i * step;
    const std::string prefix = "c=" + decimal17(c) + "/";
    const FlatClassification fc = solve_flat(c, fb);
    const std::vector<CaseIIEntry> case2 = solve_caseII(c);
    add_flat_checks(r, SystemCoefficients::biharmonic(c), fc, prefix);
    add_case2_checks(r, case2, c, prefix);
    json c2 = json::array();
    for (const auto& e : case2) c2.push_back(case2_json(e));
    runs.push_back({{"c", scalar(c)}, {"flat", flat_json(fc)}, {"case_II", c2}});
  }
  r.set("runs", runs);
  return r;
}

}  // namespace sasaki
