#include "sasaki/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace sasaki {

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim(double abs_tol) {
  while (!c_.empty() && std::abs(c_.back()) <= abs_tol) c_.pop_back();
}

double Polynomial::operator()(double x) const {
  double v = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() < 2) return {};
  std::vector<double> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
  return Polynomial(std::move(d));
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& a) {
  std::vector<double> c = a.c_;
  for (double& v : c) v *= s;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divide(const Polynomial& a, const Polynomial& b, double rel_tol) {
  if (b.is_zero()) throw std::domain_error("Polynomial::divide: division by zero");
  std::vector<double> r = a.c_;
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<double> q(a.degree() - db + 1, 0.0);
  for (int k = a.degree() - db; k >= 0; --k) {
    const double f = r[k + db] / b.leading();
    q[k] = f;
    for (int j = 0; j <= db; ++j) r[k + j] -= f * b.c_[j];
    r[k + db] = 0.0;
  }
  r.resize(db);
  Polynomial rem;
  rem.c_ = std::move(r);
  const double scale = std::max(a.max_abs_coeff(), 1.0);
  rem.trim(rel_tol * scale);
  return {Polynomial(std::move(q)), rem};
}

namespace {

Polynomial normalized(const Polynomial& p) { return (1.0 / p.max_abs_coeff()) * p; }

}  // namespace

Polynomial approximate_gcd(const Polynomial& a, const Polynomial& b, double rel_tol) {
  Polynomial x = normalized(a), y = normalized(b);
  if (y.is_zero()) return (1.0 / x.leading()) * x;
  while (!y.is_zero() && y.degree() > 0) {
    Polynomial r = Polynomial::divide(x, y, rel_tol).second;
    x = y;
    y = r.is_zero() ? r : normalized(r);
  }
  if (!y.is_zero()) return Polynomial({1.0});  // nonzero constant remainder: coprime
  return (1.0 / x.leading()) * x;
}

Polynomial square_free_part(const Polynomial& p, double rel_tol) {
  if (p.degree() < 1) return p;
  const Polynomial g = approximate_gcd(p, p.derivative(), rel_tol);
  if (g.degree() < 1) return normalized(p);
  return normalized(Polynomial::divide(p, g).first);
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p, p.derivative()};
  while (seq.back().degree() > 0) {
    const Polynomial r = Polynomial::divide(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back((-1.0) * r);
  }
  return seq;
}

namespace {

int sign_changes(const std::vector<Polynomial>& seq, double x) {
  int changes = 0;
  double last = 0.0;
  for (const auto& q : seq) {
    const double v = q(x);
    if (v == 0.0) continue;
    if (last != 0.0 && (v > 0.0) != (last > 0.0)) ++changes;
    last = v;
  }
  return changes;
}

double newton_polish(const Polynomial& p, double x, double lo, double hi) {
  const Polynomial dp = p.derivative();
  for (int it = 0; it < 50; ++it) {
    const double d = dp(x);
    if (d == 0.0) break;
    const double next = x - p(x) / d;
    if (!(next >= lo && next <= hi)) break;
    if (next == x) break;
    x = next;
  }
  return x;
}

}  // namespace

int sturm_count(const std::vector<Polynomial>& seq, double lo, double hi) {
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

std::vector<RealRoot> real_roots(const Polynomial& p, double width) {
  if (p.is_zero()) throw RootIsolationError("real_roots: zero polynomial");
  if (p.degree() < 1) return {};
  const Polynomial q = square_free_part(p);
  const auto seq = sturm_sequence(q);

  // Cauchy bound
  double bound = 0.0;
  for (int i = 0; i < q.degree(); ++i) bound = std::max(bound, std::abs(q.coeffs()[i] / q.leading()));
  bound += 1.0;

  std::vector<std::pair<double, double>> pending{{-bound, bound}}, isolated;
  while (!pending.empty()) {
    auto [lo, hi] = pending.back();
    pending.pop_back();
    const int n = sturm_count(seq, lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    if (hi - lo < width) throw RootIsolationError("real_roots: roots not separable at the requested width");
    const double mid = 0.5 * (lo + hi);
    pending.emplace_back(lo, mid);
    pending.emplace_back(mid, hi);
  }

  std::vector<RealRoot> roots;
  for (auto [lo, hi] : isolated) {
    while (hi - lo > width * std::max(1.0, std::abs(lo))) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (sturm_count(seq, lo, mid) == 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    RealRoot r;
    r.bracket_lo = lo;
    r.bracket_hi = hi;
    const double x0 = 0.5 * (lo + hi);
    const double pad = 1e-8 * std::max(1.0, std::abs(x0));
    r.multiple = std::abs(p.derivative()(x0)) <= 1e-7 * p.max_abs_coeff() * std::max(1.0, std::pow(std::abs(x0), p.degree()));
    r.value = newton_polish(r.multiple ? q : p, x0, lo - pad, hi + pad);
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  return roots;
}

}  // namespace sasaki
