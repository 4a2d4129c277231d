#include "sasaki/jets.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sasaki {

namespace {

struct Term {
  std::uint16_t lhs, rhs, out;
};

struct Layout {
  int vars = 0;
  std::vector<std::array<int, Jet::kMaxVars>> exponents;
  std::array<std::size_t, Jet::kMaxOrder + 2> count_upto{};  // monomials of degree < d
  std::vector<int> index_of;                                 // base-(kMaxOrder+1) code -> index
  // derivative[v][k] = (source index, factor) for the k-th monomial of the result
  std::array<std::vector<std::pair<std::uint16_t, double>>, Jet::kMaxVars> derivative;
  std::vector<Term> products;  // sorted by degree of `out`
  std::array<std::size_t, Jet::kMaxOrder + 2> products_upto{};
  std::array<double, Jet::kMaxOrder + 1> factorial{};

  int code(const std::array<int, Jet::kMaxVars>& e) const {
    int k = 0;
    for (int v = vars - 1; v >= 0; --v) k = k * (Jet::kMaxOrder + 1) + e[v];
    return k;
  }

  int degree(std::size_t i) const {
    int d = 0;
    for (int v = 0; v < vars; ++v) d += exponents[i][v];
    return d;
  }

  explicit Layout(int nv) : vars(nv) {
    for (int d = 0; d <= Jet::kMaxOrder; ++d) {
      count_upto[d] = exponents.size();
      // all exponent tuples of total degree d, lexicographic
      std::array<int, Jet::kMaxVars> e{};
      auto rec = [&](auto&& self, int v, int left) -> void {
        if (v == vars - 1) {
          e[v] = left;
          exponents.push_back(e);
          return;
        }
        for (int k = left; k >= 0; --k) {
          e[v] = k;
          self(self, v + 1, left - k);
        }
        e[v] = 0;
      };
      rec(rec, 0, d);
    }
    count_upto[Jet::kMaxOrder + 1] = exponents.size();

    int codes = 1;
    for (int v = 0; v < vars; ++v) codes *= (Jet::kMaxOrder + 1);
    index_of.assign(codes, -1);
    for (std::size_t i = 0; i < exponents.size(); ++i) index_of[code(exponents[i])] = static_cast<int>(i);

    for (int v = 0; v < vars; ++v) {
      for (std::size_t i = 0; i < count_upto[Jet::kMaxOrder]; ++i) {
        auto e = exponents[i];
        e[v] += 1;
        derivative[v].emplace_back(static_cast<std::uint16_t>(index_of[code(e)]), static_cast<double>(e[v]));
      }
    }

    for (std::size_t i = 0; i < exponents.size(); ++i) {
      for (std::size_t j = 0; j < exponents.size(); ++j) {
        if (degree(i) + degree(j) > Jet::kMaxOrder) continue;
        std::array<int, Jet::kMaxVars> e{};
        for (int v = 0; v < vars; ++v) e[v] = exponents[i][v] + exponents[j][v];
        products.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j),
                            static_cast<std::uint16_t>(index_of[code(e)])});
      }
    }
    std::stable_sort(products.begin(), products.end(),
                     [&](const Term& a, const Term& b) { return degree(a.out) < degree(b.out); });
    std::size_t k = 0;
    for (int d = 0; d <= Jet::kMaxOrder + 1; ++d) {
      while (k < products.size() && degree(products[k].out) < d) ++k;
      products_upto[d] = k;
    }

    factorial[0] = 1.0;
    for (int d = 1; d <= Jet::kMaxOrder; ++d) factorial[d] = factorial[d - 1] * d;
  }
};

const Layout& layout(int vars) {
  static const std::array<Layout, Jet::kMaxVars> layouts = {Layout(1), Layout(2), Layout(3), Layout(4)};
  return layouts[vars - 1];
}

void check_shape(int vars, int order) {
  if (vars < 1 || vars > Jet::kMaxVars) throw std::out_of_range("jet: variable count " + std::to_string(vars));
  if (order < 0 || order > Jet::kMaxOrder) throw std::out_of_range("jet: order " + std::to_string(order));
}

void check_same_vars(const Jet& a, const Jet& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("jet: mismatched variable counts");
}

}  // namespace

Jet::Jet(int vars, int order) : vars_(vars), order_(order) { check_shape(vars, order); }

std::size_t Jet::size() const { return layout(vars_).count_upto[order_ + 1]; }

Jet Jet::constant(double value, int vars, int order) {
  Jet j(vars, order);
  j.c_[0] = value;
  return j;
}

Jet Jet::variable(double value, int var, int vars, int order) {
  Jet j(vars, order);
  if (var < 0 || var >= vars) throw std::out_of_range("jet: variable index " + std::to_string(var));
  j.c_[0] = value;
  if (order >= 1) j.c_[1 + var] = 1.0;
  return j;
}

double Jet::coeff(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != vars_) throw std::invalid_argument("jet: multi-index length");
  std::array<int, kMaxVars> e{};
  int deg = 0;
  for (int v = 0; v < vars_; ++v) {
    if (exponents[v] < 0) throw std::invalid_argument("jet: negative exponent");
    e[v] = exponents[v];
    deg += e[v];
  }
  if (deg > order_) throw std::domain_error("jet: derivative order " + std::to_string(deg) + " exceeds jet order");
  const Layout& L = layout(vars_);
  return c_[L.index_of[L.code(e)]];
}

double Jet::partial(std::span<const int> multi_index) const {
  double scale = 1.0;
  const Layout& L = layout(vars_);
  for (int k : multi_index) {
    if (k >= 0 && k <= kMaxOrder) scale *= L.factorial[k];
  }
  return coeff(multi_index) * scale;
}

Jet Jet::derivative(int var) const {
  if (var < 0 || var >= vars_) throw std::out_of_range("jet: variable index " + std::to_string(var));
  if (order_ == 0) throw std::domain_error("jet: cannot differentiate an order-0 jet");
  Jet out(vars_, order_ - 1);
  const auto& d = layout(vars_).derivative[var];
  const std::size_t n = out.size();
  for (std::size_t k = 0; k < n; ++k) out.c_[k] = d[k].second * c_[d[k].first];
  return out;
}

Jet Jet::truncated(int order) const {
  if (order > order_) throw std::domain_error("jet: cannot raise jet order");
  Jet out(vars_, order);
  std::copy_n(c_.begin(), out.size(), out.c_.begin());
  return out;
}

Jet& Jet::operator+=(const Jet& o) {
  check_same_vars(*this, o);
  order_ = std::min(order_, o.order_);
  const std::size_t n = size();
  for (std::size_t k = 0; k < n; ++k) c_[k] += o.c_[k];
  std::fill(c_.begin() + n, c_.end(), 0.0);
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  check_same_vars(*this, o);
  order_ = std::min(order_, o.order_);
  const std::size_t n = size();
  for (std::size_t k = 0; k < n; ++k) c_[k] -= o.c_[k];
  std::fill(c_.begin() + n, c_.end(), 0.0);
  return *this;
}

Jet& Jet::operator*=(double s) {
  const std::size_t n = size();
  for (std::size_t k = 0; k < n; ++k) c_[k] *= s;
  return *this;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }

Jet operator*(const Jet& a, const Jet& b) {
  check_same_vars(a, b);
  Jet out(a.vars_, std::min(a.order_, b.order_));
  const Layout& L = layout(a.vars_);
  const std::size_t n = L.products_upto[out.order_ + 1];
  for (std::size_t k = 0; k < n; ++k) {
    const Term& t = L.products[k];
    out.c_[t.out] += a.c_[t.lhs] * b.c_[t.rhs];
  }
  return out;
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

Jet Jet::compose(std::span<const double> taylor) const {
  Jet h = *this;
  h.c_[0] = 0.0;
  // Horner: sum_k t_k h^k; h has no constant term so h^(order+1) vanishes.
  Jet acc = constant(taylor[order_], vars_, order_);
  for (int k = order_ - 1; k >= 0; --k) {
    acc = acc * h;
    acc.c_[0] += taylor[k];
  }
  return acc;
}

Jet sin(const Jet& x) {
  const double s = std::sin(x.value()), c = std::cos(x.value());
  std::array<double, Jet::kMaxOrder + 1> t{};
  const double cyc[4] = {s, c, -s, -c};
  double f = 1.0;
  for (int k = 0; k <= Jet::kMaxOrder; ++k) {
    if (k > 0) f *= k;
    t[k] = cyc[k % 4] / f;
  }
  return x.compose(t);
}

Jet cos(const Jet& x) {
  const double s = std::sin(x.value()), c = std::cos(x.value());
  std::array<double, Jet::kMaxOrder + 1> t{};
  const double cyc[4] = {c, -s, -c, s};
  double f = 1.0;
  for (int k = 0; k <= Jet::kMaxOrder; ++k) {
    if (k > 0) f *= k;
    t[k] = cyc[k % 4] / f;
  }
  return x.compose(t);
}

Jet exp(const Jet& x) {
  const double e = std::exp(x.value());
  std::array<double, Jet::kMaxOrder + 1> t{};
  double f = 1.0;
  for (int k = 0; k <= Jet::kMaxOrder; ++k) {
    if (k > 0) f *= k;
    t[k] = e / f;
  }
  return x.compose(t);
}

Jet sqrt(const Jet& x) {
  const double x0 = x.value();
  if (!(x0 > 0.0)) throw std::domain_error("jet: sqrt needs a positive value");
  std::array<double, Jet::kMaxOrder + 1> t{};
  // binomial(1/2, k) x0^(1/2 - k)
  double binom = 1.0;
  for (int k = 0; k <= Jet::kMaxOrder; ++k) {
    if (k > 0) binom *= (0.5 - (k - 1)) / k;
    t[k] = binom * std::pow(x0, 0.5 - k);
  }
  return x.compose(t);
}

Jet reciprocal(const Jet& x) {
  const double x0 = x.value();
  if (x0 == 0.0) throw std::domain_error("jet: reciprocal of zero");
  std::array<double, Jet::kMaxOrder + 1> t{};
  double p = 1.0 / x0;
  for (int k = 0; k <= Jet::kMaxOrder; ++k) {
    t[k] = p;
    p *= -1.0 / x0;
  }
  return x.compose(t);
}

std::vector<Jet> seed_point(const Eigen::VectorXd& p, int order) {
  const int vars = static_cast<int>(p.size());
  std::vector<Jet> out;
  out.reserve(vars);
  for (int i = 0; i < vars; ++i) out.push_back(Jet::variable(p[i], i, vars, order));
  return out;
}

Jet dot(const JetVector& a, const JetVector& b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("jet dot: length mismatch");
  Jet acc = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

JetVector operator+(const JetVector& a, const JetVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("jet vector: length mismatch");
  JetVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

JetVector operator-(const JetVector& a, const JetVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("jet vector: length mismatch");
  JetVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

JetVector operator*(const Jet& s, const JetVector& v) {
  JetVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(s * x);
  return out;
}

JetVector operator*(double s, const JetVector& v) {
  JetVector out(v);
  for (auto& x : out) x *= s;
  return out;
}

JetVector derivative(const JetVector& v, int var) {
  JetVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.derivative(var));
  return out;
}

Eigen::VectorXd values(const JetVector& v) {
  Eigen::VectorXd out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].value();
  return out;
}

Eigen::VectorXd partial(const JetVector& v, std::span<const int> multi_index) {
  Eigen::VectorXd out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].partial(multi_index);
  return out;
}

}  // namespace sasaki
