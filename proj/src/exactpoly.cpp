#include "sphharm/exactpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sphharm {

MultiIndex::MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("MultiIndex: negative exponent");
    degree_ += e;
  }
}

MultiIndex MultiIndex::zero(int d) {
  if (d < 1) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
  return MultiIndex(std::vector<int>(static_cast<std::size_t>(d), 0));
}

MultiIndex MultiIndex::unit(int d, int axis) {
  if (axis < 0 || axis >= d) throw std::out_of_range("MultiIndex: axis out of range");
  std::vector<int> e(static_cast<std::size_t>(d), 0);
  e[static_cast<std::size_t>(axis)] = 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::shifted(int axis, int delta) const {
  if (axis < 0 || axis >= dimension()) throw std::out_of_range("MultiIndex: axis out of range");
  std::vector<int> e = exps_;
  e[static_cast<std::size_t>(axis)] += delta;
  return MultiIndex(std::move(e));
}

BigInt MultiIndex::factorial() const {
  BigInt result = 1;
  for (int e : exps_) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e));
    result *= f;
  }
  return result;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("MultiIndex: dimension mismatch");
  std::vector<int> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
  return MultiIndex(std::move(e));
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.dimension() - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

void enumerate_degree(int remaining, int axis, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (axis == 0) {
    cur[0] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[static_cast<std::size_t>(axis)] = e;
    enumerate_degree(remaining - e, axis - 1, cur, out);
  }
  cur[static_cast<std::size_t>(axis)] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(int n, int d) {
  if (d < 1) throw std::invalid_argument("monomials_of_degree: d must be >= 1");
  std::vector<MultiIndex> out;
  if (n < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(d), 0);
  // Iterating the highest axis outermost with ascending exponents already
  // yields graded-lex order.
  enumerate_degree(n, d - 1, cur, out);
  return out;
}

MultiPoly::MultiPoly(int dimension) : dim_(dimension) {
  if (dimension < 1) throw std::invalid_argument("MultiPoly: dimension must be >= 1");
}

MultiPoly MultiPoly::constant(int d, const Rational& c) {
  MultiPoly p(d);
  p.add_term(MultiIndex::zero(d), c);
  return p;
}

MultiPoly MultiPoly::variable(int d, int axis) {
  MultiPoly p(d);
  p.add_term(MultiIndex::unit(d, axis), 1);
  return p;
}

MultiPoly MultiPoly::monomial(const MultiIndex& alpha, const Rational& c) {
  MultiPoly p(alpha.dimension());
  p.add_term(alpha, c);
  return p;
}

MultiPoly MultiPoly::norm_sq(int d) {
  MultiPoly p(d);
  for (int i = 0; i < d; ++i) p.add_term(MultiIndex::unit(d, i).shifted(i, 1), 1);
  return p;
}

std::optional<int> MultiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  // graded order puts the highest degree last
  return terms_.rbegin()->first.degree();
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Rational MultiPoly::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const MultiIndex& alpha, const Rational& c) {
  if (alpha.dimension() != dim_) throw std::invalid_argument("MultiPoly: term dimension mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::require_same_dimension(const MultiPoly& q) const {
  if (dim_ != q.dim_) {
    throw std::invalid_argument("MultiPoly: dimension mismatch (" + std::to_string(dim_) + " vs " +
                                std::to_string(q.dim_) + ")");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
  require_same_dimension(q);
  for (const auto& [a, c] : q.terms_) add_term(a, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
  require_same_dimension(q);
  for (const auto& [a, c] : q.terms_) add_term(a, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  p.require_same_dimension(q);
  MultiPoly r(p.dim_);
  for (const auto& [a, ca] : p.terms_) {
    for (const auto& [b, cb] : q.terms_) r.add_term(a + b, ca * cb);
  }
  return r;
}

MultiPoly operator-(const MultiPoly& p) {
  MultiPoly r = p;
  for (auto& [a, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const MultiPoly& p, const MultiPoly& q) {
  return p.dim_ == q.dim_ && p.terms_ == q.terms_;
}

MultiPoly MultiPoly::times_monomial(const MultiIndex& alpha, const Rational& c) const {
  if (alpha.dimension() != dim_) throw std::invalid_argument("MultiPoly: term dimension mismatch");
  MultiPoly r(dim_);
  if (c == 0) return r;
  // Shifting every key by the same alpha preserves the order, so the
  // hinted insert stays linear.
  for (const auto& [a, coef] : terms_) r.terms_.emplace_hint(r.terms_.end(), a + alpha, coef * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(dim_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly partial(const MultiPoly& p, int axis) {
  if (axis < 0 || axis >= p.dimension()) {
    throw std::out_of_range("partial: axis " + std::to_string(axis) + " out of range for d=" +
                            std::to_string(p.dimension()));
  }
  MultiPoly r(p.dimension());
  for (const auto& [a, c] : p.terms()) {
    const int e = a[axis];
    if (e == 0) continue;
    r.add_term(a.shifted(axis, -1), c * e);
  }
  return r;
}

MultiPoly laplacian(const MultiPoly& p) {
  MultiPoly r(p.dimension());
  for (const auto& [a, c] : p.terms()) {
    for (int i = 0; i < p.dimension(); ++i) {
      const int e = a[i];
      if (e < 2) continue;
      r.add_term(a.shifted(i, -2), c * (e * (e - 1)));
    }
  }
  return r;
}

MultiPoly laplacian_power(const MultiPoly& p, int k) {
  MultiPoly r = p;
  for (int i = 0; i < k && !r.is_zero(); ++i) r = laplacian(r);
  return r;
}

Rational eval_rational(const MultiPoly& p, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != p.dimension()) throw std::invalid_argument("eval_rational: wrong point size");
  Rational sum = 0;
  for (const auto& [a, c] : p.terms()) {
    Rational t = c;
    for (int i = 0; i < p.dimension(); ++i) {
      for (int k = 0; k < a[i]; ++k) t *= x[static_cast<std::size_t>(i)];
    }
    sum += t;
  }
  return sum;
}

double eval_float(const MultiPoly& p, std::span<const double> x) {
  if (static_cast<int>(x.size()) != p.dimension()) throw std::invalid_argument("eval_float: wrong point size");
  return CompiledPoly(p)(x);
}

namespace {

// (1 - x_1^2 - ... - x_{d-1}^2)^k, cached per k.
class SphereComplementPowers {
 public:
  explicit SphereComplementPowers(int d) : d_(d) {
    MultiPoly w = MultiPoly::constant(d, 1);
    for (int i = 0; i + 1 < d; ++i) w.add_term(MultiIndex::unit(d, i).shifted(i, 1), -1);
    powers_.push_back(MultiPoly::constant(d, 1));
    base_ = std::move(w);
  }

  const MultiPoly& get(int k) {
    while (static_cast<int>(powers_.size()) <= k) powers_.push_back(powers_.back() * base_);
    return powers_[static_cast<std::size_t>(k)];
  }

 private:
  int d_;
  MultiPoly base_{1};
  std::vector<MultiPoly> powers_;
};

}  // namespace

MultiPoly sphere_reduce(const MultiPoly& p) {
  const int d = p.dimension();
  if (d < 2) throw std::invalid_argument("sphere_reduce: requires d >= 2");
  const int last = d - 1;
  SphereComplementPowers powers(d);
  MultiPoly r(d);
  for (const auto& [a, c] : p.terms()) {
    const int e = a[last];
    if (e < 2) {
      r.add_term(a, c);
      continue;
    }
    const MultiIndex base = a.shifted(last, -(e - e % 2));
    r += powers.get(e / 2).times_monomial(base, c);
  }
  return r;
}

std::vector<std::pair<int, MultiPoly>> homogeneous_components(const MultiPoly& p) {
  std::vector<std::pair<int, MultiPoly>> out;
  for (const auto& [a, c] : p.terms()) {
    if (out.empty() || out.back().first != a.degree()) out.emplace_back(a.degree(), MultiPoly(p.dimension()));
    out.back().second.add_term(a, c);
  }
  return out;
}

MultiPoly homogeneous_part(const MultiPoly& p, int degree) {
  MultiPoly r(p.dimension());
  for (const auto& [a, c] : p.terms()) {
    if (a.degree() == degree) r.add_term(a, c);
  }
  return r;
}

MultiPoly divide_by_norm_sq(const MultiPoly& p) {
  // Long division in x_d by the monic divisor x_d^2 + (x_1^2 + ... + x_{d-1}^2).
  const int d = p.dimension();
  const int last = d - 1;
  MultiPoly rest = p;
  MultiPoly quotient(d);
  while (true) {
    int top = -1;
    for (const auto& [a, c] : rest.terms()) top = std::max(top, a[last]);
    if (top < 2) break;
    MultiPoly layer(d);
    for (const auto& [a, c] : rest.terms()) {
      if (a[last] == top) layer.add_term(a.shifted(last, -2), c);
    }
    quotient += layer;
    rest -= layer * MultiPoly::norm_sq(d);
  }
  if (!rest.is_zero()) throw std::domain_error("divide_by_norm_sq: polynomial is not a multiple of ||x||^2");
  return quotient;
}

CompiledPoly::CompiledPoly(const MultiPoly& p) : dim_(p.dimension()) {
  coeffs_.reserve(p.size());
  exps_.reserve(p.size() * static_cast<std::size_t>(dim_));
  for (const auto& [a, c] : p.terms()) {
    coeffs_.push_back(c.get_d());
    for (int e : a.exponents()) {
      exps_.push_back(e);
      max_exp_ = std::max(max_exp_, e);
    }
  }
}

double CompiledPoly::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("CompiledPoly: wrong point size");
  const std::size_t stride = static_cast<std::size_t>(max_exp_) + 1;
  thread_local std::vector<double> table;
  table.assign(stride * static_cast<std::size_t>(dim_), 1.0);
  for (int i = 0; i < dim_; ++i) {
    double* row = table.data() + static_cast<std::size_t>(i) * stride;
    for (std::size_t k = 1; k < stride; ++k) row[k] = row[k - 1] * x[static_cast<std::size_t>(i)];
  }
  double sum = 0.0;
  const int* e = exps_.data();
  for (double c : coeffs_) {
    double t = c;
    for (int i = 0; i < dim_; ++i, ++e) t *= table[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(*e)];
    sum += t;
  }
  return sum;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [alpha, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < alpha.dimension(); ++i) {
      if (alpha[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (alpha[i] > 1) mono += "^" + std::to_string(alpha[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace sphharm
