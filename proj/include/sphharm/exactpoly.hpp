#ifndef SPHHARM_EXACTPOLY_HPP
#define SPHHARM_EXACTPOLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sphharm {

using BigInt = mpz_class;
/// Exact rational. GMP arithmetic keeps results in lowest terms, but the
/// two-argument constructor does not; build fractions with frac().
using Rational = mpq_class;

/// num/den in lowest terms with a positive denominator.
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Exponent vector of a monomial x^alpha in d variables.
///
/// Axes are 0-based throughout the C++ API: axis 0 is x_1, axis d-1 is x_d.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);

  static MultiIndex zero(int d);
  static MultiIndex unit(int d, int axis);

  int dimension() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int operator[](int axis) const { return exps_[static_cast<std::size_t>(axis)]; }
  std::span<const int> exponents() const { return exps_; }

  /// Copy with exponent of `axis` shifted by `delta`; throws if it would go negative.
  MultiIndex shifted(int axis, int delta) const;

  /// alpha! = alpha_1! ... alpha_d!
  BigInt factorial() const;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Graded lexicographic order with x_1 < x_2 < ... < x_d: total degree
/// first, then the exponent of x_d, then x_{d-1}, and so on.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All exponent vectors of total degree n in d variables, ascending graded-lex.
std::vector<MultiIndex> monomials_of_degree(int n, int d);

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
class MultiPoly {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

  explicit MultiPoly(int dimension);

  static MultiPoly constant(int d, const Rational& c);
  static MultiPoly variable(int d, int axis);
  static MultiPoly monomial(const MultiIndex& alpha, const Rational& c = 1);
  /// ||x||^2 = x_1^2 + ... + x_d^2
  static MultiPoly norm_sq(int d);

  int dimension() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// nullopt is the degree of the zero polynomial.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const MultiIndex& alpha) const;

  /// Accumulate c x^alpha, pruning the entry if it cancels.
  void add_term(const MultiIndex& alpha, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& q);
  MultiPoly& operator-=(const MultiPoly& q);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(MultiPoly p, const Rational& c) { return p *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly p) { return p *= c; }
  friend MultiPoly operator-(const MultiPoly& p);
  friend bool operator==(const MultiPoly& p, const MultiPoly& q);

  /// p * c x^alpha
  MultiPoly times_monomial(const MultiIndex& alpha, const Rational& c) const;
  MultiPoly pow(unsigned k) const;

 private:
  void require_same_dimension(const MultiPoly& q) const;

  int dim_;
  TermMap terms_;
};

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);

/// Formal partial derivative along `axis`.
MultiPoly partial(const MultiPoly& p, int axis);
MultiPoly laplacian(const MultiPoly& p);
/// Delta^k p
MultiPoly laplacian_power(const MultiPoly& p, int k);

Rational eval_rational(const MultiPoly& p, std::span<const Rational> x);
double eval_float(const MultiPoly& p, std::span<const double> x);

/// Canonical representative modulo the ideal (||x||^2 - 1): every even power
/// of x_d is rewritten through x_d^2 = 1 - x_1^2 - ... - x_{d-1}^2, leaving
/// x_d with exponent 0 or 1 in each term.
MultiPoly sphere_reduce(const MultiPoly& p);

/// (degree, component) pairs in ascending degree; empty for p == 0.
std::vector<std::pair<int, MultiPoly>> homogeneous_components(const MultiPoly& p);
MultiPoly homogeneous_part(const MultiPoly& p, int degree);

/// q with p == ||x||^2 q. Throws std::domain_error if p is not divisible.
MultiPoly divide_by_norm_sq(const MultiPoly& p);

/// Human-readable form such as "1 - x2 + 3/2*x1^2*x3", ascending graded-lex order.
std::string to_string(const MultiPoly& p);

/// Float copy of a polynomial for repeated evaluation at many points.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const MultiPoly& p);

  int dimension() const { return dim_; }
  double operator()(std::span<const double> x) const;

 private:
  int dim_ = 0;
  int max_exp_ = 0;
  std::vector<double> coeffs_;
  std::vector<int> exps_;  // row-major, size() == coeffs_.size() * dim_
};

}  // namespace sphharm

#endif  // SPHHARM_EXACTPOLY_HPP
