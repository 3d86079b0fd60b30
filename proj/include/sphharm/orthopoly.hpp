#ifndef SPHHARM_ORTHOPOLY_HPP
#define SPHHARM_ORTHOPOLY_HPP

#include <vector>

#include "sphharm/exactpoly.hpp"

namespace sphharm {

/// Univariate polynomial with exact coefficients in ascending powers.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rational> coeffs);

  static Poly1 constant(const Rational& c);
  /// t
  static Poly1 identity();

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(int k) const;

  Rational operator()(const Rational& t) const;
  double operator()(double t) const;

  Poly1 derivative() const;

  friend Poly1 operator+(const Poly1& p, const Poly1& q);
  friend Poly1 operator-(const Poly1& p, const Poly1& q);
  friend Poly1 operator*(const Poly1& p, const Poly1& q);
  friend Poly1 operator*(const Rational& c, const Poly1& p);
  friend bool operator==(const Poly1& p, const Poly1& q) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Gegenbauer parameter lambda. The Chebyshev limit lambda -> 0+ is a
/// separate tag because C_n^0 itself vanishes identically.
class GegenbauerParam {
 public:
  explicit GegenbauerParam(const Rational& lambda);
  static GegenbauerParam chebyshev_limit();
  /// lambda = (d-2)/2, requires d >= 3
  static GegenbauerParam for_sphere(int d);

  bool is_limit() const { return limit_; }
  const Rational& lambda() const { return lambda_; }

 private:
  GegenbauerParam() = default;
  Rational lambda_ = 0;
  bool limit_ = false;
};

/// Largest degree served with exact coefficients; above this only the
/// floating-point recurrences are available.
inline constexpr int kMaxExactDegree = 64;

/// C_n^lambda by the three-term recurrence. For the Chebyshev-limit tag
/// returns lim C_n^lambda / lambda = (2/n) T_n (n >= 1).
Poly1 gegenbauer(int n, const GegenbauerParam& lam);
/// C_n^lambda from the terminating 2F1 series; independent of the recurrence.
Poly1 gegenbauer_via_2f1(int n, const GegenbauerParam& lam);

Poly1 chebyshev_t(int n);
Poly1 chebyshev_u(int n);
/// Legendre P_n normalised to P_n(1) = 1.
Poly1 legendre(int n);

/// C_n^lambda(t) by forward recurrence in double precision.
double gegenbauer_value(int n, double lambda, double t);
double chebyshev_t_value(int n, double t);
double legendre_value(int n, double t);

enum class LegendreSign {
  degree_parity,   ///< overall factor (-1)^n
  condon_shortley  ///< overall factor (-1)^k
};

/// (1-t^2)^{k/2} d^k/dt^k P_n(t) times the sign of `convention`, evaluated
/// through (2k-1)!! (1-t^2)^{k/2} C_{n-k}^{k+1/2}(t). Zero when k > n.
double assoc_legendre(int n, int k, double t, LegendreSign convention = LegendreSign::degree_parity);

/// h_n^lambda = lambda/(n+lambda) C_n^lambda(1), lambda = (d-2)/2.
Rational gegenbauer_norm(int n, int d);

/// (a)_k
Rational pochhammer(const Rational& a, int k);
BigInt factorial(int n);
BigInt binomial(int n, int k);

}  // namespace sphharm

#endif  // SPHHARM_ORTHOPOLY_HPP
