#include "sphharm/orthopoly.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sphharm {

Poly1::Poly1(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly1 Poly1::constant(const Rational& c) { return Poly1({c}); }

Poly1 Poly1::identity() { return Poly1({Rational(0), Rational(1)}); }

void Poly1::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly1::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly1::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Poly1::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

Poly1 Poly1::derivative() const {
  std::vector<Rational> c;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c.push_back(coeffs_[k] * static_cast<long>(k));
  return Poly1(std::move(c));
}

Poly1 operator+(const Poly1& p, const Poly1& q) {
  std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) c[k] += p.coeffs_[k];
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) c[k] += q.coeffs_[k];
  return Poly1(std::move(c));
}

Poly1 operator-(const Poly1& p, const Poly1& q) { return p + Rational(-1) * q; }

Poly1 operator*(const Poly1& p, const Poly1& q) {
  if (p.is_zero() || q.is_zero()) return Poly1();
  std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return Poly1(std::move(c));
}

Poly1 operator*(const Rational& c, const Poly1& p) {
  std::vector<Rational> out = p.coeffs_;
  for (auto& x : out) x *= c;
  return Poly1(std::move(out));
}

GegenbauerParam::GegenbauerParam(const Rational& lambda) : lambda_(lambda) {
  if (lambda <= 0) {
    throw std::domain_error("GegenbauerParam: lambda must be > 0 (use chebyshev_limit() for lambda -> 0)");
  }
}

GegenbauerParam GegenbauerParam::chebyshev_limit() {
  GegenbauerParam p;
  p.limit_ = true;
  return p;
}

GegenbauerParam GegenbauerParam::for_sphere(int d) {
  if (d < 3) throw std::domain_error("GegenbauerParam::for_sphere: requires d >= 3");
  return GegenbauerParam(frac(d - 2, 2));
}

Rational pochhammer(const Rational& a, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= a + i;
  return r;
}

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

namespace {

void require_exact_degree(int n, const char* who) {
  if (n < 0) throw std::domain_error(std::string(who) + ": degree must be >= 0");
  if (n > kMaxExactDegree) {
    throw std::out_of_range(std::string(who) + ": exact coefficients limited to degree " +
                            std::to_string(kMaxExactDegree));
  }
}

}  // namespace

Poly1 chebyshev_t(int n) {
  require_exact_degree(n, "chebyshev_t");
  Poly1 prev = Poly1::constant(1);
  if (n == 0) return prev;
  Poly1 cur = Poly1::identity();
  const Poly1 two_t({Rational(0), Rational(2)});
  for (int k = 1; k < n; ++k) {
    Poly1 next = two_t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly1 chebyshev_u(int n) {
  require_exact_degree(n, "chebyshev_u");
  Poly1 prev = Poly1::constant(1);
  if (n == 0) return prev;
  const Poly1 two_t({Rational(0), Rational(2)});
  Poly1 cur = two_t;
  for (int k = 1; k < n; ++k) {
    Poly1 next = two_t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly1 gegenbauer(int n, const GegenbauerParam& lam) {
  require_exact_degree(n, "gegenbauer");
  if (lam.is_limit()) {
    if (n == 0) throw std::domain_error("gegenbauer: lambda -> 0 limit of C_0/lambda diverges");
    return frac(2, n) * chebyshev_t(n);
  }
  const Rational& l = lam.lambda();
  Poly1 prev = Poly1::constant(1);
  if (n == 0) return prev;
  Poly1 cur({Rational(0), 2 * l});
  for (int k = 2; k <= n; ++k) {
    // k C_k = 2(k + l - 1) t C_{k-1} - (k + 2l - 2) C_{k-2}
    Poly1 next = frac(1, k) * (Poly1({Rational(0), 2 * (k + l - 1)}) * cur - (k + 2 * l - 2) * prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly1 gegenbauer_via_2f1(int n, const GegenbauerParam& lam) {
  require_exact_degree(n, "gegenbauer_via_2f1");
  if (lam.is_limit()) {
    if (n == 0) throw std::domain_error("gegenbauer_via_2f1: lambda -> 0 limit of C_0/lambda diverges");
    // (lambda)_n / lambda -> (n-1)! and (1-n-lambda)_j -> (1-n)_j as lambda -> 0
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    const Rational lead = Rational(factorial(n - 1)) * Rational(BigInt(1) << n) / Rational(factorial(n));
    for (int j = 0; 2 * j <= n; ++j) {
      const Rational term = pochhammer(frac(-n, 2), j) * pochhammer(frac(1 - n, 2), j) /
                            (Rational(factorial(j)) * pochhammer(Rational(1 - n), j));
      c[static_cast<std::size_t>(n - 2 * j)] = lead * term;
    }
    return Poly1(std::move(c));
  }
  const Rational& l = lam.lambda();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  const Rational lead = pochhammer(l, n) * Rational(BigInt(1) << n) / Rational(factorial(n));
  for (int j = 0; 2 * j <= n; ++j) {
    const Rational term = pochhammer(frac(-n, 2), j) * pochhammer(frac(1 - n, 2), j) /
                          (Rational(factorial(j)) * pochhammer(1 - n - l, j));
    c[static_cast<std::size_t>(n - 2 * j)] = lead * term;
  }
  return Poly1(std::move(c));
}

Poly1 legendre(int n) {
  require_exact_degree(n, "legendre");
  Poly1 prev = Poly1::constant(1);
  if (n == 0) return prev;
  Poly1 cur = Poly1::identity();
  for (int k = 1; k < n; ++k) {
    // (k+1) P_{k+1} = (2k+1) t P_k - k P_{k-1}
    Poly1 next = frac(1, k + 1) * (Poly1({Rational(0), Rational(2 * k + 1)}) * cur - Rational(k) * prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double gegenbauer_value(int n, double lambda, double t) {
  if (n < 0) throw std::domain_error("gegenbauer_value: degree must be >= 0");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * lambda * t;
  for (int k = 2; k <= n; ++k) {
    const double next = (2.0 * (k + lambda - 1.0) * t * cur - (k + 2.0 * lambda - 2.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

double chebyshev_t_value(int n, double t) {
  if (n < 0) throw std::domain_error("chebyshev_t_value: degree must be >= 0");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = t;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double legendre_value(int n, double t) { return gegenbauer_value(n, 0.5, t); }

double assoc_legendre(int n, int k, double t, LegendreSign convention) {
  if (n < 0 || k < 0) throw std::domain_error("assoc_legendre: n and k must be >= 0");
  if (k > n) return 0.0;
  double double_factorial = 1.0;
  for (int j = 2 * k - 1; j > 1; j -= 2) double_factorial *= j;
  const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
  const double magnitude = double_factorial * std::pow(s, k) * gegenbauer_value(n - k, k + 0.5, t);
  const int sign_power = convention == LegendreSign::degree_parity ? n : k;
  return (sign_power % 2 == 0) ? magnitude : -magnitude;
}

Rational gegenbauer_norm(int n, int d) {
  if (d < 3) throw std::domain_error("gegenbauer_norm: requires d >= 3");
  if (n < 0) throw std::domain_error("gegenbauer_norm: degree must be >= 0");
  const Rational lambda(d - 2, 2);
  // C_n^lambda(1) = (2 lambda)_n / n!
  const Rational at_one = pochhammer(2 * lambda, n) / Rational(factorial(n));
  return lambda / (n + lambda) * at_one;
}

}  // namespace sphharm
