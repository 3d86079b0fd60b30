#include "sphharm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "sphharm/orthopoly.hpp"

namespace sphharm {

double PiMultiple::value() const { return coefficient.get_d() * std::pow(std::numbers::pi, pi_power); }

PiMultiple surface_area_exact(int d) {
  if (d < 1) throw std::domain_error("surface_area: d must be >= 1");
  const int m = d / 2;
  if (d % 2 == 0) {
    // Gamma(m) = (m-1)!
    return {Rational(2) / Rational(factorial(m - 1)), m};
  }
  // Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!)
  return {Rational(BigInt(1) << (2 * m + 1)) * Rational(factorial(m)) / Rational(factorial(2 * m)), m};
}

double surface_area(int d) { return surface_area_exact(d).value(); }

double jacobi_zeroth_moment(const Rational& alpha) {
  if (alpha <= -1) throw std::domain_error("jacobi_zeroth_moment: alpha must be > -1");
  const Rational twice = 2 * alpha;
  if (twice.get_den() == 1) {
    const long k = twice.get_num().get_si();
    if (k % 2 == 0) {
      const int a = static_cast<int>(k / 2);
      // 2^{2a+1} (a!)^2 / (2a+1)!
      const Rational r = Rational(BigInt(1) << (2 * a + 1)) * Rational(factorial(a) * factorial(a)) /
                         Rational(factorial(2 * a + 1));
      return r.get_d();
    }
    const int a = static_cast<int>((k + 1) / 2);  // alpha = a - 1/2
    // pi (2a)! / (4^a (a!)^2)
    const Rational r = Rational(factorial(2 * a)) / Rational((BigInt(1) << (2 * a)) * factorial(a) * factorial(a));
    return r.get_d() * std::numbers::pi;
  }
  const double a = alpha.get_d();
  return std::exp(0.5 * std::log(std::numbers::pi) + std::lgamma(a + 1.0) - std::lgamma(a + 1.5));
}

namespace {

// Recurrence coefficient beta_k of the monic polynomials orthogonal for (1-t^2)^alpha.
double jacobi_beta(int k, double alpha) {
  if (k == 1) return 1.0 / (2.0 * alpha + 3.0);
  const double s = 2.0 * k + 2.0 * alpha;
  return k * (k + 2.0 * alpha) / (s * s - 1.0);
}

// Number of eigenvalues of the zero-diagonal Jacobi matrix strictly below x.
int sturm_count(const std::vector<double>& offdiag_sq, int m, double x) {
  int count = 0;
  double q = -x;
  if (q < 0) ++count;
  for (int i = 1; i < m; ++i) {
    if (q == 0.0) q = 1e-300;
    q = -x - offdiag_sq[static_cast<std::size_t>(i)] / q;
    if (q < 0) ++count;
  }
  return count;
}

}  // namespace

Rule1D gauss_jacobi(int m, const Rational& alpha) {
  if (m < 1) throw std::domain_error("gauss_jacobi: node count must be >= 1");
  if (alpha <= -1) throw std::domain_error("gauss_jacobi: alpha must be > -1");
  const double a = alpha.get_d();
  // offdiag_sq[k] = beta_k couples rows k-1 and k
  std::vector<double> offdiag_sq(static_cast<std::size_t>(m), 0.0);
  for (int k = 1; k < m; ++k) offdiag_sq[static_cast<std::size_t>(k)] = jacobi_beta(k, a);

  constexpr int kMaxIterations = 200;
  constexpr double kTolerance = 1e-14;
  Rule1D rule;
  rule.nodes.resize(static_cast<std::size_t>(m));
  for (int idx = 0; idx < m; ++idx) {
    double lo = -1.0 - 1e-12;
    double hi = 1.0 + 1e-12;
    int it = 0;
    for (; it < kMaxIterations; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (sturm_count(offdiag_sq, m, mid) > idx) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    if (hi - lo > kTolerance) {
      std::ostringstream msg;
      msg << "gauss_jacobi: bisection did not converge for node " << idx << " of " << m << " (alpha=" << alpha
          << ", bracket=[" << lo << ", " << hi << "], iterations=" << it << ")";
      throw std::runtime_error(msg.str());
    }
    rule.nodes[static_cast<std::size_t>(idx)] = 0.5 * (lo + hi);
  }

  const double mu0 = jacobi_zeroth_moment(alpha);
  rule.weights.resize(static_cast<std::size_t>(m));
  for (int idx = 0; idx < m; ++idx) {
    const double t = rule.nodes[static_cast<std::size_t>(idx)];
    double prev = 0.0;
    double cur = 1.0;
    double sum = 1.0;
    for (int k = 1; k < m; ++k) {
      const double b = std::sqrt(offdiag_sq[static_cast<std::size_t>(k)]);
      const double b_prev = k > 1 ? std::sqrt(offdiag_sq[static_cast<std::size_t>(k - 1)]) : 0.0;
      const double next = (t * cur - b_prev * prev) / b;
      prev = cur;
      cur = next;
      sum += cur * cur;
    }
    rule.weights[static_cast<std::size_t>(idx)] = mu0 / sum;
  }

  // Enforce the exact symmetry of the weight.
  for (int i = 0; i < m / 2; ++i) {
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(m - 1 - i);
    const double t = 0.5 * (rule.nodes[hi] - rule.nodes[lo]);
    rule.nodes[lo] = -t;
    rule.nodes[hi] = t;
    const double w = 0.5 * (rule.weights[lo] + rule.weights[hi]);
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (m % 2 == 1) rule.nodes[static_cast<std::size_t>(m / 2)] = 0.0;
  rule.exact_degree = 2 * m - 1;
  return rule;
}

SphereRule sphere_product_rule(int d, int target_degree) {
  if (d < 2) throw std::domain_error("sphere_product_rule: requires d >= 2");
  if (target_degree < 0) throw std::domain_error("sphere_product_rule: target degree must be >= 0");
  const int half = (target_degree + 1) / 2;
  const int circle_nodes = 2 * half + 2;
  const int gauss_nodes = target_degree / 2 + 1;

  // Circle: (x_1, x_2) = (sin theta_1, cos theta_1).
  SphereRule rule;
  rule.dimension = 2;
  rule.exact_degree = circle_nodes - 1;
  const double step = 2.0 * std::numbers::pi / circle_nodes;
  for (int k = 0; k < circle_nodes; ++k) {
    const double theta = step * k;
    rule.points.push_back(std::sin(theta));
    rule.points.push_back(std::cos(theta));
    rule.weights.push_back(step);
  }

  // Lift S^{k-2} to S^{k-1} through x = (xi sin theta, cos theta).
  for (int k = 3; k <= d; ++k) {
    const Rule1D polar = gauss_jacobi(gauss_nodes, frac(k - 3, 2));
    SphereRule next;
    next.dimension = k;
    next.exact_degree = std::min(rule.exact_degree, polar.exact_degree);
    next.points.reserve(rule.size() * polar.nodes.size() * static_cast<std::size_t>(k));
    next.weights.reserve(rule.size() * polar.nodes.size());
    for (std::size_t j = 0; j < polar.nodes.size(); ++j) {
      const double t = polar.nodes[j];
      const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
      for (std::size_t i = 0; i < rule.size(); ++i) {
        for (double xi : rule.point(i)) next.points.push_back(xi * s);
        next.points.push_back(t);
        next.weights.push_back(rule.weights[i] * polar.weights[j]);
      }
    }
    rule = std::move(next);
  }
  return rule;
}

double integrate_sphere(const SphereFunction& f, const SphereRule& rule) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) sum += rule.weights[i] * f(rule.point(i));
  return sum;
}

double integrate_sphere(const MultiPoly& p, const SphereRule& rule) {
  if (p.dimension() != rule.dimension) throw std::invalid_argument("integrate_sphere: dimension mismatch");
  const CompiledPoly f(p);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) sum += rule.weights[i] * f(rule.point(i));
  return sum;
}

Rational monomial_integral(const MultiIndex& alpha) {
  Rational r = 1;
  for (int e : alpha.exponents()) {
    if (e % 2 != 0) return 0;
    r *= pochhammer(frac(1, 2), e / 2);
  }
  return r / pochhammer(Rational(alpha.dimension(), 2), alpha.degree() / 2);
}

Rational sphere_mean_exact(const MultiPoly& p) {
  Rational sum = 0;
  for (const auto& [a, c] : p.terms()) sum += c * monomial_integral(a);
  return sum;
}

}  // namespace sphharm
