#include "sphharm/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sphharm {

ZonalKernel zonal_kernel(int n, int d) {
  if (d < 2) throw std::domain_error("zonal_kernel: requires d >= 2");
  if (n < 0) throw std::domain_error("zonal_kernel: degree must be >= 0");
  ZonalKernel k;
  k.degree = n;
  k.dimension = d;
  if (d == 2) {
    k.lambda = 0;
    k.profile = n == 0 ? Poly1::constant(1) : Rational(2) * chebyshev_t(n);
    return k;
  }
  k.lambda = frac(d - 2, 2);
  k.profile = Rational((n + k.lambda) / k.lambda) * gegenbauer(n, GegenbauerParam(k.lambda));
  return k;
}

double ZonalKernel::operator()(double t) const { return zonal_eval(degree, dimension, t); }

double zonal_eval(int n, int d, double t) {
  if (d < 2) throw std::domain_error("zonal_eval: requires d >= 2");
  if (n < 0) throw std::domain_error("zonal_eval: degree must be >= 0");
  if (!(std::abs(t) <= 1.0 + 1e-12)) throw std::domain_error("zonal_eval: |t| exceeds 1");
  t = std::clamp(t, -1.0, 1.0);
  if (n == 0) return 1.0;
  if (d == 2) return 2.0 * chebyshev_t_value(n, t);
  const double lambda = 0.5 * (d - 2);
  return (n + lambda) / lambda * gegenbauer_value(n, lambda, t);
}

double zonal_from_basis(const HarmonicBasis& basis, const SpherePoint& x, const SpherePoint& y) {
  if (!basis.orthonormal()) throw std::invalid_argument("zonal_from_basis: basis must be orthonormal");
  return basis.evaluate(x).dot(basis.evaluate(y));
}

MultiPoly project_homogeneous(const MultiPoly& p) {
  if (!p.is_homogeneous()) throw std::invalid_argument("project_homogeneous: input must be homogeneous");
  const int d = p.dimension();
  if (d < 2) throw std::domain_error("project_homogeneous: requires d >= 2");
  if (p.is_zero()) return p;
  const int n = *p.degree();
  const Rational shift = Rational(-n + 2) - frac(d, 2);
  const MultiPoly norm_sq = MultiPoly::norm_sq(d);

  MultiPoly result = p;
  MultiPoly lap = p;          // Delta^j p
  MultiPoly radial = MultiPoly::constant(d, 1);  // ||x||^{2j}
  Rational denom = 1;         // 4^j j! (shift)_j
  for (int j = 1; 2 * j <= n; ++j) {
    lap = laplacian(lap);
    if (lap.is_zero()) break;
    const Rational factor = shift + (j - 1);
    if (factor == 0) {
      throw std::domain_error("project_homogeneous: Pochhammer factor vanishes at j = " + std::to_string(j));
    }
    denom *= Rational(4 * j) * factor;
    radial = radial * norm_sq;
    result += (radial * lap) * Rational(1 / denom);
  }
  return result;
}

MultiPoly project_sphere(const MultiPoly& p, int n) {
  if (n < 0) throw std::domain_error("project_sphere: degree must be >= 0");
  MultiPoly result(p.dimension());
  for (const auto& [m, component] : homogeneous_components(p)) {
    if (m < n || (m - n) % 2 != 0) continue;
    for (const auto& [j, harmonic] : harmonic_decompose(component)) {
      if (m - 2 * j == n) result += harmonic;
    }
  }
  return result;
}

SphereFunction project_quadrature(const SphereFunction& f, int n, const SphereRule& rule) {
  const int d = rule.dimension;
  const double area = surface_area(d);
  std::vector<double> scaled(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) scaled[i] = rule.weights[i] * f(rule.point(i)) / area;
  const std::vector<double> points = rule.points;
  return [scaled = std::move(scaled), points, n, d](std::span<const double> x) {
    if (static_cast<int>(x.size()) != d) throw std::invalid_argument("project_quadrature: point dimension mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      double t = 0.0;
      for (int k = 0; k < d; ++k) t += x[static_cast<std::size_t>(k)] * points[i * static_cast<std::size_t>(d) + static_cast<std::size_t>(k)];
      sum += scaled[i] * zonal_eval(n, d, std::clamp(t, -1.0, 1.0));
    }
    return sum;
  };
}

Rational apolar_inner(const MultiPoly& p, const MultiPoly& q) {
  if (p.dimension() != q.dimension()) throw std::invalid_argument("apolar_inner: dimension mismatch");
  Rational sum = 0;
  const auto& small = p.size() <= q.size() ? p : q;
  const auto& large = p.size() <= q.size() ? q : p;
  for (const auto& [alpha, c] : small.terms()) {
    const Rational other = large.coefficient(alpha);
    if (other != 0) sum += Rational(alpha.factorial()) * c * other;
  }
  return sum;
}

MultiPoly apolar_kernel(std::span<const Rational> x, int n) {
  if (n < 0) throw std::domain_error("apolar_kernel: degree must be >= 0");
  const int d = static_cast<int>(x.size());
  MultiPoly linear(d);
  for (int i = 0; i < d; ++i) linear.add_term(MultiIndex::unit(d, i), x[static_cast<std::size_t>(i)]);
  return linear.pow(static_cast<unsigned>(n)) * Rational(1, factorial(n));
}

double ApolarSphereRatio::residual() const {
  const double lhs = apolar.get_d();
  return std::abs(lhs - scale.get_d() * sphere_inner) / (1.0 + std::abs(lhs));
}

ApolarSphereRatio apolar_sphere_ratio_check(const MultiPoly& p, const MultiPoly& q, const SphereRule& rule) {
  if (!p.is_homogeneous() || !q.is_homogeneous()) {
    throw std::invalid_argument("apolar_sphere_ratio_check: inputs must be homogeneous");
  }
  const int n = q.degree().value_or(0);
  if (!p.is_zero() && *p.degree() != n) throw std::invalid_argument("apolar_sphere_ratio_check: degrees differ");
  if (!laplacian(q).is_zero()) throw std::invalid_argument("apolar_sphere_ratio_check: q must be harmonic");
  if (rule.dimension != p.dimension()) throw std::invalid_argument("apolar_sphere_ratio_check: dimension mismatch");
  if (rule.exact_degree < 2 * n) throw std::invalid_argument("apolar_sphere_ratio_check: rule not exact to degree 2n");
  const int d = p.dimension();
  ApolarSphereRatio r;
  r.apolar = apolar_inner(p, q);
  r.sphere_inner = integrate_sphere(p * q, rule) / surface_area(d);
  r.scale = Rational(BigInt(1) << n) * pochhammer(frac(d, 2), n);
  return r;
}

double funk_hecke(const Profile& f, int n, int d, int m) {
  if (d < 2) throw std::domain_error("funk_hecke: requires d >= 2");
  if (n < 0) throw std::domain_error("funk_hecke: degree must be >= 0");
  const Rule1D rule = gauss_jacobi(m, frac(d - 3, 2));
  const double lambda = 0.5 * (d - 2);
  const double at_one = d == 2 ? 1.0 : gegenbauer_value(n, lambda, 1.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    const double c = d == 2 ? chebyshev_t_value(n, t) : gegenbauer_value(n, lambda, t) / at_one;
    sum += rule.weights[i] * f(t) * c;
  }
  return surface_area(d - 1) * sum;
}

int funk_hecke_default_nodes(int f_degree, int n) { return std::max(32, f_degree + n + 8); }

}  // namespace sphharm
