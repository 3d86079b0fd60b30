#include "sphharm/sphereops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sphharm {

void CheckReport::record(double residual, bool ok, const std::string& where) {
  max_residual = std::max(max_residual, residual);
  if (!ok && passed) {
    passed = false;
    witness = where;
  }
}

std::vector<std::pair<int, int>> angular_pairs(int d) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) out.emplace_back(i, j);
  }
  return out;
}

MultiPoly angular_derivative(int i, int j, const MultiPoly& p) {
  const int d = p.dimension();
  if (i < 0 || j < 0 || i >= d || j >= d) throw std::out_of_range("angular_derivative: axis out of range");
  if (i == j) return MultiPoly(d);
  return partial(p, j).times_monomial(MultiIndex::unit(d, i), 1) - partial(p, i).times_monomial(MultiIndex::unit(d, j), 1);
}

MultiPoly laplace_beltrami(const MultiPoly& p) {
  const int d = p.dimension();
  const MultiPoly norm_sq = MultiPoly::norm_sq(d);
  MultiPoly out(d);
  for (const auto& [m, h] : homogeneous_components(p)) {
    out += norm_sq * laplacian(h);
    out -= h * Rational(m * (m + d - 2));
  }
  return sphere_reduce(out);
}

MultiPoly laplace_beltrami_via_dij(const MultiPoly& p) {
  MultiPoly out(p.dimension());
  for (const auto& [i, j] : angular_pairs(p.dimension())) out += angular_derivative(i, j, angular_derivative(i, j, p));
  return sphere_reduce(out);
}

std::vector<MultiPoly> spherical_gradient(const MultiPoly& p) {
  const int d = p.dimension();
  std::vector<MultiPoly> grad;
  MultiPoly euler(d);
  for (int i = 0; i < d; ++i) {
    grad.push_back(partial(p, i));
    euler += grad.back().times_monomial(MultiIndex::unit(d, i), 1);
  }
  for (int j = 0; j < d; ++j) {
    grad[static_cast<std::size_t>(j)] =
        sphere_reduce(grad[static_cast<std::size_t>(j)] - euler.times_monomial(MultiIndex::unit(d, j), 1));
  }
  return grad;
}

namespace {

double max_abs_coefficient(const MultiPoly& p) {
  double m = 0.0;
  for (const auto& [a, c] : p.terms()) m = std::max(m, std::abs(c.get_d()));
  return m;
}

}  // namespace

CheckReport eigen_check(const HarmonicBasis& basis) {
  if (!basis.has_polynomials()) throw std::invalid_argument("eigen_check: basis has no attached polynomials");
  const int n = basis.degree();
  const int d = basis.dimension();
  CheckReport report;
  report.name = "eigen_d" + std::to_string(d) + "_n" + std::to_string(n);
  const Rational eigenvalue(-n * (n + d - 2));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const MultiPoly& y = basis.polys()[k];
    const MultiPoly diff = laplace_beltrami(y) - sphere_reduce(y * eigenvalue);
    report.record(max_abs_coefficient(diff), diff.is_zero(), "element " + std::to_string(k));
  }
  return report;
}

CheckReport commutator_check(int d) {
  if (d < 3) throw std::domain_error("commutator_check: requires d >= 3");
  CheckReport report;
  report.name = "commutator_d" + std::to_string(d);
  const auto pairs = angular_pairs(d);
  auto delta = [](int a, int b) { return a == b ? 1 : 0; };
  for (int deg = 0; deg <= 4; ++deg) {
    for (const auto& alpha : monomials_of_degree(deg, d)) {
      const MultiPoly p = MultiPoly::monomial(alpha);
      std::vector<MultiPoly> once;
      for (const auto& [i, j] : pairs) once.push_back(angular_derivative(i, j, p));
      for (std::size_t a = 0; a < pairs.size(); ++a) {
        const auto [i, j] = pairs[a];
        for (std::size_t b = 0; b < pairs.size(); ++b) {
          const auto [k, l] = pairs[b];
          const MultiPoly lhs = angular_derivative(i, j, once[b]) - angular_derivative(k, l, once[a]);
          MultiPoly rhs(d);
          if (delta(i, k)) rhs -= angular_derivative(j, l, p);
          if (delta(i, l)) rhs += angular_derivative(j, k, p);
          if (delta(j, k)) rhs += angular_derivative(i, l, p);
          if (delta(j, l)) rhs -= angular_derivative(i, k, p);
          const MultiPoly diff = lhs - rhs;
          if (!diff.is_zero() || !report.passed) {
            std::ostringstream where;
            where << "[D_" << i + 1 << j + 1 << ", D_" << k + 1 << l + 1 << "] on monomial degree " << deg;
            report.record(max_abs_coefficient(diff), diff.is_zero(), where.str());
          }
        }
      }
      MultiPoly sum_sq(d);
      for (std::size_t a = 0; a < pairs.size(); ++a) {
        sum_sq += angular_derivative(pairs[a].first, pairs[a].second, once[a]);
      }
      MultiPoly d12_then(d);
      for (const auto& [i, j] : pairs) {
        d12_then += angular_derivative(i, j, angular_derivative(i, j, once[0]));
      }
      const MultiPoly diff = d12_then - angular_derivative(0, 1, sum_sq);
      report.record(max_abs_coefficient(diff), diff.is_zero(), "[D_12, sum D^2] on monomial degree " + std::to_string(deg));
    }
  }
  return report;
}

namespace {

int degree_or_zero(const MultiPoly& p) { return p.degree().value_or(0); }

void require_rule(const SphereRule& rule, int d, int degree, const char* who) {
  if (rule.dimension != d) throw std::invalid_argument(std::string(who) + ": rule dimension mismatch");
  if (rule.exact_degree < degree) {
    throw std::invalid_argument(std::string(who) + ": rule exact degree " + std::to_string(rule.exact_degree) +
                                " below required " + std::to_string(degree));
  }
}

}  // namespace

IntegralPair integration_by_parts_check(int i, int j, const MultiPoly& f, const MultiPoly& g, const SphereRule& rule) {
  require_rule(rule, f.dimension(), degree_or_zero(f) + degree_or_zero(g), "integration_by_parts_check");
  IntegralPair r;
  r.lhs = integrate_sphere(f * angular_derivative(i, j, g), rule);
  r.rhs = -integrate_sphere(angular_derivative(i, j, f) * g, rule);
  return r;
}

CheckReport gradient_parts_check(const MultiPoly& f, const MultiPoly& g, const SphereRule& rule) {
  const int d = f.dimension();
  require_rule(rule, d, degree_or_zero(f) + degree_or_zero(g) + 2, "gradient_parts_check");
  CheckReport report;
  report.name = "gradient_parts";
  const auto grad_f = spherical_gradient(f);
  const auto grad_g = spherical_gradient(g);
  auto compare = [&report](double lhs, double rhs, const std::string& where) {
    const double residual = std::abs(lhs - rhs);
    report.record(residual, residual <= 1e-8 * (1.0 + std::abs(lhs)), where);
  };
  for (int k = 0; k < d; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    const double lhs = integrate_sphere(f * grad_g[ks], rule);
    const MultiPoly shifted = grad_f[ks] - f.times_monomial(MultiIndex::unit(d, k), Rational(d - 1));
    const double rhs = -integrate_sphere(shifted * g, rule);
    compare(lhs, rhs, "gradient identity component " + std::to_string(k));
  }
  MultiPoly dot(d);
  for (int k = 0; k < d; ++k) dot += grad_f[static_cast<std::size_t>(k)] * grad_g[static_cast<std::size_t>(k)];
  compare(integrate_sphere(dot, rule), -integrate_sphere(laplace_beltrami(f) * g, rule), "Dirichlet identity");
  return report;
}

double beltrami_fd_d3(const AngularFunction& f, double theta, double phi, double h) {
  if (!(h > 0)) throw std::domain_error("beltrami_fd_d3: step must be positive");
  const double s = std::sin(theta);
  if (s < 10.0 * h) throw std::domain_error("beltrami_fd_d3: too close to a pole (sin theta < 10 h)");
  const double cot = std::cos(theta) / s;
  auto stencil = [&](double step) {
    const double centre = f(theta, phi);
    const double tp = f(theta + step, phi);
    const double tm = f(theta - step, phi);
    const double pp = f(theta, phi + step);
    const double pm = f(theta, phi - step);
    const double f_tt = (tp - 2.0 * centre + tm) / (step * step);
    const double f_t = (tp - tm) / (2.0 * step);
    const double f_pp = (pp - 2.0 * centre + pm) / (step * step);
    return f_tt + cot * f_t + f_pp / (s * s);
  };
  return (4.0 * stencil(0.5 * h) - stencil(h)) / 3.0;
}

CheckReport radial_laplace_identity_check(int rho, const MultiPoly& g) {
  if (rho < 0 || rho % 2 != 0) throw std::domain_error("radial_laplace_identity_check: rho must be even and >= 0");
  if (!g.is_homogeneous()) throw std::invalid_argument("radial_laplace_identity_check: g must be homogeneous");
  const int d = g.dimension();
  const int n = degree_or_zero(g);
  const MultiPoly norm_sq = MultiPoly::norm_sq(d);
  const MultiPoly r_rho = norm_sq.pow(static_cast<unsigned>(rho / 2));
  const MultiPoly lhs = laplacian(r_rho * g);
  MultiPoly rhs = r_rho * laplacian(g);
  if (rho > 0) rhs += norm_sq.pow(static_cast<unsigned>(rho / 2 - 1)) * g * Rational(rho * (2 * n + rho + d - 2));
  CheckReport report;
  report.name = "radial_laplace_rho" + std::to_string(rho);
  const MultiPoly diff = lhs - rhs;
  report.record(max_abs_coefficient(diff), diff.is_zero(), "rho " + std::to_string(rho));
  return report;
}

}  // namespace sphharm
