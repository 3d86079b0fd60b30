#include "sphharm/check_suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "sphharm/basis.hpp"
#include "sphharm/kernels.hpp"
#include "sphharm/sampling.hpp"
#include "sphharm/zonalsys.hpp"

namespace sphharm {

namespace {

std::string at(int n) { return "n=" + std::to_string(n); }

double max_abs_coefficient(const MultiPoly& p) {
  double m = 0.0;
  for (const auto& [a, c] : p.terms()) m = std::max(m, std::abs(c.get_d()));
  return m;
}

void record_exact(CheckReport& r, const MultiPoly& diff, const std::string& where) {
  r.record(max_abs_coefficient(diff), diff.is_zero(), where);
}

SpherePoint random_point(Rng& rng, int d) { return SpherePoint{random_unit_vector(rng, d), std::nullopt}; }

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return std::clamp(s, -1.0, 1.0);
}

CheckReport addition_formula(const CheckConfig& c, Rng& rng) {
  CheckReport r;
  for (int n = 0; n <= c.nmax; ++n) {
    const HarmonicBasis basis = reference_basis(n, c.d);
    for (int k = 0; k < 20; ++k) {
      const SpherePoint x = random_point(rng, c.d);
      const SpherePoint y = random_point(rng, c.d);
      const double residual =
          std::abs(zonal_from_basis(basis, x, y) - zonal_eval(n, c.d, dot(x.cartesian, y.cartesian)));
      r.record(residual, residual <= 1e-8, at(n) + " pair " + std::to_string(k));
    }
  }
  return r;
}

CheckReport apolar_bridge(const CheckConfig& c, Rng& rng) {
  CheckReport r;
  for (int n = 1; n <= std::min(c.nmax, 4); ++n) {
    const SphereRule rule = sphere_product_rule(c.d, 2 * n);
    for (int k = 0; k < 5; ++k) {
      const MultiPoly p = random_polynomial(rng, c.d, n, 6, true);
      const MultiPoly q = project_homogeneous(random_polynomial(rng, c.d, n, 6, true));
      if (p.is_zero() || q.is_zero()) continue;
      const double residual = apolar_sphere_ratio_check(p, q, rule).residual();
      r.record(residual, residual <= 1e-8, at(n) + " pair " + std::to_string(k));
    }
  }
  return r;
}

CheckReport dimension_counts(const CheckConfig& c, Rng&) {
  CheckReport r;
  std::uint64_t running = 0;
  for (int n = 0; n <= c.nmax; ++n) {
    const std::uint64_t expected = dim_harmonic(n, c.d);
    running += expected;
    auto count = [&](std::uint64_t got, const std::string& what) {
      r.record(got == expected ? 0.0 : 1.0, got == expected, what + " " + at(n));
    };
    count(harmonic_indices(n, c.d).size(), "harmonic_indices");
    count(reference_basis(n, c.d).size(), "reference basis");
    if (c.d >= 3) count(maxwell_basis(n, c.d).size(), "maxwell basis");
    if (c.d == 3) count(basis_d3(n).size(), "basis_d3");
    // P_n restricted to the sphere is H_n + H_{n-1} + ... + H_0
    const std::uint64_t pi = dim_pi_sphere(n, c.d);
    const std::uint64_t direct = dim_homogeneous(n, c.d) + dim_homogeneous(n - 1, c.d);
    r.record(pi == running && pi == direct ? 0.0 : 1.0, pi == running && pi == direct, "dim_pi_sphere " + at(n));
  }
  return r;
}

void fold(CheckReport& into, const CheckReport& part) {
  into.record(part.max_residual, part.passed, part.name + ": " + part.witness);
}

CheckReport eigenvalues(const CheckConfig& c, Rng&) {
  CheckReport r;
  for (int n = 0; n <= c.nmax; ++n) {
    if (c.d == 2) {
      fold(r, eigen_check(basis_d2(n)));
      continue;
    }
    fold(r, eigen_check(maxwell_basis(n, c.d)));
    fold(r, eigen_check(sph_coord_basis(n, c.d, true)));
    if (c.d == 3) fold(r, eigen_check(basis_d3(n)));
  }
  return r;
}

CheckReport fd_oracle(const CheckConfig& c, Rng& rng) {
  CheckReport r;
  std::uniform_real_distribution<double> theta_dist(0.3, 2.8);
  std::uniform_real_distribution<double> phi_dist(0.0, 6.28);
  for (int n = 0; n <= c.nmax; ++n) {
    const HarmonicBasis basis = basis_d3(n);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const AngularFunction f = [&basis, k](double theta, double phi) {
        const double angles[] = {phi, theta};
        return basis.evaluate(angles_to_cartesian(angles, 3))(static_cast<Eigen::Index>(k));
      };
      const double theta = theta_dist(rng);
      const double phi = phi_dist(rng);
      const double exact = -n * (n + 1) * f(theta, phi);
      const double residual = std::abs(beltrami_fd_d3(f, theta, phi, 1e-3) - exact);
      r.record(residual, residual <= 1e-6, at(n) + " element " + std::to_string(k));
    }
  }
  return r;
}

CheckReport funk_hecke_identity(const CheckConfig& c, Rng& rng) {
  CheckReport r;
  const Profile f = [](double t) { return 1.0 - 0.5 * t + 2.0 * t * t + t * t * t - 0.75 * t * t * t * t; };
  for (int n = 0; n <= c.nmax; ++n) {
    const double lambda = funk_hecke(f, n, c.d, funk_hecke_default_nodes(4, n));
    const HarmonicBasis basis = reference_basis(n, c.d);
    const SphereRule rule = sphere_product_rule(c.d, 4 + n);
    const Eigen::MatrixXd values = basis_values(basis, rule);
    for (int k = 0; k < 3; ++k) {
      const SpherePoint x = random_point(rng, c.d);
      Eigen::VectorXd lhs = Eigen::VectorXd::Zero(values.cols());
      for (std::size_t i = 0; i < rule.size(); ++i) {
        const auto pt = rule.point(i);
        const double t = dot(x.cartesian, std::vector<double>(pt.begin(), pt.end()));
        lhs += rule.weights[i] * f(t) * values.row(static_cast<Eigen::Index>(i)).transpose();
      }
      const Eigen::VectorXd rhs = lambda * basis.evaluate(x);
      const double residual = (lhs - rhs).cwiseAbs().maxCoeff();
      r.record(residual, residual <= 1e-7 * (1.0 + rhs.cwiseAbs().maxCoeff()), at(n) + " point " + std::to_string(k));
    }
  }
  return r;
}

CheckReport gegenbauer_routes(const CheckConfig& c, Rng&) {
  CheckReport r;
  const int top = std::max(c.nmax, 8);
  for (int n = 0; n <= top; ++n) {
    if (c.d == 2) {
      if (n == 0) continue;
      const GegenbauerParam p = GegenbauerParam::chebyshev_limit();
      const Poly1 diff = gegenbauer(n, p) - gegenbauer_via_2f1(n, p);
      r.record(diff.is_zero() ? 0.0 : 1.0, diff.is_zero(), "limit " + at(n));
      continue;
    }
    const GegenbauerParam p = GegenbauerParam::for_sphere(c.d);
    const Poly1 diff = gegenbauer(n, p) - gegenbauer_via_2f1(n, p);
    r.record(diff.is_zero() ? 0.0 : 1.0, diff.is_zero(), at(n));
  }
  return r;
}

CheckReport gradient_parts(const CheckConfig& c, Rng& rng) {
  CheckReport r;
  const SphereRule rule = sphere_product_rule(c.d, 10);
  for (int k = 0; k < 4; ++k) {
    const MultiPoly f = random_polynomial(rng, c.d, 4, 5);
    const MultiPoly g = random_polynomial(rng, c.d, 4, 5);
    fold(r, gradient_parts_check(f, g, rule));
  }
  return r;
}

CheckReport harmonicity(const CheckConfig& c, Rng&) {
  CheckReport r;
  for (int n = 0; n <= c.nmax; ++n) {
    if (c.d == 2) {
      const HarmonicBasis basis = basis_d2(n);
      for (const auto& p : basis.polys()) record_exact(r, laplacian(p), "basis_d2 " + at(n));
      continue;
    }
    for (const auto& alpha : monomials_of_degree(n, c.d)) {
      record_exact(r, laplacian(maxwell_polynomial(alpha)), "maxwell " + at(n));
    }
    const HarmonicBasis basis = sph_coord_basis(n, c.d, true);
    for (const auto& p : basis.polys()) record_exact(r, laplacian(p), "sph_coord " + at(n));
  }
  return r;
}

CheckReport integration_by_parts(const CheckConfig& c, Rng& rng) {
  CheckReport r;
  const SphereRule rule = sphere_product_rule(c.d, 8);
  for (const auto& [i, j] : angular_pairs(c.d)) {
    const MultiPoly f = random_polynomial(rng, c.d, 4, 5);
    const MultiPoly g = random_polynomial(rng, c.d, 4, 5);
    const auto ibp = integration_by_parts_check(i, j, f, g, rule);
    const double residual = std::abs(ibp.lhs - ibp.rhs);
    r.record(residual, residual <= 1e-9 * (1.0 + std::abs(ibp.lhs)),
             "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    const auto self = integration_by_parts_check(i, j, f, f, rule);
    r.record(std::abs(self.lhs), std::abs(self.lhs) <= 1e-9 * (1.0 + max_abs_coefficient(f * f)),
             "self pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  }
  return r;
}

CheckReport kernel_bounds(const CheckConfig& c, Rng& rng) {
  CheckReport r;
  for (int n = 0; n <= c.nmax; ++n) {
    const ZonalKernel z = zonal_kernel(n, c.d);
    const Rational dim(static_cast<unsigned long>(dim_harmonic(n, c.d)));
    const bool exact = z.profile(Rational(1)) == dim;
    r.record(exact ? 0.0 : 1.0, exact, "profile(1) " + at(n));
    for (int k = 0; k < 200; ++k) {
      const double t = dot(random_unit_vector(rng, c.d), random_unit_vector(rng, c.d));
      const double excess = std::max(0.0, std::abs(zonal_eval(n, c.d, t)) - dim.get_d());
      r.record(excess, excess <= 1e-10, at(n) + " sample " + std::to_string(k));
    }
  }
  return r;
}

CheckReport operator_equivalence(const CheckConfig& c, Rng& rng) {
  CheckReport r;
  for (int k = 0; k < 10; ++k) {
    const MultiPoly p = random_polynomial(rng, c.d, std::min(c.nmax + 2, 6), 6);
    record_exact(r, laplace_beltrami(p) - laplace_beltrami_via_dij(p), "sample " + std::to_string(k));
  }
  return r;
}

CheckReport orthonormality(const CheckConfig& c, Rng&) {
  CheckReport r;
  for (int n = 0; n <= c.nmax; ++n) {
    const HarmonicBasis basis = reference_basis(n, c.d);
    const Eigen::MatrixXd g = gram_matrix(basis, sphere_product_rule(c.d, 2 * n));
    const auto size = static_cast<Eigen::Index>(basis.size());
    const double residual = (g - Eigen::MatrixXd::Identity(size, size)).cwiseAbs().maxCoeff();
    r.record(residual, residual <= 1e-9, at(n));
  }
  return r;
}

CheckReport projection(const CheckConfig& c, Rng& rng) {
  CheckReport r;
  if (c.d >= 3) {
    for (int n = 0; n <= std::min(c.nmax, 4); ++n) {
      for (const auto& alpha : monomials_of_degree(n, c.d)) {
        record_exact(r, project_homogeneous(MultiPoly::monomial(alpha)) - maxwell_polynomial(alpha), "monomial " + at(n));
      }
    }
  }
  for (int n = 0; n <= c.nmax; ++n) {
    for (int m = 0; m <= c.nmax; ++m) {
      if (m == n) continue;
      const HarmonicBasis other = reference_basis(m, c.d);
      const SphereRule rule = sphere_product_rule(c.d, n + m);
      const SphereFunction y = [&other](std::span<const double> x) {
        return other.evaluate(SpherePoint{std::vector<double>(x.begin(), x.end()), std::nullopt})(0);
      };
      const SphereFunction proj = project_quadrature(y, n, rule);
      const auto x = random_unit_vector(rng, c.d);
      const double residual = std::abs(proj(x));
      r.record(residual, residual <= 1e-8, "quadrature " + at(n) + " on degree " + std::to_string(m));
    }
  }
  return r;
}

CheckReport quadrature_exactness(const CheckConfig& c, Rng&) {
  CheckReport r;
  const int degree = c.d <= 4 ? 10 : 6;
  const SphereRule rule = sphere_product_rule(c.d, degree);
  const double area = surface_area(c.d);
  double total = 0.0;
  for (double w : rule.weights) total += w;
  r.record(std::abs(total - area) / area, std::abs(total - area) <= 1e-12 * area, "weight sum");
  for (int n = 0; n <= degree; ++n) {
    for (const auto& alpha : monomials_of_degree(n, c.d)) {
      const double exact = area * monomial_integral(alpha).get_d();
      const double got = integrate_sphere(MultiPoly::monomial(alpha), rule);
      const double residual = std::abs(got - exact) / std::max(area, std::abs(exact));
      r.record(residual, residual <= 1e-11, "monomial " + at(n));
    }
  }
  return r;
}

CheckReport radial_laplace(const CheckConfig& c, Rng& rng) {
  CheckReport r;
  for (int rho = 0; rho <= 4; rho += 2) {
    for (int n = 0; n <= c.nmax; ++n) {
      fold(r, radial_laplace_identity_check(rho, random_polynomial(rng, c.d, n, 5, true)));
    }
  }
  return r;
}

CheckReport zonal_system(const CheckConfig& c, Rng& rng) {
  CheckReport r;
  for (int n = 0; n <= c.nmax; ++n) {
    const ZonalSystem sys = greedy_fundamental_system(n, c.d, c.seed + static_cast<std::uint64_t>(n));
    r.record(0.0, sys.det_gram > 0, "det(gram) > 0 " + at(n));
    const double square = sys.det_basis_matrix * sys.det_basis_matrix;
    const double det_residual = std::abs(sys.det_gram - square) / std::abs(sys.det_gram);
    r.record(det_residual, det_residual <= 1e-6, "det(gram) = det(M)^2 " + at(n));
    const double gram_residual = (sys.gram - sys.basis_matrix * sys.basis_matrix.transpose()).cwiseAbs().maxCoeff();
    r.record(gram_residual, gram_residual <= 1e-8, "gram = M M^T " + at(n));
    const HarmonicBasis basis = reference_basis(n, c.d);
    for (Eigen::Index k = 0; k < sys.basis_matrix.cols(); ++k) {
      const SphereFunction s = interpolate(sys, sys.basis_matrix.col(k));
      for (int j = 0; j < 10; ++j) {
        const SpherePoint x = random_point(rng, c.d);
        const double residual = std::abs(s(x.cartesian) - basis.evaluate(x)(k));
        r.record(residual, residual <= 1e-7, "interpolation " + at(n) + " element " + std::to_string(k));
      }
    }
  }
  return r;
}

CheckReport commutators(const CheckConfig& c, Rng&) { return commutator_check(c.d); }

struct Entry {
  const char* name;
  std::function<CheckReport(const CheckConfig&, Rng&)> run;
  int min_d;
  int only_d;
};

}  // namespace

std::vector<CheckReport> run_check_suite(const CheckConfig& config) {
  if (config.d < 2) throw std::domain_error("check suite: d must be >= 2");
  if (config.nmax < 0) throw std::domain_error("check suite: nmax must be >= 0");
  const std::vector<Entry> entries = {
      {"addition_formula", addition_formula, 2, 0},
      {"apolar_bridge", apolar_bridge, 2, 0},
      {"commutators", commutators, 3, 0},
      {"dimension_counts", dimension_counts, 2, 0},
      {"eigenvalues", eigenvalues, 2, 0},
      {"fd_oracle", fd_oracle, 3, 3},
      {"funk_hecke", funk_hecke_identity, 2, 0},
      {"gegenbauer_routes", gegenbauer_routes, 2, 0},
      {"gradient_parts", gradient_parts, 2, 0},
      {"harmonicity", harmonicity, 2, 0},
      {"integration_by_parts", integration_by_parts, 2, 0},
      {"kernel_bounds", kernel_bounds, 2, 0},
      {"operator_equivalence", operator_equivalence, 2, 0},
      {"orthonormality", orthonormality, 2, 0},
      {"projection", projection, 2, 0},
      {"quadrature_exactness", quadrature_exactness, 2, 0},
      {"radial_laplace", radial_laplace, 2, 0},
      {"zonal_system", zonal_system, 2, 0},
  };
  std::vector<CheckReport> reports;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    if (config.d < e.min_d || (e.only_d != 0 && config.d != e.only_d)) continue;
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    Rng rng(seq);
    CheckReport report;
    try {
      report = e.run(config, rng);
    } catch (const std::exception& ex) {
      report.passed = false;
      report.witness = std::string("exception: ") + ex.what();
    }
    report.name = e.name;
    reports.push_back(std::move(report));
  }
  std::sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
  return reports;
}

}  // namespace sphharm
