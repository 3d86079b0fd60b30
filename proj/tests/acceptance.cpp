#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sphharm/basis.hpp"
#include "sphharm/exactpoly.hpp"
#include "sphharm/kernels.hpp"
#include "sphharm/orthopoly.hpp"
#include "sphharm/quadrature.hpp"
#include "sphharm/sampling.hpp"
#include "sphharm/sphereops.hpp"
#include "sphharm/zonalsys.hpp"

using namespace sphharm;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool ok = true;
  double worst = 0.0;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
    if (!cond) ok = false;
  }
  void residual(double r, double tol, const std::string& what) {
    worst = std::max(worst, r);
    require(r <= tol, what + " residual " + std::to_string(r));
  }
};

std::string where(int d, int n) { return "d = " + std::to_string(d) + ", n = " + std::to_string(n); }

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double clamp1(double t) { return std::clamp(t, -1.0, 1.0); }

SpherePoint point_of(std::span<const double> x) { return SpherePoint{std::vector<double>(x.begin(), x.end()), std::nullopt}; }

SpherePoint random_point(Rng& rng, int d) { return SpherePoint{random_unit_vector(rng, d), std::nullopt}; }

// 2 prod Gamma((a_i + 1)/2) / Gamma((|a| + d)/2), zero for any odd exponent
double beta_oracle(const MultiIndex& alpha) {
  double log_num = 0.0;
  for (int e : alpha.exponents()) {
    if (e % 2 != 0) return 0.0;
    log_num += std::lgamma(0.5 * (e + 1));
  }
  return 2.0 * std::exp(log_num - std::lgamma(0.5 * (alpha.degree() + alpha.dimension())));
}

// ((n + lambda)/lambda) C_n^lambda(t), lambda = (d-2)/2
double zonal_oracle(int n, int d, double t) {
  const double lam = 0.5 * (d - 2);
  return (n + lam) / lam * gegenbauer_value(n, lam, t);
}

MultiPoly random_harmonic(Rng& rng, const HarmonicBasis& b) {
  std::uniform_int_distribution<int> coef(-4, 4);
  MultiPoly q(b.dimension());
  for (const auto& p : b.polys()) q += Rational(coef(rng)) * p;
  if (q.is_zero()) q = b.polys().front();
  return q;
}

// Exact integer-coefficient profile of degree <= 4 as a float function.
std::function<double(double)> random_profile(Rng& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<double> c(5);
  for (auto& v : c) v = coef(rng);
  return [c](double t) {
    double s = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * t + *it;
    return s;
  };
}

Outcome criterion1() {
  Outcome o;
  for (int d = 3; d <= 5; ++d)
    for (int n = 0; n <= 6; ++n)
      for (const auto& alpha : monomials_of_degree(n, d))
        o.require(laplacian(maxwell_polynomial(alpha)).is_zero(), "Maxwell element not harmonic at " + where(d, n));
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int d = 2; d <= 6; ++d) {
    for (int n = 0; n <= 8; ++n) {
      const std::uint64_t expected =
          binomial(n + d - 1, n).get_ui() - (n >= 2 ? binomial(n + d - 3, n - 2).get_ui() : 0UL);
      o.require(dim_harmonic(n, d) == expected, "dim_harmonic at " + where(d, n));
      o.require(harmonic_indices(n, d).size() == expected, "harmonic_indices at " + where(d, n));
      o.require(reference_basis(n, d).size() == expected, "reference basis at " + where(d, n));
      if (d == 2) o.require(basis_d2(n).size() == expected, "basis_d2 at " + where(d, n));
      if (d == 3) o.require(basis_d3(n).size() == expected, "basis_d3 at " + where(d, n));
      if (d >= 3) {
        o.require(sph_coord_basis(n, d).size() == expected, "sph_coord_basis at " + where(d, n));
        o.require(maxwell_basis(n, d).size() == expected, "maxwell_basis at " + where(d, n));
      }
    }
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int d = 3; d <= 4; ++d) {
    for (int n = 0; n <= 6; ++n) {
      const HarmonicBasis b = sph_coord_basis(n, d);
      const Eigen::MatrixXd g = gram_matrix(b, sphere_product_rule(d, 2 * n));
      const auto size = static_cast<Eigen::Index>(b.size());
      o.residual((g - Eigen::MatrixXd::Identity(size, size)).cwiseAbs().maxCoeff(), 1e-9, "Gram at " + where(d, n));
    }
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  Rng rng(20240401);
  for (int d = 3; d <= 5; ++d) {
    for (int n = 0; n <= 8; ++n) {
      const HarmonicBasis b = sph_coord_basis(n, d);
      const std::optional<HarmonicBasis> b3 = d == 3 ? std::optional(basis_d3(n)) : std::nullopt;
      double worst = 0.0;
      double worst3 = 0.0;
      for (int k = 0; k < 100; ++k) {
        const SpherePoint x = random_point(rng, d);
        const SpherePoint y = random_point(rng, d);
        const double t = clamp1(dot(x.cartesian, y.cartesian));
        worst = std::max(worst, std::abs(zonal_from_basis(b, x, y) - zonal_oracle(n, d, t)));
        if (d == 3) {
          const double legendre_form = (2 * n + 1) * legendre_value(n, t);
          worst3 = std::max(worst3, std::abs(zonal_from_basis(b, x, y) - legendre_form));
          worst3 = std::max(worst3, std::abs(zonal_from_basis(*b3, x, y) - legendre_form));
        }
      }
      o.residual(worst, 1e-8, "addition formula at " + where(d, n));
      if (d == 3) o.residual(worst3, 1e-8, "(2n+1) P_n form at " + where(d, n));
    }
  }
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int n = 0; n <= 8; ++n) {
    const HarmonicBasis b = basis_d2(n);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double th = angle(rng);
      const double ph = angle(rng);
      const double xa[] = {th};
      const double ya[] = {ph};
      const SpherePoint x = angles_to_cartesian(xa, 2);
      const SpherePoint y = angles_to_cartesian(ya, 2);
      const double expected = n == 0 ? 1.0 : 2.0 * std::cos(n * (th - ph));
      worst = std::max(worst, std::abs(zonal_from_basis(b, x, y) - expected));
    }
    o.residual(worst, 1e-10, "2 cos n(theta - phi) form at " + where(2, n));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  Rng rng(20240405);
  for (int d = 2; d <= 6; ++d) {
    for (int n = 0; n <= 8; ++n) {
      const Rational dim(static_cast<unsigned long>(dim_harmonic(n, d)));
      o.require(zonal_kernel(n, d).profile(Rational(1)) == dim, "Z_n(1) != dim at " + where(d, n));
      double excess = 0.0;
      for (int k = 0; k < 1000; ++k) {
        const auto x = random_unit_vector(rng, d);
        const auto y = random_unit_vector(rng, d);
        excess = std::max(excess, std::abs(zonal_eval(n, d, clamp1(dot(x, y)))) - dim.get_d());
      }
      o.residual(std::max(excess, 0.0), 1e-10, "|Z_n| bound at " + where(d, n));
    }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (int n = 0; n <= 4; ++n)
    for (const auto& alpha : monomials_of_degree(n, 3))
      o.require(project_homogeneous(MultiPoly::monomial(alpha)) == maxwell_polynomial(alpha),
                "projection of x^alpha differs from p_alpha at " + where(3, n));

  Rng rng(20240406);
  for (int d = 3; d <= 4; ++d) {
    const SphereRule rule = sphere_product_rule(d, 12);
    for (int n = 0; n <= 5; ++n) {
      const HarmonicBasis b = maxwell_basis(n, d);
      const MultiPoly y = random_harmonic(rng, b);
      const SphereFunction f = [&](std::span<const double> x) { return eval_float(y, x); };
      for (int m = 0; m <= 6; ++m) {
        if (m == n || n + m > 12) continue;
        const SphereFunction pr = project_quadrature(f, m, rule);
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) worst = std::max(worst, std::abs(pr(random_unit_vector(rng, d))));
        o.residual(worst, 1e-8, "projection onto degree " + std::to_string(m) + " of a harmonic at " + where(d, n));
      }
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  Rng rng(20240407);
  for (int d = 3; d <= 4; ++d) {
    for (int n = 0; n <= 4; ++n) {
      const SphereRule rule = sphere_product_rule(d, 2 * n);
      const HarmonicBasis mb = maxwell_basis(n, d);
      for (int k = 0; k < 50; ++k) {
        MultiPoly p = MultiPoly::constant(d, Rational(k + 1));
        while (n > 0 && (p.degree() != n || p.is_zero())) p = random_polynomial(rng, d, n, 6, true);
        const MultiPoly q = random_harmonic(rng, mb);
        const ApolarSphereRatio r = apolar_sphere_ratio_check(p, q, rule);
        const double lhs = r.apolar.get_d();
        const double rhs = r.scale.get_d() * r.sphere_inner;
        // relative to the Cauchy-Schwarz bound on the pairing
        const double scale = std::sqrt(apolar_inner(p, p).get_d() * apolar_inner(q, q).get_d());
        o.residual(std::abs(lhs - rhs) / scale, 1e-8, "apolar bridge at " + where(d, n));
      }
    }
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  o.residual(std::abs(funk_hecke([](double t) { return t; }, 1, 3, funk_hecke_default_nodes(1, 1)) - 4 * kPi / 3),
             1e-10, "lambda_1(t) in d = 3");

  Rng rng(20240408);
  for (int d = 2; d <= 4; ++d) {
    for (int n = 0; n <= 6; ++n) {
      const SphereRule rule = sphere_product_rule(d, 4 + n);
      const HarmonicBasis b = reference_basis(n, d);
      for (int s = 0; s < 3; ++s) {
        const auto f = random_profile(rng);
        const double lam = funk_hecke(f, n, d, funk_hecke_default_nodes(4, n));
        const auto x = random_unit_vector(rng, d);
        const Eigen::VectorXd yx = b.evaluate(point_of(x));
        Eigen::VectorXd lhs = Eigen::VectorXd::Zero(yx.size());
        for (std::size_t i = 0; i < rule.size(); ++i)
          lhs += rule.weights[i] * f(clamp1(dot(x, rule.point(i)))) * b.evaluate(point_of(rule.point(i)));
        o.residual((lhs - lam * yx).cwiseAbs().maxCoeff(), 1e-7, "operator identity at " + where(d, n));
      }
    }
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  Rng rng(20240409);
  for (int d = 3; d <= 5; ++d)
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k < 50; ++k) {
        const MultiPoly p = random_polynomial(rng, d, n, 8);
        o.require(laplace_beltrami_via_dij(p) == laplace_beltrami(p), "Delta_0 routes differ at " + where(d, n));
      }

  for (int d = 2; d <= 5; ++d) {
    for (int n = 0; n <= 6; ++n) {
      std::vector<HarmonicBasis> bases;
      if (d == 2) bases.push_back(basis_d2(n));
      if (d == 3) bases.push_back(basis_d3(n));
      if (d >= 3) {
        bases.push_back(maxwell_basis(n, d));
        bases.push_back(sph_coord_basis(n, d, true));
      }
      for (const auto& b : bases) {
        if (!b.has_polynomials()) continue;
        const CheckReport r = eigen_check(b);
        o.require(r.passed && r.max_residual == 0.0, "eigenvalue at " + where(d, n) + ": " + r.witness);
      }
    }
  }

  const auto on_s2 = [](const MultiPoly& p) -> AngularFunction {
    return [p](double theta, double phi) {
      const double x[] = {std::sin(theta) * std::sin(phi), std::sin(theta) * std::cos(phi), std::cos(theta)};
      return eval_float(p, x);
    };
  };
  std::uniform_real_distribution<double> th(0.2, kPi - 0.2);
  std::uniform_real_distribution<double> ph(0.0, 2 * kPi);
  for (int n = 0; n <= 6; ++n) {
    const HarmonicBasis b = basis_d3(n);
    for (std::size_t k = 0; k < b.size(); ++k) {
      const AngularFunction f = [&](double theta, double phi) {
        const std::vector<double> x = {std::sin(theta) * std::sin(phi), std::sin(theta) * std::cos(phi), std::cos(theta)};
        return b.evaluate(point_of(x))(static_cast<Eigen::Index>(k));
      };
      const double t = th(rng);
      const double p = ph(rng);
      o.residual(std::abs(beltrami_fd_d3(f, t, p, 1e-3) + n * (n + 1) * f(t, p)), 1e-6,
                 "FD eigenvalue at n = " + std::to_string(n));
    }
  }
  for (int k = 0; k < 20; ++k) {
    const MultiPoly q = random_polynomial(rng, 3, 6, 8);
    const AngularFunction fq = on_s2(q);
    const AngularFunction lq = on_s2(laplace_beltrami(q));
    const double t = th(rng);
    const double p = ph(rng);
    o.residual(std::abs(beltrami_fd_d3(fq, t, p, 1e-3) - lq(t, p)), 1e-6, "FD oracle on a random polynomial");
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  Rng rng(20240410);
  for (int d = 3; d <= 4; ++d) {
    const SphereRule rule = sphere_product_rule(d, 10);
    for (int k = 0; k < 10; ++k) {
      const MultiPoly f = random_polynomial(rng, d, 4, 8);
      const MultiPoly g = random_polynomial(rng, d, 4, 8);
      for (const auto& [i, j] : angular_pairs(d)) {
        const IntegralPair r = integration_by_parts_check(i, j, f, g, rule);
        o.residual(std::abs(r.lhs - r.rhs) / (1.0 + std::abs(r.lhs)), 1e-8, "D_ij antisymmetry in d = " + std::to_string(d));
      }
      const CheckReport rep = gradient_parts_check(f, g, rule);
      o.worst = std::max(o.worst, rep.max_residual);
      o.require(rep.passed, "gradient identities: " + rep.witness);
    }
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  for (int d = 2; d <= 4; ++d) {
    const SphereRule rule = sphere_product_rule(d, 10);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    o.residual(std::abs(wsum - surface_area(d)) / surface_area(d), 1e-11, "weight sum in d = " + std::to_string(d));
    for (int n = 0; n <= 10; ++n) {
      for (const auto& alpha : monomials_of_degree(n, d)) {
        const double oracle = beta_oracle(alpha);
        const double got = integrate_sphere(MultiPoly::monomial(alpha), rule);
        const double err = oracle == 0.0 ? std::abs(got) : std::abs(got - oracle) / std::abs(oracle);
        o.residual(err, 1e-11, "monomial of " + where(d, n));
      }
    }
  }
  return o;
}

Outcome criterion12() {
  Outcome o;
  Rng rng(20240412);
  for (int n = 0; n <= 4; ++n) {
    const ZonalSystem sys = greedy_fundamental_system(n, 3, 12);
    o.require(sys.det_gram > 0.0, "det(gram) not positive at " + where(3, n));
    const double sq = sys.det_basis_matrix * sys.det_basis_matrix;
    o.residual(std::abs(sys.det_gram - sq) / std::abs(sys.det_gram), 1e-6, "det(gram) vs det(M)^2 at " + where(3, n));

    const HarmonicBasis src = maxwell_basis(n, 3);
    for (int s = 0; s < 5; ++s) {
      const MultiPoly y = random_harmonic(rng, src);
      Eigen::VectorXd values(static_cast<Eigen::Index>(sys.points.size()));
      for (std::size_t i = 0; i < sys.points.size(); ++i)
        values(static_cast<Eigen::Index>(i)) = eval_float(y, sys.points[i].cartesian);
      const SphereFunction f = interpolate(sys, values);
      double worst = 0.0;
      for (int k = 0; k < 100; ++k) {
        const auto x = random_unit_vector(rng, 3);
        worst = std::max(worst, std::abs(f(x) - eval_float(y, x)));
      }
      o.residual(worst, 1e-7, "held-out interpolation at " + where(3, n));
    }
  }
  return o;
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + SPHHARM_CLI_PATH + "\" " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, out};
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome criterion13() {
  Outcome o;
  for (const std::string args : {"check", "check --d 4 --nmax 4 --seed 99", "check --d 2 --nmax 5 --seed 3 --format csv"}) {
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    o.require(a.first == 0 && b.first == 0, "'" + args + "' exited with " + std::to_string(a.first));
    o.require(!a.second.empty() && a.second == b.second, "'" + args + "' output differs between runs");
  }
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact harmonicity of Maxwell elements", 10.0, criterion1},
      {2, "dimension bookkeeping", 1.0, criterion2},
      {3, "orthonormality under the product rule", 30.0, criterion3},
      {4, "addition formula", 30.0, criterion4},
      {5, "kernel bounds", 0.0, criterion5},
      {6, "projection", 0.0, criterion6},
      {7, "apolar bridge", 0.0, criterion7},
      {8, "Funk-Hecke", 0.0, criterion8},
      {9, "operator equivalence", 0.0, criterion9},
      {10, "integration by parts", 0.0, criterion10},
      {11, "quadrature exactness", 0.0, criterion11},
      {12, "zonal systems", 0.0, criterion12},
      {13, "determinism of check", 0.0, criterion13},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0 && secs >= c.budget_seconds && o.ok) {
      o.ok = false;
      o.detail = "exceeded the " + std::to_string(c.budget_seconds) + " s budget";
    }
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (max residual " << o.worst
         << ", " << secs << " s)";
    if (!o.ok) line << " -- " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
