#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sphharm/basis.hpp"
#include "sphharm/quadrature.hpp"
#include "sphharm/sampling.hpp"
#include "test_support.hpp"

using namespace sphharm;
using namespace sphharm::testing;

namespace {

constexpr double kPi = std::numbers::pi;

// 2 prod Gamma((a_i + 1)/2) / Gamma((|a| + d)/2), or 0 for any odd exponent
double beta_oracle(const MultiIndex& alpha) {
  double log_num = 0.0;
  for (int e : alpha.exponents()) {
    if (e % 2 != 0) return 0.0;
    log_num += std::lgamma(0.5 * (e + 1));
  }
  return 2.0 * std::exp(log_num - std::lgamma(0.5 * (alpha.degree() + alpha.dimension())));
}

std::vector<MultiIndex> monomials_up_to(int n, int d) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= n; ++k)
    for (auto& a : monomials_of_degree(k, d)) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("surface areas") {
  CHECK(std::abs(surface_area(2) - 2 * kPi) <= 1e-15);
  CHECK(std::abs(surface_area(3) - 4 * kPi) <= 1e-14);
  CHECK(std::abs(surface_area(4) - 2 * kPi * kPi) <= 1e-14);
  CHECK(surface_area_exact(4).coefficient == 2);
  CHECK(surface_area_exact(4).pi_power == 2);
  CHECK(surface_area_exact(3).coefficient == 4);
  CHECK(surface_area_exact(5).coefficient == frac(8, 3));
  for (int d = 1; d <= 12; ++d) {
    const double oracle = 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
    CHECK(std::abs(surface_area(d) - oracle) <= 1e-13 * oracle);
    CHECK(std::abs(surface_area_exact(d).value() - oracle) <= 1e-13 * oracle);
  }
  CHECK_THROWS_AS(surface_area(0), std::domain_error);
}

TEST_CASE("gauss-jacobi small cases") {
  const Rule1D mid = gauss_jacobi(1, Rational(0));
  REQUIRE(mid.nodes.size() == 1);
  CHECK(std::abs(mid.nodes[0]) <= 1e-15);
  CHECK(std::abs(mid.weights[0] - 2.0) <= 1e-15);
  CHECK(mid.exact_degree == 1);

  for (int m = 1; m <= 6; ++m) {
    const Rule1D r = gauss_jacobi(m, frac(1, 2));
    double s = 0.0;
    for (double w : r.weights) s += w;
    CHECK(std::abs(s - kPi / 2) <= 1e-13);
    CHECK(r.exact_degree == 2 * m - 1);
  }
  for (int m = 2; m <= 6; ++m) {
    const Rule1D r = gauss_jacobi(m, Rational(0));
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * r.nodes[i] * r.nodes[i];
    CHECK(std::abs(s - 2.0 / 3.0) <= 1e-14);
  }
  CHECK_THROWS_AS(gauss_jacobi(0, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(gauss_jacobi(3, Rational(-1)), std::domain_error);
}

TEST_CASE("gauss-jacobi structure and moments") {
  for (const Rational& alpha : {frac(-1, 2), Rational(0), frac(1, 2), Rational(1), frac(3, 2), frac(1, 3)}) {
    for (int m : {1, 2, 5, 10, 24, 60}) {
      const Rule1D r = gauss_jacobi(m, alpha);
      REQUIRE(r.nodes.size() == static_cast<std::size_t>(m));
      for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        CHECK(r.weights[i] > 0.0);
        CHECK(std::abs(r.nodes[i] + r.nodes[r.nodes.size() - 1 - i]) <= 1e-14);
        CHECK(std::abs(r.weights[i] - r.weights[r.weights.size() - 1 - i]) <= 1e-13 * r.weights[i]);
        if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
        CHECK(std::abs(r.nodes[i]) < 1.0);
      }
      // even moments: B((k+1)/2, a+1)
      const double a = alpha.get_d();
      for (int k = 0; k <= 2 * m - 1; k += 2) {
        double s = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
        const double oracle =
            std::exp(std::lgamma(0.5 * (k + 1)) + std::lgamma(a + 1) - std::lgamma(0.5 * (k + 1) + a + 1));
        CHECK(std::abs(s - oracle) <= 1e-12 * oracle);
      }
    }
  }
}

TEST_CASE("jacobi zeroth moment") {
  CHECK(std::abs(jacobi_zeroth_moment(Rational(0)) - 2.0) <= 1e-15);
  CHECK(std::abs(jacobi_zeroth_moment(frac(-1, 2)) - kPi) <= 1e-15);
  CHECK(std::abs(jacobi_zeroth_moment(Rational(1)) - 4.0 / 3.0) <= 1e-15);
  const double third = std::exp(std::lgamma(0.5) + std::lgamma(4.0 / 3.0) - std::lgamma(0.5 + 4.0 / 3.0));
  CHECK(std::abs(jacobi_zeroth_moment(frac(1, 3)) - third) <= 1e-13);
}

TEST_CASE("sphere product rule basics") {
  for (int d = 2; d <= 6; ++d) {
    const SphereRule rule = sphere_product_rule(d, 4);
    CHECK(rule.exact_degree >= 4);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      s += rule.weights[i];
      CHECK(rule.weights[i] > 0.0);
      double nrm = 0.0;
      for (double v : rule.point(i)) nrm += v * v;
      CHECK(std::abs(std::sqrt(nrm) - 1.0) <= 1e-12);
    }
    CHECK(std::abs(s - surface_area(d)) <= 1e-12 * surface_area(d));
    CHECK(std::abs(integrate_sphere([](std::span<const double>) { return 1.0; }, rule) - surface_area(d)) <=
          1e-12 * surface_area(d));
  }
  const SphereRule s2 = sphere_product_rule(3, 2);
  CHECK(std::abs(integrate_sphere(mono({2, 0, 0}), s2) - 4 * kPi / 3) <= 1e-12);
  CHECK(std::abs(integrate_sphere(mono({1, 1, 0}), s2)) <= 1e-13);
  CHECK_THROWS_AS(integrate_sphere(mono({1, 1}), s2), std::invalid_argument);
  CHECK_THROWS_AS(sphere_product_rule(1, 3), std::domain_error);
}

TEST_CASE("monomial integral oracle") {
  for (int d = 2; d <= 6; ++d) {
    CHECK(monomial_integral(MultiIndex::zero(d)) == 1);
    std::vector<int> e(static_cast<std::size_t>(d), 0);
    e[0] = 2;
    CHECK(monomial_integral(MultiIndex(e)) == frac(1, d));
    e[0] = 1;
    CHECK(monomial_integral(MultiIndex(e)) == 0);
    for (const auto& a : monomials_up_to(8, d))
      CHECK(std::abs(monomial_integral(a).get_d() * surface_area(d) - beta_oracle(a)) <= 1e-13 * surface_area(d));
  }
  CHECK(sphere_mean_exact(MultiPoly::norm_sq(4)) == 1);
}

TEST_CASE("exactness sweep") {
  for (int d = 2; d <= 4; ++d) {
    for (int n = 0; n <= 10; ++n) {
      const SphereRule rule = sphere_product_rule(d, n);
      for (const auto& a : monomials_up_to(n, d)) {
        const double oracle = beta_oracle(a);
        const double got = integrate_sphere(MultiPoly::monomial(a), rule);
        CHECK(std::abs(got - oracle) <= 1e-11 * std::max(std::abs(oracle), 1.0));
      }
    }
  }
}

TEST_CASE("saturation under a finer rule") {
  Rng rng(21);
  for (int d = 2; d <= 5; ++d) {
    const SphereRule coarse = sphere_product_rule(d, 8);
    const SphereRule fine = sphere_product_rule(d, 17);
    for (int k = 0; k < 5; ++k) {
      const MultiPoly p = random_polynomial(rng, d, 8, 12);
      const double a = integrate_sphere(p, coarse);
      const double b = integrate_sphere(p, fine);
      CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("harmonics of different degrees are orthogonal under the rule") {
  const SphereRule rule = sphere_product_rule(3, 8);
  const HarmonicBasis y2 = basis_d3(2);
  const HarmonicBasis y3 = basis_d3(3);
  for (std::size_t i = 0; i < y2.size(); ++i) {
    const auto f = [&](std::span<const double> x) {
      const SpherePoint p{std::vector<double>(x.begin(), x.end()), std::nullopt};
      return y2.evaluate(p)(static_cast<Eigen::Index>(i)) * y2.evaluate(p)(static_cast<Eigen::Index>(i));
    };
    CHECK(std::abs(integrate_sphere(f, rule) - surface_area(3)) <= 1e-10 * surface_area(3));
    for (std::size_t j = 0; j < y3.size(); ++j) {
      const auto g = [&](std::span<const double> x) {
        const SpherePoint p{std::vector<double>(x.begin(), x.end()), std::nullopt};
        return y2.evaluate(p)(static_cast<Eigen::Index>(i)) * y3.evaluate(p)(static_cast<Eigen::Index>(j));
      };
      CHECK(std::abs(integrate_sphere(g, rule)) <= 1e-10);
    }
  }
}
