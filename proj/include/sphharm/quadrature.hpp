#ifndef SPHHARM_QUADRATURE_HPP
#define SPHHARM_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

#include "sphharm/exactpoly.hpp"

namespace sphharm {

/// Exact value coefficient * pi^pi_power.
struct PiMultiple {
  Rational coefficient;
  int pi_power = 0;

  double value() const;
};

/// omega_d = 2 pi^{d/2} / Gamma(d/2), the area of S^{d-1}, in exact form.
PiMultiple surface_area_exact(int d);
double surface_area(int d);

/// Zeroth moment of (1-t^2)^alpha on [-1,1]. Exact when 2*alpha is an
/// integer, otherwise evaluated through lgamma.
double jacobi_zeroth_moment(const Rational& alpha);

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exact_degree = 0;
};

/// Gauss rule for the weight (1-t^2)^alpha on [-1,1], alpha > -1.
/// Nodes are the eigenvalues of the symmetric Jacobi matrix, found by
/// Sturm-sequence bisection; weights are Christoffel numbers scaled by the
/// exact zeroth moment. Throws std::runtime_error on non-convergence.
Rule1D gauss_jacobi(int m, const Rational& alpha);

/// Weighted point set on S^{d-1}; points are stored row-wise.
struct SphereRule {
  int dimension = 0;
  int exact_degree = 0;
  std::vector<double> points;  // size() == weights.size() * dimension
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  std::span<const double> point(std::size_t i) const {
    return {points.data() + i * static_cast<std::size_t>(dimension), static_cast<std::size_t>(dimension)};
  }
};

/// Product rule in spherical polar coordinates integrating every polynomial
/// of total degree <= target_degree exactly (up to roundoff).
SphereRule sphere_product_rule(int d, int target_degree);

using SphereFunction = std::function<double(std::span<const double>)>;

double integrate_sphere(const SphereFunction& f, const SphereRule& rule);
/// Integral of an exact polynomial; the rule must be exact to its degree.
double integrate_sphere(const MultiPoly& p, const SphereRule& rule);

/// (1/omega_d) * integral of x^alpha over S^{d-1}, exactly:
/// zero for any odd exponent, otherwise prod_i (1/2)_{alpha_i/2} / (d/2)_{|alpha|/2}.
Rational monomial_integral(const MultiIndex& alpha);

/// (1/omega_d) * integral of p over S^{d-1}, exactly.
Rational sphere_mean_exact(const MultiPoly& p);

}  // namespace sphharm

#endif  // SPHHARM_QUADRATURE_HPP
