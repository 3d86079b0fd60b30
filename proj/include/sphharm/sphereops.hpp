#ifndef SPHHARM_SPHEREOPS_HPP
#define SPHHARM_SPHEREOPS_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sphharm/basis.hpp"
#include "sphharm/exactpoly.hpp"
#include "sphharm/quadrature.hpp"

namespace sphharm {

/// Outcome of one identity check.
struct CheckReport {
  std::string name;
  bool passed = true;
  double max_residual = 0.0;
  std::string witness;  ///< first violating input, empty when passed

  /// Folds a residual in; the first failure is kept as the witness.
  void record(double residual, bool ok, const std::string& where);
};

/// Canonical pairs (i, j), 0 <= i < j < d, in lexicographic order.
std::vector<std::pair<int, int>> angular_pairs(int d);

/// D_{i,j} p = x_i d_j p - x_j d_i p (0-based axes; D_{j,i} = -D_{i,j}).
MultiPoly angular_derivative(int i, int j, const MultiPoly& p);

/// Delta_0 by the radial split: each homogeneous component h of degree m
/// contributes ||x||^2 Delta h - m(m+d-2) h; the sum is sphere-reduced.
MultiPoly laplace_beltrami(const MultiPoly& p);
/// sphere_reduce(sum_{i<j} D_{i,j}^2 p)
MultiPoly laplace_beltrami_via_dij(const MultiPoly& p);

/// Components sphere_reduce(d_j p - x_j sum_i x_i d_i p).
std::vector<MultiPoly> spherical_gradient(const MultiPoly& p);

/// Delta_0 Y == -n(n+d-2) Y after reduction, for every raw polynomial of
/// the basis. Requires attached polynomials.
CheckReport eigen_check(const HarmonicBasis& basis);

/// Commutator relations of the D_{i,j} and [D_{1,2}, sum D^2] = 0 on all
/// monomials of degree <= 4.
CheckReport commutator_check(int d);

struct IntegralPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// lhs = int f D_{i,j} g, rhs = -int (D_{i,j} f) g (unnormalised integrals).
IntegralPair integration_by_parts_check(int i, int j, const MultiPoly& f, const MultiPoly& g, const SphereRule& rule);

/// int f grad_0 g = -int (grad_0 f - (d-1) x f) g componentwise and
/// int grad_0 f . grad_0 g = -int (Delta_0 f) g, each within 1e-8 (1 + |lhs|).
CheckReport gradient_parts_check(const MultiPoly& f, const MultiPoly& g, const SphereRule& rule);

/// Function on S^2 in the angles (theta, phi) with
/// x = (sin theta sin phi, sin theta cos phi, cos theta).
using AngularFunction = std::function<double(double theta, double phi)>;

/// Finite-difference Laplace-Beltrami in d = 3: second-order central
/// differences at steps h and h/2 combined by one Richardson step.
/// Throws std::domain_error when sin theta < 10 h.
double beltrami_fd_d3(const AngularFunction& f, double theta, double phi, double h);

/// Delta(||x||^rho g) == rho(2n+rho+d-2) ||x||^{rho-2} g + ||x||^rho Delta g
/// exactly, for even rho >= 0 and homogeneous g of degree n.
CheckReport radial_laplace_identity_check(int rho, const MultiPoly& g);

}  // namespace sphharm

#endif  // SPHHARM_SPHEREOPS_HPP
