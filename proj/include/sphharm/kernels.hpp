#ifndef SPHHARM_KERNELS_HPP
#define SPHHARM_KERNELS_HPP

#include <functional>
#include <span>

#include "sphharm/basis.hpp"
#include "sphharm/exactpoly.hpp"
#include "sphharm/orthopoly.hpp"
#include "sphharm/quadrature.hpp"

namespace sphharm {

/// Reproducing kernel Z_n of H_n^d as a profile in t = <x, y>.
///
/// For d >= 3 the profile is ((n + lambda)/lambda) C_n^lambda with
/// lambda = (d-2)/2. For d = 2 it is 2 T_n (n >= 1) and 1 for n = 0.
struct ZonalKernel {
  int degree = 0;
  int dimension = 0;
  Rational lambda;
  Poly1 profile;

  double operator()(double t) const;
};

ZonalKernel zonal_kernel(int n, int d);

/// Z_n(x, y) for <x, y> = t, by a float recurrence. t is clamped to [-1, 1]
/// after a 1e-12 tolerance check.
double zonal_eval(int n, int d, double t);

/// sum_k Y_k(x) Y_k(y) over an orthonormal basis.
double zonal_from_basis(const HarmonicBasis& basis, const SpherePoint& x, const SpherePoint& y);

/// Exact orthogonal projection of a homogeneous p onto H_n^d:
/// sum_j ||x||^{2j} Delta^j p / (4^j j! (-n + 2 - d/2)_j).
MultiPoly project_homogeneous(const MultiPoly& p);

/// Harmonic polynomial of degree n agreeing on the sphere with proj_n of
/// the restriction of an arbitrary p.
MultiPoly project_sphere(const MultiPoly& p, int n);

/// x -> (1/omega_d) int f(y) Z_n(<x, y>) dsigma(y), evaluated with the rule.
SphereFunction project_quadrature(const SphereFunction& f, int n, const SphereRule& rule);

/// sum_alpha alpha! a_alpha b_alpha over the common degree; 0 across degrees.
Rational apolar_inner(const MultiPoly& p, const MultiPoly& q);

/// <x, y>^n / n! as a polynomial in y, the reproducing kernel of the
/// apolar pairing on P_n^d.
MultiPoly apolar_kernel(std::span<const Rational> x, int n);

struct ApolarSphereRatio {
  Rational apolar;      ///< <p, q>_partial
  double sphere_inner;  ///< (1/omega_d) int p q, by quadrature
  Rational scale;       ///< 2^n (d/2)_n

  double residual() const;
};

/// Both sides of <p, q>_partial = 2^n (d/2)_n <p, q>_sphere for homogeneous
/// p, q of degree n with q harmonic.
ApolarSphereRatio apolar_sphere_ratio_check(const MultiPoly& p, const MultiPoly& q, const SphereRule& rule);

using Profile = std::function<double(double)>;

/// lambda_n(f) = omega_{d-1} int f(t) C_n^lambda(t)/C_n^lambda(1) (1-t^2)^{(d-3)/2} dt
/// with an m-node Gauss-Jacobi rule. For d = 2 the normalised Gegenbauer
/// factor is replaced by its limit T_n.
double funk_hecke(const Profile& f, int n, int d, int m);

/// max(32, deg f + n + 8)
int funk_hecke_default_nodes(int f_degree, int n);

}  // namespace sphharm

#endif  // SPHHARM_KERNELS_HPP
