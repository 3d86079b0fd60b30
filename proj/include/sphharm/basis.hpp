#ifndef SPHHARM_BASIS_HPP
#define SPHHARM_BASIS_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sphharm/exactpoly.hpp"
#include "sphharm/orthopoly.hpp"
#include "sphharm/quadrature.hpp"

namespace sphharm {

/// Point on S^{d-1}. Angles follow the spherical polar convention
///   x_1 = sin t_{d-1} ... sin t_2 sin t_1
///   x_2 = sin t_{d-1} ... sin t_2 cos t_1
///   x_k = sin t_{d-1} ... sin t_k cos t_{k-1}   (3 <= k <= d)
/// with angles[0] = t_1 in [0, 2 pi) and t_i in [0, pi] for i >= 2.
struct SpherePoint {
  std::vector<double> cartesian;
  std::optional<std::vector<double>> angles;

  int dimension() const { return static_cast<int>(cartesian.size()); }
};

/// Validates ||x|| = 1 within 1e-12 (throws std::domain_error otherwise).
SpherePoint make_sphere_point(std::vector<double> x);
SpherePoint angles_to_cartesian(std::span<const double> angles, int d);
/// Angles undetermined at a pole (an inner radius of exactly zero) are set to 0.
SpherePoint cartesian_to_angles(std::span<const double> x);
/// `p` with the angle representation filled in.
SpherePoint with_angles(const SpherePoint& p);

std::uint64_t dim_homogeneous(int n, int d);
std::uint64_t dim_harmonic(int n, int d);
std::uint64_t dim_pi_sphere(int n, int d);

/// {alpha : |alpha| = n, alpha_d in {0, 1}} in graded-lex order; the
/// canonical labelling shared by every basis constructor.
std::vector<MultiIndex> harmonic_indices(int n, int d);

/// Ordered basis of H_n^d.
///
/// Element k is sum_j mix(k, j) * raw_j, where raw_j is either the exact
/// polynomial polys()[j] or, for closed-form bases, a raw function of the
/// angles. When both exist they agree, and the closed form is used for
/// evaluation.
class HarmonicBasis {
 public:
  using RawEvaluator = std::function<Eigen::VectorXd(const SpherePoint&)>;

  HarmonicBasis(int degree, int dimension, std::vector<MultiIndex> tags, std::vector<MultiPoly> polys,
                Eigen::MatrixXd mix, bool orthonormal, RawEvaluator closed_form = {});

  int degree() const { return degree_; }
  int dimension() const { return dimension_; }
  std::size_t size() const { return tags_.size(); }
  bool orthonormal() const { return orthonormal_; }
  const std::vector<MultiIndex>& tags() const& { return tags_; }
  std::vector<MultiIndex> tags() && { return std::move(tags_); }
  const std::vector<MultiPoly>& polys() const& { return polys_; }
  std::vector<MultiPoly> polys() && { return std::move(polys_); }
  bool has_polynomials() const { return !polys_.empty(); }
  bool has_closed_form() const { return static_cast<bool>(closed_form_); }
  const Eigen::MatrixXd& mix() const { return mix_; }

  Eigen::VectorXd evaluate(const SpherePoint& x) const;
  Eigen::VectorXd evaluate_raw(const SpherePoint& x) const;
  /// Element values through the exact polynomials even when a closed form exists.
  Eigen::VectorXd evaluate_polynomials(std::span<const double> x) const;

  /// Same raw carriers and evaluator, new mixing matrix.
  HarmonicBasis remixed(Eigen::MatrixXd mix, bool orthonormal) const;

 private:
  int degree_;
  int dimension_;
  std::vector<MultiIndex> tags_;
  std::vector<MultiPoly> polys_;
  std::shared_ptr<const std::vector<CompiledPoly>> compiled_;
  Eigen::MatrixXd mix_;
  bool orthonormal_;
  RawEvaluator closed_form_;
};

/// Values of every basis element at every rule node, one row per node.
Eigen::MatrixXd basis_values(const HarmonicBasis& basis, const SphereRule& rule);
/// [<Y_i, Y_j>] with the normalised inner product (1/omega_d) int f g.
Eigen::MatrixXd gram_matrix(const HarmonicBasis& basis, const SphereRule& rule);

/// Monic harmonic p_alpha for any alpha (d >= 3), via
/// p_{alpha+e_i} = x_i p_alpha - ||x||^2 d_i p_alpha / (2|alpha| + d - 2).
MultiPoly maxwell_polynomial(const MultiIndex& alpha);
/// Maxwell basis {p_alpha : alpha in harmonic_indices(n, d)}; d >= 3.
HarmonicBasis maxwell_basis(int n, int d);

/// Orthonormalises with respect to the rule. Throws std::runtime_error
/// naming the first element whose pivot falls below 1e-8.
HarmonicBasis gram_schmidt(const HarmonicBasis& basis, const SphereRule& rule);

struct SphCoordNormalization {
  Rational inverse_h_squared;  ///< 1/h_alpha^2 from the product formula
  double quadrature_check;     ///< same quantity from 1-D Gauss-Jacobi integrals
};
SphCoordNormalization sph_coord_normalization(const MultiIndex& alpha);

/// Unnormalised product g(t_1) prod_j sin^{k_j} C^{lambda_j}_{alpha_j}(cos) in angles.
double sph_coord_raw(const MultiIndex& alpha, std::span<const double> angles);
/// The same product as an exact homogeneous polynomial of degree |alpha|.
MultiPoly sph_coord_polynomial(const MultiIndex& alpha);

/// Orthonormal basis in spherical coordinates (d >= 3). Evaluation uses
/// the angle closed form; exact polynomials are attached on request.
HarmonicBasis sph_coord_basis(int n, int d, bool with_polynomials = false);

/// Orthonormal Re/Im (x_1 + i x_2)^n scaled by sqrt 2 (the constant for n = 0).
HarmonicBasis basis_d2(int n);
/// r^n T_n(x_1/r) and r^{n-1} x_2 U_{n-1}(x_1/r) as polynomials (n >= 1).
std::pair<MultiPoly, MultiPoly> basis_d2_chebyshev(int n);

/// Realified orthonormal basis of H_n^3 built on associated Legendre
/// functions: k = 0 and the (cos k phi, sin k phi) pairs for 1 <= k <= n.
HarmonicBasis basis_d3(int n, LegendreSign convention = LegendreSign::degree_parity);
/// Complex form Y_{k,n}, k = -n..n, at a point of S^2 given by (theta, phi).
std::vector<std::complex<double>> basis_d3_complex(int n, double theta, double phi,
                                                   LegendreSign convention = LegendreSign::degree_parity);

/// p = sum_j ||x||^{2j} P_{n-2j} with P harmonic; zero components omitted.
std::vector<std::pair<int, MultiPoly>> harmonic_decompose(const MultiPoly& p);

/// ||x||^n C_n^lambda(x_d/||x||), lambda = (d-2)/2.
MultiPoly axial_harmonic(int n, int d);

/// sum_i c_i x_axis^i (x_1^2 + ... + x_{axis+1}^2)^{(degree-i)/2} for a
/// polynomial c of parity `degree`.
MultiPoly homogenize_profile(const Poly1& c, int d, int axis, int degree);

}  // namespace sphharm

#endif  // SPHHARM_BASIS_HPP
