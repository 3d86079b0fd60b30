#ifndef SPHHARM_ZONALSYS_HPP
#define SPHHARM_ZONALSYS_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "sphharm/basis.hpp"
#include "sphharm/exactpoly.hpp"
#include "sphharm/quadrature.hpp"

namespace sphharm {

/// Orthonormal basis used to form M_N: basis_d2 for d = 2, sph_coord_basis otherwise.
HarmonicBasis reference_basis(int n, int d);

/// N = dim H_n^d points together with
///   basis_matrix(i, k) = Y_k(x_i) for the reference basis and
///   gram(i, j)         = Z_n(<x_i, x_j>),
/// so that gram = M M^T.
struct ZonalSystem {
  int degree = 0;
  int dimension = 0;
  std::vector<SpherePoint> points;
  Eigen::MatrixXd basis_matrix;
  Eigen::MatrixXd gram;
  double det_gram = 0.0;
  double det_basis_matrix = 0.0;
  double min_eigenvalue = 0.0;
  double condition_number = 0.0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> solver;

  /// Solves gram c = rhs; throws std::runtime_error when cond > 1e12.
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;
};

/// Greedy determinant maximisation over seeded uniform candidates. Each step
/// keeps the candidate with the largest Schur-complement pivot of the zonal
/// Gram matrix; a step whose best relative pivot stays below 1e-10 after
/// the retry budget throws std::runtime_error.
ZonalSystem greedy_fundamental_system(int n, int d, std::uint64_t seed, int candidates_per_step = 32);

/// Row k holds c_k with Y_k = sum_i c_k[i] Z_n(<., x_i>).
Eigen::MatrixXd zonal_basis_coeffs(const ZonalSystem& sys, const HarmonicBasis& basis);

/// The unique element of H_n^d taking `values` at the system's points.
SphereFunction interpolate(const ZonalSystem& sys, const Eigen::VectorXd& values);

/// r = dim P_n^d unit vectors xi_j whose apolar Gram n! <xi_i, xi_j>^n is
/// nonsingular, so that {<x, xi_j>^n} spans P_n^d.
struct PowerSystem {
  int degree = 0;
  int dimension = 0;
  std::vector<std::vector<double>> points;
  Eigen::MatrixXd gram;
};

PowerSystem power_basis_system(int n, int d, std::uint64_t seed, int candidates_per_step = 32);

/// f(x) = sum_j p_j(<x, xi_j>) with p_j(t) = sum_m coeffs[j][m] t^m.
struct RidgeDecomposition {
  std::vector<std::vector<double>> coeffs;
  std::vector<std::vector<double>> points;

  double operator()(std::span<const double> x) const;
};

/// Per homogeneous degree m <= n, the minimum-norm solution of
/// [m! <xi_i, xi_j>^m] c = [m! f_m(xi_i)]. Throws std::runtime_error naming
/// m when the restricted Gram matrix has rank below dim P_m^d.
RidgeDecomposition ridge_decompose(const MultiPoly& f, const PowerSystem& sys);

}  // namespace sphharm

#endif  // SPHHARM_ZONALSYS_HPP
