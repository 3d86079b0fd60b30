#include "sphharm/zonalsys.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "sphharm/kernels.hpp"
#include "sphharm/orthopoly.hpp"
#include "sphharm/sampling.hpp"

namespace sphharm {

HarmonicBasis reference_basis(int n, int d) {
  if (d == 2) return basis_d2(n);
  return sph_coord_basis(n, d);
}

namespace {

constexpr double kPivotThreshold = 1e-10;
constexpr double kConditionCap = 1e12;
constexpr int kRetryBudget = 8;

using Feature = std::function<Eigen::VectorXd(const std::vector<double>&)>;

// Sequential Gram-Schmidt on feature vectors: the squared residual of a
// candidate is the Schur-complement pivot of the Gram matrix of features.
std::vector<std::vector<double>> greedy_points(std::size_t count, int d, std::uint64_t seed, int candidates,
                                               const Feature& feature, const char* who) {
  if (candidates < 1) throw std::invalid_argument(std::string(who) + ": candidates_per_step must be >= 1");
  Rng rng(seed);
  std::vector<Eigen::VectorXd> q;
  std::vector<std::vector<double>> chosen;
  for (std::size_t step = 0; step < count; ++step) {
    bool accepted = false;
    double best_pivot = -1.0;
    for (int attempt = 0; attempt <= kRetryBudget && !accepted; ++attempt) {
      best_pivot = -1.0;
      std::vector<double> best_point;
      Eigen::VectorXd best_residual;
      for (int c = 0; c < candidates; ++c) {
        auto x = random_unit_vector(rng, d);
        const Eigen::VectorXd v = feature(x);
        Eigen::VectorXd r = v;
        for (int pass = 0; pass < 2; ++pass) {
          for (const auto& qk : q) r -= qk.dot(r) * qk;
        }
        const double pivot = r.squaredNorm() / v.squaredNorm();
        if (pivot > best_pivot) {
          best_pivot = pivot;
          best_point = std::move(x);
          best_residual = std::move(r);
        }
      }
      if (best_pivot >= kPivotThreshold) {
        q.push_back(best_residual / best_residual.norm());
        chosen.push_back(std::move(best_point));
        accepted = true;
      }
    }
    if (!accepted) {
      std::ostringstream msg;
      msg << who << ": no candidate exceeded relative pivot " << kPivotThreshold << " at step " << step
          << " (best " << best_pivot << ")";
      throw std::runtime_error(msg.str());
    }
  }
  return chosen;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

Eigen::VectorXd ZonalSystem::solve(const Eigen::VectorXd& rhs) const {
  if (!(condition_number <= kConditionCap)) {
    std::ostringstream msg;
    msg << "ZonalSystem: condition number " << condition_number << " exceeds " << kConditionCap
        << "; re-draw the system with another seed";
    throw std::runtime_error(msg.str());
  }
  if (rhs.size() != gram.rows()) throw std::invalid_argument("ZonalSystem: right-hand side size mismatch");
  return solver.solve(rhs);
}

ZonalSystem greedy_fundamental_system(int n, int d, std::uint64_t seed, int candidates_per_step) {
  if (n < 0) throw std::domain_error("greedy_fundamental_system: degree must be >= 0");
  if (d < 2) throw std::domain_error("greedy_fundamental_system: requires d >= 2");
  const HarmonicBasis basis = reference_basis(n, d);
  const Feature feature = [&basis](const std::vector<double>& x) {
    return basis.evaluate(SpherePoint{x, std::nullopt});
  };
  const auto raw = greedy_points(basis.size(), d, seed, candidates_per_step, feature, "greedy_fundamental_system");

  ZonalSystem sys;
  sys.degree = n;
  sys.dimension = d;
  const auto size = static_cast<Eigen::Index>(raw.size());
  sys.basis_matrix.resize(size, size);
  sys.gram.resize(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    sys.points.push_back(SpherePoint{raw[static_cast<std::size_t>(i)], std::nullopt});
    sys.basis_matrix.row(i) = feature(raw[static_cast<std::size_t>(i)]).transpose();
  }
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      sys.gram(i, j) = zonal_eval(n, d, std::clamp(dot(raw[static_cast<std::size_t>(i)], raw[static_cast<std::size_t>(j)]), -1.0, 1.0));
    }
  }
  sys.det_gram = sys.gram.determinant();
  sys.det_basis_matrix = sys.basis_matrix.determinant();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sys.gram, Eigen::EigenvaluesOnly);
  sys.min_eigenvalue = eig.eigenvalues().minCoeff();
  const double max_eigenvalue = eig.eigenvalues().maxCoeff();
  sys.condition_number =
      sys.min_eigenvalue > 0 ? max_eigenvalue / sys.min_eigenvalue : std::numeric_limits<double>::infinity();
  sys.solver.compute(sys.gram);
  return sys;
}

Eigen::MatrixXd zonal_basis_coeffs(const ZonalSystem& sys, const HarmonicBasis& basis) {
  if (basis.degree() != sys.degree || basis.dimension() != sys.dimension) {
    throw std::invalid_argument("zonal_basis_coeffs: basis does not match the system");
  }
  if (!basis.orthonormal()) throw std::invalid_argument("zonal_basis_coeffs: basis must be orthonormal");
  const auto size = static_cast<Eigen::Index>(sys.points.size());
  Eigen::MatrixXd values(size, size);  // values(j, k) = Y_k(x_j)
  for (Eigen::Index j = 0; j < size; ++j) values.row(j) = basis.evaluate(sys.points[static_cast<std::size_t>(j)]).transpose();
  Eigen::MatrixXd coeffs(size, size);
  for (Eigen::Index k = 0; k < size; ++k) coeffs.row(k) = sys.solve(values.col(k)).transpose();
  return coeffs;
}

SphereFunction interpolate(const ZonalSystem& sys, const Eigen::VectorXd& values) {
  const Eigen::VectorXd c = sys.solve(values);
  std::vector<std::vector<double>> nodes;
  for (const auto& p : sys.points) nodes.push_back(p.cartesian);
  const int n = sys.degree;
  const int d = sys.dimension;
  return [c, nodes = std::move(nodes), n, d](std::span<const double> x) {
    if (static_cast<int>(x.size()) != d) throw std::invalid_argument("interpolate: point dimension mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      sum += c(static_cast<Eigen::Index>(i)) * zonal_eval(n, d, std::clamp(dot(x, nodes[i]), -1.0, 1.0));
    }
    return sum;
  };
}

PowerSystem power_basis_system(int n, int d, std::uint64_t seed, int candidates_per_step) {
  if (n < 0) throw std::domain_error("power_basis_system: degree must be >= 0");
  if (d < 1) throw std::domain_error("power_basis_system: requires d >= 1");
  // <x, xi>^n = sum_alpha (n!/alpha!) xi^alpha x^alpha; scaling by sqrt(alpha!)
  // turns the apolar pairing into the Euclidean dot product.
  const auto alphas = monomials_of_degree(n, d);
  std::vector<double> scale;
  const BigInt nfact = factorial(n);
  for (const auto& a : alphas) {
    const Rational c = Rational(nfact) / Rational(a.factorial());
    scale.push_back(c.get_d() * std::sqrt(Rational(a.factorial()).get_d()));
  }
  const Feature feature = [&alphas, &scale](const std::vector<double>& xi) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(alphas.size()));
    for (std::size_t k = 0; k < alphas.size(); ++k) {
      double m = scale[k];
      for (std::size_t i = 0; i < xi.size(); ++i) m *= std::pow(xi[i], alphas[k][static_cast<int>(i)]);
      v(static_cast<Eigen::Index>(k)) = m;
    }
    return v;
  };
  PowerSystem sys;
  sys.degree = n;
  sys.dimension = d;
  sys.points = greedy_points(alphas.size(), d, seed, candidates_per_step, feature, "power_basis_system");
  const auto size = static_cast<Eigen::Index>(sys.points.size());
  sys.gram.resize(size, size);
  const double nf = nfact.get_d();
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      sys.gram(i, j) = nf * std::pow(dot(sys.points[static_cast<std::size_t>(i)], sys.points[static_cast<std::size_t>(j)]), n);
    }
  }
  return sys;
}

double RidgeDecomposition::operator()(std::span<const double> x) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < points.size(); ++j) {
    const double t = dot(x, points[j]);
    double acc = 0.0;
    for (auto it = coeffs[j].rbegin(); it != coeffs[j].rend(); ++it) acc = acc * t + *it;
    sum += acc;
  }
  return sum;
}

RidgeDecomposition ridge_decompose(const MultiPoly& f, const PowerSystem& sys) {
  if (f.dimension() != sys.dimension) throw std::invalid_argument("ridge_decompose: dimension mismatch");
  const int n = sys.degree;
  if (f.degree().value_or(0) > n) throw std::invalid_argument("ridge_decompose: polynomial degree exceeds the system degree");
  const auto size = static_cast<Eigen::Index>(sys.points.size());
  RidgeDecomposition out;
  out.points = sys.points;
  out.coeffs.assign(sys.points.size(), std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0));
  for (int m = 0; m <= n; ++m) {
    const MultiPoly fm = homogeneous_part(f, m);
    const double mf = factorial(m).get_d();
    Eigen::MatrixXd g(size, size);
    Eigen::VectorXd rhs(size);
    for (Eigen::Index i = 0; i < size; ++i) {
      const auto& xi = sys.points[static_cast<std::size_t>(i)];
      for (Eigen::Index j = 0; j < size; ++j) g(i, j) = mf * std::pow(dot(xi, sys.points[static_cast<std::size_t>(j)]), m);
      rhs(i) = mf * eval_float(fm, xi);
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
    cod.setThreshold(kPivotThreshold);
    cod.compute(g);
    const auto needed = static_cast<Eigen::Index>(dim_homogeneous(m, sys.dimension));
    if (cod.rank() < needed) {
      std::ostringstream msg;
      msg << "ridge_decompose: restricted Gram matrix at degree m = " << m << " has rank " << cod.rank()
          << ", expected " << needed;
      throw std::runtime_error(msg.str());
    }
    if (fm.is_zero()) continue;
    const Eigen::VectorXd c = cod.solve(rhs);
    for (Eigen::Index j = 0; j < size; ++j) out.coeffs[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] = c(j);
  }
  return out;
}

}  // namespace sphharm
