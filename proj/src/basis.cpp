#include "sphharm/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sphharm/kernels.hpp"

namespace sphharm {

SpherePoint make_sphere_point(std::vector<double> x) {
  if (x.size() < 2) throw std::domain_error("SpherePoint: dimension must be >= 2");
  double nrm = 0.0;
  for (double v : x) nrm += v * v;
  if (std::abs(std::sqrt(nrm) - 1.0) > 1e-12) throw std::domain_error("SpherePoint: vector is not on the unit sphere");
  return SpherePoint{std::move(x), std::nullopt};
}

SpherePoint angles_to_cartesian(std::span<const double> angles, int d) {
  if (d < 2) throw std::domain_error("angles_to_cartesian: requires d >= 2");
  if (static_cast<int>(angles.size()) != d - 1) throw std::invalid_argument("angles_to_cartesian: expected d-1 angles");
  std::vector<double> x(static_cast<std::size_t>(d));
  // radius carries prod_{i >= k} sin t_i while walking down from x_d
  double radius = 1.0;
  for (int k = d; k >= 3; --k) {
    const double t = angles[static_cast<std::size_t>(k - 2)];
    x[static_cast<std::size_t>(k - 1)] = radius * std::cos(t);
    radius *= std::sin(t);
  }
  x[0] = radius * std::sin(angles[0]);
  x[1] = radius * std::cos(angles[0]);
  return SpherePoint{std::move(x), std::vector<double>(angles.begin(), angles.end())};
}

SpherePoint cartesian_to_angles(std::span<const double> x) {
  const int d = static_cast<int>(x.size());
  if (d < 2) throw std::domain_error("cartesian_to_angles: requires d >= 2");
  std::vector<double> angles(static_cast<std::size_t>(d - 1), 0.0);
  // prefix[k] = x_1^2 + ... + x_k^2
  std::vector<double> prefix(static_cast<std::size_t>(d) + 1, 0.0);
  for (int k = 1; k <= d; ++k) {
    const double v = x[static_cast<std::size_t>(k - 1)];
    prefix[static_cast<std::size_t>(k)] = prefix[static_cast<std::size_t>(k - 1)] + v * v;
  }
  for (int k = d; k >= 3; --k) {
    const double inner = std::sqrt(prefix[static_cast<std::size_t>(k - 1)]);
    angles[static_cast<std::size_t>(k - 2)] = std::atan2(inner, x[static_cast<std::size_t>(k - 1)]);
  }
  double t1 = std::atan2(x[0], x[1]);
  if (t1 < 0) t1 += 2.0 * std::numbers::pi;
  angles[0] = t1;
  return SpherePoint{std::vector<double>(x.begin(), x.end()), std::move(angles)};
}

SpherePoint with_angles(const SpherePoint& p) {
  if (p.angles) return p;
  return cartesian_to_angles(p.cartesian);
}

namespace {

std::uint64_t binom_u64(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return binomial(n, k).get_ui();
}

}  // namespace

std::uint64_t dim_homogeneous(int n, int d) {
  if (n < 0) return 0;
  return binom_u64(n + d - 1, n);
}

std::uint64_t dim_harmonic(int n, int d) {
  if (d < 1) throw std::domain_error("dim_harmonic: d must be >= 1");
  if (n < 0) return 0;
  return dim_homogeneous(n, d) - dim_homogeneous(n - 2, d);
}

std::uint64_t dim_pi_sphere(int n, int d) {
  if (n < 0) return 0;
  return dim_homogeneous(n, d) + dim_homogeneous(n - 1, d);
}

std::vector<MultiIndex> harmonic_indices(int n, int d) {
  std::vector<MultiIndex> out;
  for (auto& a : monomials_of_degree(n, d)) {
    if (a[d - 1] <= 1) out.push_back(std::move(a));
  }
  return out;
}

HarmonicBasis::HarmonicBasis(int degree, int dimension, std::vector<MultiIndex> tags, std::vector<MultiPoly> polys,
                             Eigen::MatrixXd mix, bool orthonormal, RawEvaluator closed_form)
    : degree_(degree),
      dimension_(dimension),
      tags_(std::move(tags)),
      polys_(std::move(polys)),
      mix_(std::move(mix)),
      orthonormal_(orthonormal),
      closed_form_(std::move(closed_form)) {
  const auto n = static_cast<Eigen::Index>(tags_.size());
  if (mix_.rows() != n || mix_.cols() != n) throw std::invalid_argument("HarmonicBasis: mix must be square of basis size");
  if (!polys_.empty() && polys_.size() != tags_.size()) throw std::invalid_argument("HarmonicBasis: polys/tags size mismatch");
  if (polys_.empty() && !closed_form_) throw std::invalid_argument("HarmonicBasis: no way to evaluate elements");
  auto compiled = std::make_shared<std::vector<CompiledPoly>>();
  for (const auto& p : polys_) compiled->emplace_back(p);
  compiled_ = std::move(compiled);
}

Eigen::VectorXd HarmonicBasis::evaluate_raw(const SpherePoint& x) const {
  if (x.dimension() != dimension_) throw std::invalid_argument("HarmonicBasis: point dimension mismatch");
  if (closed_form_) return closed_form_(x);
  Eigen::VectorXd raw(static_cast<Eigen::Index>(compiled_->size()));
  for (std::size_t j = 0; j < compiled_->size(); ++j) raw(static_cast<Eigen::Index>(j)) = (*compiled_)[j](x.cartesian);
  return raw;
}

Eigen::VectorXd HarmonicBasis::evaluate(const SpherePoint& x) const { return mix_ * evaluate_raw(x); }

Eigen::VectorXd HarmonicBasis::evaluate_polynomials(std::span<const double> x) const {
  if (polys_.empty()) throw std::logic_error("HarmonicBasis: no exact polynomials attached");
  Eigen::VectorXd raw(static_cast<Eigen::Index>(compiled_->size()));
  for (std::size_t j = 0; j < compiled_->size(); ++j) raw(static_cast<Eigen::Index>(j)) = (*compiled_)[j](x);
  return mix_ * raw;
}

HarmonicBasis HarmonicBasis::remixed(Eigen::MatrixXd mix, bool orthonormal) const {
  HarmonicBasis b = *this;
  if (mix.rows() != mix_.rows() || mix.cols() != mix_.cols()) throw std::invalid_argument("HarmonicBasis: remix size mismatch");
  b.mix_ = std::move(mix);
  b.orthonormal_ = orthonormal;
  return b;
}

Eigen::MatrixXd basis_values(const HarmonicBasis& basis, const SphereRule& rule) {
  if (rule.dimension != basis.dimension()) throw std::invalid_argument("basis_values: dimension mismatch");
  Eigen::MatrixXd v(static_cast<Eigen::Index>(rule.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto pt = rule.point(i);
    SpherePoint p{std::vector<double>(pt.begin(), pt.end()), std::nullopt};
    v.row(static_cast<Eigen::Index>(i)) = basis.evaluate(p).transpose();
  }
  return v;
}

Eigen::MatrixXd gram_matrix(const HarmonicBasis& basis, const SphereRule& rule) {
  const Eigen::MatrixXd v = basis_values(basis, rule);
  const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(), static_cast<Eigen::Index>(rule.weights.size()));
  return v.transpose() * w.asDiagonal() * v / surface_area(basis.dimension());
}

namespace {

class MaxwellCache {
 public:
  explicit MaxwellCache(int d) : d_(d), norm_sq_(MultiPoly::norm_sq(d)) {}

  const MultiPoly& get(const MultiIndex& alpha) {
    auto it = memo_.find(alpha);
    if (it != memo_.end()) return it->second;
    if (alpha.degree() == 0) return memo_.emplace(alpha, MultiPoly::constant(d_, 1)).first->second;
    int axis = d_ - 1;
    while (alpha[axis] == 0) --axis;
    const MultiPoly& parent = get(alpha.shifted(axis, -1));
    const int n = alpha.degree() - 1;
    MultiPoly p = parent.times_monomial(MultiIndex::unit(d_, axis), 1);
    p -= frac(1, 2 * n + d_ - 2) * (norm_sq_ * partial(parent, axis));
    return memo_.emplace(alpha, std::move(p)).first->second;
  }

 private:
  int d_;
  MultiPoly norm_sq_;
  std::map<MultiIndex, MultiPoly, GradedLexLess> memo_;
};

void require_maxwell_dimension(int d) {
  if (d < 3) throw std::domain_error("maxwell basis requires d >= 3");
}

}  // namespace

MultiPoly maxwell_polynomial(const MultiIndex& alpha) {
  require_maxwell_dimension(alpha.dimension());
  MaxwellCache cache(alpha.dimension());
  return cache.get(alpha);
}

HarmonicBasis maxwell_basis(int n, int d) {
  require_maxwell_dimension(d);
  if (n < 0) throw std::domain_error("maxwell_basis: degree must be >= 0");
  MaxwellCache cache(d);
  auto tags = harmonic_indices(n, d);
  std::vector<MultiPoly> polys;
  polys.reserve(tags.size());
  for (const auto& a : tags) polys.push_back(cache.get(a));
  const auto size = static_cast<Eigen::Index>(tags.size());
  return HarmonicBasis(n, d, std::move(tags), std::move(polys), Eigen::MatrixXd::Identity(size, size), false);
}

HarmonicBasis gram_schmidt(const HarmonicBasis& basis, const SphereRule& rule) {
  if (rule.exact_degree < 2 * basis.degree()) {
    throw std::invalid_argument("gram_schmidt: rule exact degree " + std::to_string(rule.exact_degree) +
                                " is below 2n = " + std::to_string(2 * basis.degree()));
  }
  const Eigen::MatrixXd g = gram_matrix(basis, rule);
  const Eigen::Index n = g.rows();
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(n, k);
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < k; ++j) v -= u.col(j).dot(g * v) * u.col(j);
    }
    const double pivot = std::sqrt(std::max(0.0, v.dot(g * v)));
    if (pivot < 1e-8) {
      std::ostringstream msg;
      msg << "gram_schmidt: element " << k << " is numerically dependent on its predecessors (pivot " << pivot << ")";
      throw std::runtime_error(msg.str());
    }
    u.col(k) = v / pivot;
  }
  return basis.remixed(u.transpose() * basis.mix(), true);
}

namespace {

struct SphCoordFactor {
  int order;       // alpha_j
  int sin_power;   // |alpha^{j+1}| = alpha_{j+1} + ... + alpha_d
  Rational lambda; // sin_power + (d - j - 1)/2
  int angle;       // 0-based index of t_{d-j}
  int axis;        // 0-based index of x_{d-j+1}
};

std::vector<SphCoordFactor> sph_coord_factors(const MultiIndex& alpha) {
  const int d = alpha.dimension();
  std::vector<SphCoordFactor> out;
  for (int j = 1; j <= d - 2; ++j) {
    int tail = 0;
    for (int i = j; i < d; ++i) tail += alpha[i];
    out.push_back({alpha[j - 1], tail, frac(2 * tail + d - j - 1, 2), d - j - 1, d - j});
  }
  return out;
}

void require_sph_coord_index(const MultiIndex& alpha) {
  const int d = alpha.dimension();
  if (d < 3) throw std::domain_error("spherical-coordinate basis requires d >= 3");
  if (alpha[d - 1] > 1) throw std::domain_error("spherical-coordinate basis index needs alpha_d in {0, 1}");
}

// Re or Im of (x_b + i x_a)^m as a polynomial in d variables.
MultiPoly complex_power_part(int d, int axis_re, int axis_im, int m, bool imaginary) {
  MultiPoly out(d);
  for (int k = 0; k <= m; ++k) {
    if ((k % 2 == 1) != imaginary) continue;
    const int quarter = imaginary ? (k - 1) / 2 : k / 2;
    Rational c(binomial(m, k));
    if (quarter % 2 == 1) c = -c;
    std::vector<int> e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(axis_re)] = m - k;
    e[static_cast<std::size_t>(axis_im)] = k;
    out.add_term(MultiIndex(std::move(e)), c);
  }
  return out;
}

}  // namespace

MultiPoly homogenize_profile(const Poly1& c, int d, int axis, int degree) {
  if (axis < 0 || axis >= d) throw std::out_of_range("homogenize_profile: axis out of range");
  MultiPoly rho_sq(d);
  for (int i = 0; i <= axis; ++i) rho_sq.add_term(MultiIndex::unit(d, i).shifted(i, 1), 1);
  std::vector<MultiPoly> rho_pow{MultiPoly::constant(d, 1)};
  MultiPoly out(d);
  for (int i = 0; i <= c.degree(); ++i) {
    const Rational& ci = c.coeffs()[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    if ((degree - i) % 2 != 0 || i > degree) throw std::domain_error("homogenize_profile: profile parity does not match degree");
    const int k = (degree - i) / 2;
    while (static_cast<int>(rho_pow.size()) <= k) rho_pow.push_back(rho_pow.back() * rho_sq);
    out += rho_pow[static_cast<std::size_t>(k)].times_monomial(MultiIndex::unit(d, axis).shifted(axis, i - 1), ci);
  }
  return out;
}

SphCoordNormalization sph_coord_normalization(const MultiIndex& alpha) {
  require_sph_coord_index(alpha);
  const int d = alpha.dimension();
  const bool doubled = alpha[d - 2] + alpha[d - 1] > 0;
  Rational inv = doubled ? 2 : 1;
  double check = doubled ? 2.0 : 1.0;
  int j = 1;
  for (const auto& f : sph_coord_factors(alpha)) {
    const Rational& lam = f.lambda;
    inv *= Rational(factorial(f.order)) * pochhammer(frac(d - j + 1, 2), f.sin_power) * (f.order + lam);
    inv /= pochhammer(2 * lam, f.order) * pochhammer(frac(d - j, 2), f.sin_power) * lam;

    // independent route: ratio of 1-D integrals of the squared factor and of the bare measure
    const Rule1D rule = gauss_jacobi(f.order + 1, lam - frac(1, 2));
    double factor_sq = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double c = gegenbauer_value(f.order, lam.get_d(), rule.nodes[i]);
      factor_sq += rule.weights[i] * c * c;
    }
    check *= jacobi_zeroth_moment(frac(d - j - 2, 2)) / factor_sq;
    ++j;
  }
  return {inv, check};
}

double sph_coord_raw(const MultiIndex& alpha, std::span<const double> angles) {
  require_sph_coord_index(alpha);
  const int d = alpha.dimension();
  if (static_cast<int>(angles.size()) != d - 1) throw std::invalid_argument("sph_coord_raw: expected d-1 angles");
  const int m = alpha[d - 2] + alpha[d - 1];
  double value = alpha[d - 1] == 1 ? std::sin(m * angles[0]) : std::cos(m * angles[0]);
  for (const auto& f : sph_coord_factors(alpha)) {
    const double t = angles[static_cast<std::size_t>(f.angle)];
    value *= std::pow(std::sin(t), f.sin_power) * gegenbauer_value(f.order, f.lambda.get_d(), std::cos(t));
  }
  return value;
}

MultiPoly sph_coord_polynomial(const MultiIndex& alpha) {
  require_sph_coord_index(alpha);
  const int d = alpha.dimension();
  const int m = alpha[d - 2] + alpha[d - 1];
  MultiPoly p = complex_power_part(d, 1, 0, m, alpha[d - 1] == 1);
  for (const auto& f : sph_coord_factors(alpha)) {
    p = p * homogenize_profile(gegenbauer(f.order, GegenbauerParam(f.lambda)), d, f.axis, f.order);
  }
  return p;
}

HarmonicBasis sph_coord_basis(int n, int d, bool with_polynomials) {
  if (d < 3) throw std::domain_error("sph_coord_basis: requires d >= 3");
  if (n < 0) throw std::domain_error("sph_coord_basis: degree must be >= 0");
  auto tags = harmonic_indices(n, d);
  const auto size = static_cast<Eigen::Index>(tags.size());
  Eigen::MatrixXd mix = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index k = 0; k < size; ++k) {
    const auto norm = sph_coord_normalization(tags[static_cast<std::size_t>(k)]);
    const double inv = norm.inverse_h_squared.get_d();
    if (std::abs(inv - norm.quadrature_check) > 1e-8 * inv) {
      std::ostringstream msg;
      msg << "sph_coord_basis: normalisation mismatch for element " << k << " (product formula " << inv
          << ", quadrature " << norm.quadrature_check << ")";
      throw std::logic_error(msg.str());
    }
    mix(k, k) = std::sqrt(inv);
  }
  std::vector<MultiPoly> polys;
  if (with_polynomials) {
    for (const auto& a : tags) polys.push_back(sph_coord_polynomial(a));
  }
  auto closed = [tags](const SpherePoint& x) {
    const SpherePoint p = with_angles(x);
    Eigen::VectorXd raw(static_cast<Eigen::Index>(tags.size()));
    for (std::size_t k = 0; k < tags.size(); ++k) raw(static_cast<Eigen::Index>(k)) = sph_coord_raw(tags[k], *p.angles);
    return raw;
  };
  return HarmonicBasis(n, d, std::move(tags), std::move(polys), std::move(mix), true, closed);
}

HarmonicBasis basis_d2(int n) {
  if (n < 0) throw std::domain_error("basis_d2: degree must be >= 0");
  if (n == 0) {
    return HarmonicBasis(0, 2, {MultiIndex::zero(2)}, {MultiPoly::constant(2, 1)}, Eigen::MatrixXd::Identity(1, 1), true);
  }
  std::vector<MultiIndex> tags{MultiIndex({n, 0}), MultiIndex({n - 1, 1})};
  std::vector<MultiPoly> polys{complex_power_part(2, 0, 1, n, false), complex_power_part(2, 0, 1, n, true)};
  const Eigen::MatrixXd mix = std::sqrt(2.0) * Eigen::MatrixXd::Identity(2, 2);
  return HarmonicBasis(n, 2, std::move(tags), std::move(polys), mix, true);
}

std::pair<MultiPoly, MultiPoly> basis_d2_chebyshev(int n) {
  if (n < 1) throw std::domain_error("basis_d2_chebyshev: requires n >= 1");
  // the profiles are in x_1 / r, so homogenize along the last axis and swap
  const auto swapped = [](const MultiPoly& p) {
    MultiPoly out(2);
    for (const auto& [alpha, c] : p.terms()) out.add_term(MultiIndex({alpha[1], alpha[0]}), c);
    return out;
  };
  MultiPoly cos_part = swapped(homogenize_profile(chebyshev_t(n), 2, 1, n));
  MultiPoly sin_part = swapped(homogenize_profile(chebyshev_u(n - 1), 2, 1, n - 1)).times_monomial(MultiIndex({0, 1}), 1);
  return {std::move(cos_part), std::move(sin_part)};
}

namespace {

double d3_scale(int n, int k) {
  // (2n+1)(n-k)!/(n+k)!, doubled for the realified k > 0 pairs
  Rational s = Rational(2 * n + 1) * Rational(factorial(n - k)) / Rational(factorial(n + k));
  if (k > 0) s *= 2;
  return std::sqrt(s.get_d());
}

}  // namespace

HarmonicBasis basis_d3(int n, LegendreSign convention) {
  if (n < 0) throw std::domain_error("basis_d3: degree must be >= 0");
  std::vector<MultiIndex> tags = harmonic_indices(n, 3);
  const auto size = static_cast<Eigen::Index>(tags.size());
  Eigen::MatrixXd mix = Eigen::MatrixXd::Zero(size, size);
  std::vector<MultiPoly> polys;
  for (Eigen::Index idx = 0; idx < size; ++idx) {
    const auto& a = tags[static_cast<std::size_t>(idx)];
    const int k = a[1] + a[2];
    const bool sine = a[2] == 1;
    mix(idx, idx) = d3_scale(n, k);
    BigInt odd_factorial = 1;
    for (int j = 2 * k - 1; j > 1; j -= 2) odd_factorial *= j;
    Rational c(odd_factorial);
    if (((convention == LegendreSign::degree_parity) ? n : k) % 2 == 1) c = -c;
    const MultiPoly radial = homogenize_profile(gegenbauer(n - k, GegenbauerParam(frac(2 * k + 1, 2))), 3, 2, n - k);
    polys.push_back(c * (complex_power_part(3, 1, 0, k, sine) * radial));
  }
  auto closed = [tags, n, convention](const SpherePoint& x) {
    const SpherePoint p = with_angles(x);
    const double phi = (*p.angles)[0];
    const double theta = (*p.angles)[1];
    Eigen::VectorXd raw(static_cast<Eigen::Index>(tags.size()));
    for (std::size_t i = 0; i < tags.size(); ++i) {
      const int k = tags[i][1] + tags[i][2];
      const double trig = tags[i][2] == 1 ? std::sin(k * phi) : std::cos(k * phi);
      raw(static_cast<Eigen::Index>(i)) = assoc_legendre(n, k, std::cos(theta), convention) * trig;
    }
    return raw;
  };
  return HarmonicBasis(n, 3, std::move(tags), std::move(polys), std::move(mix), true, closed);
}

std::vector<std::complex<double>> basis_d3_complex(int n, double theta, double phi, LegendreSign convention) {
  if (n < 0) throw std::domain_error("basis_d3_complex: degree must be >= 0");
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<std::size_t>(2 * n + 1));
  const double t = std::cos(theta);
  for (int k = -n; k <= n; ++k) {
    const int ak = std::abs(k);
    const Rational s = Rational(2 * n + 1) * Rational(factorial(n - ak)) / Rational(factorial(n + ak));
    const double amp = std::sqrt(s.get_d()) * assoc_legendre(n, ak, t, convention);
    out.push_back(std::polar(1.0, k * phi) * amp);
  }
  return out;
}

std::vector<std::pair<int, MultiPoly>> harmonic_decompose(const MultiPoly& p) {
  if (!p.is_homogeneous()) throw std::invalid_argument("harmonic_decompose: input must be homogeneous");
  std::vector<std::pair<int, MultiPoly>> out;
  MultiPoly rest = p;
  for (int j = 0; !rest.is_zero(); ++j) {
    MultiPoly harmonic = project_homogeneous(rest);
    MultiPoly remainder = rest - harmonic;
    if (!harmonic.is_zero()) out.emplace_back(j, std::move(harmonic));
    if (remainder.is_zero()) break;
    rest = divide_by_norm_sq(remainder);
  }
  return out;
}

MultiPoly axial_harmonic(int n, int d) {
  if (d < 3) throw std::domain_error("axial_harmonic: requires d >= 3");
  return homogenize_profile(gegenbauer(n, GegenbauerParam::for_sphere(d)), d, d - 1, n);
}

}  // namespace sphharm
