#ifndef SPHHARM_SAMPLING_HPP
#define SPHHARM_SAMPLING_HPP

#include <random>
#include <vector>

#include "sphharm/exactpoly.hpp"

namespace sphharm {

using Rng = std::mt19937_64;

/// Uniform point on S^{d-1} from a normalised Gaussian draw.
std::vector<double> random_unit_vector(Rng& rng, int d);

/// Sparse polynomial with up to `terms` monomials of degree <= max_degree
/// (exactly max_degree when homogeneous) and small integer coefficients.
MultiPoly random_polynomial(Rng& rng, int d, int max_degree, int terms, bool homogeneous = false);

/// Point with small rational coordinates in [-2, 2].
std::vector<Rational> random_rational_point(Rng& rng, int d);

}  // namespace sphharm

#endif  // SPHHARM_SAMPLING_HPP
