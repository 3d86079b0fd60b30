#include "sphharm/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace sphharm {

std::vector<double> random_unit_vector(Rng& rng, int d) {
  if (d < 1) throw std::domain_error("random_unit_vector: d must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    std::vector<double> x(static_cast<std::size_t>(d));
    double nrm = 0.0;
    for (auto& v : x) {
      v = normal(rng);
      nrm += v * v;
    }
    nrm = std::sqrt(nrm);
    if (nrm < 1e-8) continue;
    for (auto& v : x) v /= nrm;
    return x;
  }
}

MultiPoly random_polynomial(Rng& rng, int d, int max_degree, int terms, bool homogeneous) {
  if (d < 1 || max_degree < 0 || terms < 0) throw std::domain_error("random_polynomial: invalid arguments");
  std::uniform_int_distribution<int> degree_dist(homogeneous ? max_degree : 0, max_degree);
  std::uniform_int_distribution<int> coeff_dist(-5, 5);
  MultiPoly p(d);
  for (int t = 0; t < terms; ++t) {
    int remaining = degree_dist(rng);
    std::vector<int> e(static_cast<std::size_t>(d), 0);
    std::uniform_int_distribution<int> axis_dist(0, d - 1);
    while (remaining-- > 0) ++e[static_cast<std::size_t>(axis_dist(rng))];
    p.add_term(MultiIndex(std::move(e)), coeff_dist(rng));
  }
  return p;
}

std::vector<Rational> random_rational_point(Rng& rng, int d) {
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> x;
  for (int i = 0; i < d; ++i) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    x.push_back(v);
  }
  return x;
}

}  // namespace sphharm
