#ifndef SPHHARM_CHECK_SUITE_HPP
#define SPHHARM_CHECK_SUITE_HPP

#include <cstdint>
#include <vector>

#include "sphharm/sphereops.hpp"

namespace sphharm {

struct CheckConfig {
  int d = 3;
  int nmax = 4;
  std::uint64_t seed = 0;
};

/// Runs every identity check applicable to (d, nmax); reports are sorted
/// by check name. Each check draws from its own generator derived from
/// the seed, so the output depends only on the configuration.
std::vector<CheckReport> run_check_suite(const CheckConfig& config);

}  // namespace sphharm

#endif  // SPHHARM_CHECK_SUITE_HPP
