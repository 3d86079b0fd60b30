#ifndef SPHHARM_JSON_IO_HPP
#define SPHHARM_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sphharm/exactpoly.hpp"
#include "sphharm/quadrature.hpp"
#include "sphharm/sphereops.hpp"

namespace sphharm {

using Json = nlohmann::ordered_json;

/// Malformed input; what() names the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"d": int, "terms": [{"alpha": [ints], "num": "...", "den": "..."}]},
/// terms in graded-lex order, integers as decimal strings.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

/// {"d", "exact_degree", "points": [[...]], "weights": [...]}
Json rule_to_json(const SphereRule& rule);

/// One {"check", "status", "max_residual", "witness"} object per report,
/// in the given order.
Json reports_to_json(const std::vector<CheckReport>& reports);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

/// RFC 4180 table: header row, CRLF line ends, fields quoted when needed.
std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

}  // namespace sphharm

#endif  // SPHHARM_JSON_IO_HPP
