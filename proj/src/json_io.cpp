#include "sphharm/json_io.hpp"

namespace sphharm {

Json poly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : p.terms()) {
    Json t;
    t["alpha"] = std::vector<int>(alpha.exponents().begin(), alpha.exponents().end());
    t["num"] = c.get_num().get_str();
    t["den"] = c.get_den().get_str();
    terms.push_back(std::move(t));
  }
  Json out;
  out["d"] = p.dimension();
  out["terms"] = std::move(terms);
  return out;
}

namespace {

BigInt parse_integer(const Json& j, const std::string& field) {
  if (!j.is_string()) throw InputError("field '" + field + "' must be a decimal string");
  const std::string s = j.get<std::string>();
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw InputError("field '" + field + "' is not a decimal integer: " + s);
  return v;
}

}  // namespace

MultiPoly poly_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("polynomial must be a JSON object");
  if (!j.contains("d") || !j["d"].is_number_integer()) throw InputError("field 'd' must be an integer");
  const int d = j["d"].get<int>();
  if (d < 1) throw InputError("field 'd' must be >= 1");
  if (!j.contains("terms") || !j["terms"].is_array()) throw InputError("field 'terms' must be an array");
  MultiPoly p(d);
  std::size_t index = 0;
  for (const auto& t : j["terms"]) {
    const std::string where = "terms[" + std::to_string(index++) + "]";
    if (!t.is_object()) throw InputError("field '" + where + "' must be an object");
    if (!t.contains("alpha") || !t["alpha"].is_array()) throw InputError("field '" + where + ".alpha' must be an array");
    const auto& a = t["alpha"];
    if (static_cast<int>(a.size()) != d) throw InputError("field '" + where + ".alpha' must have length d");
    std::vector<int> e;
    for (const auto& v : a) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw InputError("field '" + where + ".alpha' must hold non-negative integers");
      }
      e.push_back(v.get<int>());
    }
    if (!t.contains("num")) throw InputError("field '" + where + ".num' is missing");
    const BigInt num = parse_integer(t["num"], where + ".num");
    BigInt den = 1;
    if (t.contains("den")) den = parse_integer(t["den"], where + ".den");
    if (den == 0) throw InputError("field '" + where + ".den' must be non-zero");
    Rational c(num, den);
    c.canonicalize();
    p.add_term(MultiIndex(std::move(e)), c);
  }
  return p;
}

Json rule_to_json(const SphereRule& rule) {
  Json points = Json::array();
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto pt = rule.point(i);
    points.push_back(std::vector<double>(pt.begin(), pt.end()));
  }
  Json out;
  out["d"] = rule.dimension;
  out["exact_degree"] = rule.exact_degree;
  out["points"] = std::move(points);
  out["weights"] = rule.weights;
  return out;
}

Json reports_to_json(const std::vector<CheckReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) {
    Json j;
    j["check"] = r.name;
    j["status"] = r.passed ? "pass" : "fail";
    j["max_residual"] = r.max_residual;
    j["witness"] = r.witness;
    out.push_back(std::move(j));
  }
  return out;
}

std::string format_double(double x) { return Json(x).dump(); }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void append_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(row[i]);
  }
  out += "\r\n";
}

}  // namespace

std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  append_row(out, header);
  for (const auto& r : rows) append_row(out, r);
  return out;
}

}  // namespace sphharm
