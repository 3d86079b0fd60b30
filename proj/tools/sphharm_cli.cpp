#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sphharm/basis.hpp"
#include "sphharm/check_suite.hpp"
#include "sphharm/json_io.hpp"
#include "sphharm/kernels.hpp"
#include "sphharm/sampling.hpp"
#include "sphharm/zonalsys.hpp"

using namespace sphharm;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "json";
  std::string path;

  void emit(const Json& j) const { write(j.dump(2) + "\n"); }
  void emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) const {
    write(to_csv(header, rows));
  }
  bool csv() const { return format == "csv"; }

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + path);
    out << text;
  }
};

void add_output_flags(CLI::App* cmd, Output& out, const std::vector<std::string>& formats = {"json", "csv"}) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  cmd->add_option("-o,--output", out.path, "Write to a file instead of standard output");
}

Json read_json_file(const std::string& path, const std::string& field) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("field '" + field + "': cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("field '" + field + "': invalid JSON (" + e.what() + ")");
  }
}

std::vector<double> parse_list(const std::string& text, const std::string& field) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--" + field + ": not a number: '" + item + "'");
    }
  }
  return out;
}

std::string fmt(double x) { return format_double(x); }

std::string tag_string(const MultiIndex& a) {
  std::string s;
  for (int i = 0; i < a.dimension(); ++i) s += (i ? " " : "") + std::to_string(a[i]);
  return s;
}

// ---- dim -------------------------------------------------------------------

struct DimArgs {
  int d = 3;
  int n = 0;
  std::string space = "harmonic";
  Output out;
};

int run_dim(const DimArgs& a) {
  if (a.d < 2) throw UsageError("--d must be >= 2");
  if (a.n < 0) throw UsageError("--n must be >= 0");
  std::uint64_t value = 0;
  if (a.space == "harmonic") value = dim_harmonic(a.n, a.d);
  if (a.space == "homogeneous") value = dim_homogeneous(a.n, a.d);
  if (a.space == "sphere") value = dim_pi_sphere(a.n, a.d);
  if (a.out.csv()) {
    a.out.emit_csv({"d", "n", "space", "dim"}, {{std::to_string(a.d), std::to_string(a.n), a.space, std::to_string(value)}});
  } else {
    a.out.emit(Json(value));
  }
  return 0;
}

// ---- basis / eval ----------------------------------------------------------

struct BasisArgs {
  int d = 3;
  int n = 0;
  std::string kind = "sphcoord";
  std::string convention = "degree-parity";
  std::string point;
  std::string angles;
  Output out;
};

LegendreSign parse_convention(const std::string& s) {
  return s == "condon-shortley" ? LegendreSign::condon_shortley : LegendreSign::degree_parity;
}

HarmonicBasis make_basis(const BasisArgs& a, bool with_polynomials) {
  if (a.n < 0) throw UsageError("--n must be >= 0");
  if (a.kind == "maxwell") {
    if (a.d < 3) throw UsageError("--kind maxwell needs --d >= 3");
    return maxwell_basis(a.n, a.d);
  }
  if (a.kind == "sphcoord") {
    if (a.d < 3) throw UsageError("--kind sphcoord needs --d >= 3");
    return sph_coord_basis(a.n, a.d, with_polynomials);
  }
  if (a.kind == "d2") {
    if (a.d != 2) throw UsageError("--kind d2 needs --d 2");
    return basis_d2(a.n);
  }
  if (a.d != 3) throw UsageError("--kind d3 needs --d 3");
  return basis_d3(a.n, parse_convention(a.convention));
}

int run_basis(const BasisArgs& a) {
  const HarmonicBasis basis = make_basis(a, true);
  if (a.out.format == "json") {
    Json elements = Json::array();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Json e;
      e["tag"] = std::vector<int>(basis.tags()[k].exponents().begin(), basis.tags()[k].exponents().end());
      e["scale"] = basis.mix()(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
      e["poly"] = poly_to_json(basis.polys()[k]);
      elements.push_back(std::move(e));
    }
    Json j;
    j["d"] = a.d;
    j["n"] = a.n;
    j["kind"] = a.kind;
    j["orthonormal"] = basis.orthonormal();
    j["elements"] = std::move(elements);
    a.out.emit(j);
    return 0;
  }
  if (a.out.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const std::string scale = fmt(basis.mix()(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)));
      for (const auto& [alpha, c] : basis.polys()[k].terms()) {
        rows.push_back({std::to_string(k), tag_string(basis.tags()[k]), scale, tag_string(alpha), c.get_num().get_str(),
                        c.get_den().get_str()});
      }
    }
    a.out.emit_csv({"element", "tag", "scale", "alpha", "num", "den"}, rows);
    return 0;
  }
  std::string text;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    text += "[" + tag_string(basis.tags()[k]) + "] scale " +
            fmt(basis.mix()(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k))) + ": " +
            to_string(basis.polys()[k]) + "\n";
  }
  a.out.write(text);
  return 0;
}

int run_eval(const BasisArgs& a) {
  const HarmonicBasis basis = make_basis(a, false);
  SpherePoint x;
  if (!a.angles.empty()) {
    const auto angles = parse_list(a.angles, "angles");
    if (static_cast<int>(angles.size()) != a.d - 1) throw UsageError("--angles needs d-1 values");
    x = angles_to_cartesian(angles, a.d);
  } else {
    auto coords = parse_list(a.point, "point");
    if (static_cast<int>(coords.size()) != a.d) throw UsageError("--point needs d values");
    try {
      x = make_sphere_point(coords);
    } catch (const std::domain_error& e) {
      throw UsageError(std::string("--point: ") + e.what());
    }
  }
  const Eigen::VectorXd v = basis.evaluate(x);
  if (a.out.csv()) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      rows.push_back({std::to_string(k), tag_string(basis.tags()[k]), fmt(v(static_cast<Eigen::Index>(k)))});
    }
    a.out.emit_csv({"element", "tag", "value"}, rows);
    return 0;
  }
  Json j;
  j["d"] = a.d;
  j["n"] = a.n;
  j["kind"] = a.kind;
  j["point"] = x.cartesian;
  j["values"] = std::vector<double>(v.data(), v.data() + v.size());
  a.out.emit(j);
  return 0;
}

// ---- zonal -----------------------------------------------------------------

struct ZonalArgs {
  int d = 3;
  int n = 0;
  double t = 1.0;
  Output out;
};

int run_zonal(const ZonalArgs& a) {
  if (a.d < 2) throw UsageError("--d must be >= 2");
  if (a.n < 0) throw UsageError("--n must be >= 0");
  if (!(std::abs(a.t) <= 1.0 + 1e-12)) throw UsageError("--t must lie in [-1, 1]");
  const double value = zonal_eval(a.n, a.d, a.t);
  if (a.out.csv()) {
    a.out.emit_csv({"d", "n", "t", "value"}, {{std::to_string(a.d), std::to_string(a.n), fmt(a.t), fmt(value)}});
    return 0;
  }
  Json j;
  j["d"] = a.d;
  j["n"] = a.n;
  j["t"] = a.t;
  j["value"] = value;
  a.out.emit(j);
  return 0;
}

// ---- quad ------------------------------------------------------------------

struct QuadArgs {
  int d = 3;
  int degree = 0;
  Output out;
};

int run_quad(const QuadArgs& a) {
  if (a.d < 2) throw UsageError("--d must be >= 2");
  if (a.degree < 0) throw UsageError("--degree must be >= 0");
  const SphereRule rule = sphere_product_rule(a.d, a.degree);
  if (a.out.csv()) {
    std::vector<std::string> header;
    for (int i = 1; i <= a.d; ++i) header.push_back("x" + std::to_string(i));
    header.push_back("weight");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      std::vector<std::string> row;
      for (double v : rule.point(i)) row.push_back(fmt(v));
      row.push_back(fmt(rule.weights[i]));
      rows.push_back(std::move(row));
    }
    a.out.emit_csv(header, rows);
    return 0;
  }
  a.out.emit(rule_to_json(rule));
  return 0;
}

// ---- project ---------------------------------------------------------------

struct ProjectArgs {
  std::string input = "-";
  std::optional<int> n;
  Output out;
};

int run_project(const ProjectArgs& a) {
  const MultiPoly p = poly_from_json(read_json_file(a.input, "input"));
  MultiPoly result(p.dimension());
  if (a.n) {
    if (*a.n < 0) throw UsageError("--n must be >= 0");
    result = project_sphere(p, *a.n);
  } else {
    if (!p.is_homogeneous()) throw UsageError("input polynomial is not homogeneous; pass --n to project its restriction");
    result = project_homogeneous(p);
  }
  if (a.out.csv()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [alpha, c] : result.terms()) rows.push_back({tag_string(alpha), c.get_num().get_str(), c.get_den().get_str()});
    a.out.emit_csv({"alpha", "num", "den"}, rows);
    return 0;
  }
  a.out.emit(poly_to_json(result));
  return 0;
}

// ---- funk-hecke ------------------------------------------------------------

struct FunkHeckeArgs {
  int d = 3;
  int n = 0;
  std::string coeffs;
  std::string named;
  int nodes = 0;
  Output out;
};

int run_funk_hecke(const FunkHeckeArgs& a) {
  if (a.d < 2) throw UsageError("--d must be >= 2");
  if (a.n < 0) throw UsageError("--n must be >= 0");
  if (a.coeffs.empty() == a.named.empty()) throw UsageError("give exactly one of --coeffs or --named");
  Profile f;
  int degree = 0;
  bool polynomial = true;
  std::string label;
  if (!a.coeffs.empty()) {
    const auto c = parse_list(a.coeffs, "coeffs");
    degree = static_cast<int>(c.size()) - 1;
    f = [c](double t) {
      double acc = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
      return acc;
    };
    label = "coeffs";
  } else {
    label = a.named;
    const auto colon = a.named.find(':');
    const std::string head = a.named.substr(0, colon);
    int k = 0;
    if (colon != std::string::npos) {
      try {
        k = std::stoi(a.named.substr(colon + 1));
      } catch (const std::exception&) {
        throw UsageError("--named: bad degree in '" + a.named + "'");
      }
      if (k < 0) throw UsageError("--named: degree must be >= 0");
    }
    if (head == "monomial") {
      f = [k](double t) { return std::pow(t, k); };
      degree = k;
    } else if (head == "legendre") {
      f = [k](double t) { return legendre_value(k, t); };
      degree = k;
    } else if (head == "chebyshev") {
      f = [k](double t) { return chebyshev_t_value(k, t); };
      degree = k;
    } else if (head == "exp") {
      f = [](double t) { return std::exp(t); };
      polynomial = false;
    } else {
      throw UsageError("--named must be monomial:k, legendre:k, chebyshev:k or exp");
    }
  }
  int m = a.nodes;
  if (m <= 0) {
    if (!polynomial) throw UsageError("--nodes is required for non-polynomial profiles");
    m = funk_hecke_default_nodes(degree, a.n);
  }
  const double value = funk_hecke(f, a.n, a.d, m);
  if (a.out.csv()) {
    a.out.emit_csv({"d", "n", "profile", "nodes", "lambda"},
                   {{std::to_string(a.d), std::to_string(a.n), label, std::to_string(m), fmt(value)}});
    return 0;
  }
  Json j;
  j["d"] = a.d;
  j["n"] = a.n;
  j["profile"] = label;
  j["nodes"] = m;
  j["lambda"] = value;
  a.out.emit(j);
  return 0;
}

// ---- fundsys / interp ------------------------------------------------------

struct SystemArgs {
  int d = 3;
  int n = 0;
  std::uint64_t seed = 0;
  int candidates = 32;
  std::string values;
  int samples = 10;
  Output out;
};

ZonalSystem make_system(const SystemArgs& a) {
  if (a.d < 2) throw UsageError("--d must be >= 2");
  if (a.n < 0) throw UsageError("--n must be >= 0");
  if (a.candidates < 1) throw UsageError("--candidates must be >= 1");
  return greedy_fundamental_system(a.n, a.d, a.seed, a.candidates);
}

Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = m(i, j);
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_fundsys(const SystemArgs& a) {
  const ZonalSystem sys = make_system(a);
  if (a.out.csv()) {
    std::vector<std::string> header{"index"};
    for (int i = 1; i <= a.d; ++i) header.push_back("x" + std::to_string(i));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < sys.points.size(); ++i) {
      std::vector<std::string> row{std::to_string(i)};
      for (double v : sys.points[i].cartesian) row.push_back(fmt(v));
      rows.push_back(std::move(row));
    }
    a.out.emit_csv(header, rows);
    return 0;
  }
  Json points = Json::array();
  for (const auto& p : sys.points) points.push_back(p.cartesian);
  Json j;
  j["d"] = a.d;
  j["n"] = a.n;
  j["seed"] = a.seed;
  j["points"] = std::move(points);
  j["gram"] = matrix_json(sys.gram);
  j["det_gram"] = sys.det_gram;
  j["det_basis_matrix"] = sys.det_basis_matrix;
  j["min_eigenvalue"] = sys.min_eigenvalue;
  j["condition_number"] = sys.condition_number;
  a.out.emit(j);
  return 0;
}

int run_interp(const SystemArgs& a) {
  const Json input = read_json_file(a.values, "values");
  const Json& arr = input.is_object() && input.contains("values") ? input["values"] : input;
  if (!arr.is_array()) throw InputError("field 'values' must be an array of numbers");
  const ZonalSystem sys = make_system(a);
  if (arr.size() != sys.points.size()) {
    throw InputError("field 'values' must hold " + std::to_string(sys.points.size()) + " numbers (dim H_n^d)");
  }
  Eigen::VectorXd values(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) throw InputError("field 'values[" + std::to_string(i) + "]' must be a number");
    values(static_cast<Eigen::Index>(i)) = arr[i].get<double>();
  }
  const SphereFunction f = interpolate(sys, values);
  Rng rng(a.seed + 1);
  std::vector<std::vector<double>> xs;
  std::vector<double> ys;
  for (int k = 0; k < a.samples; ++k) {
    xs.push_back(random_unit_vector(rng, a.d));
    ys.push_back(f(xs.back()));
  }
  if (a.out.csv()) {
    std::vector<std::string> header;
    for (int i = 1; i <= a.d; ++i) header.push_back("x" + std::to_string(i));
    header.push_back("value");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      std::vector<std::string> row;
      for (double v : xs[k]) row.push_back(fmt(v));
      row.push_back(fmt(ys[k]));
      rows.push_back(std::move(row));
    }
    a.out.emit_csv(header, rows);
    return 0;
  }
  Json nodes = Json::array();
  for (const auto& p : sys.points) nodes.push_back(p.cartesian);
  Json samples = Json::array();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Json s;
    s["x"] = xs[k];
    s["value"] = ys[k];
    samples.push_back(std::move(s));
  }
  Json j;
  j["d"] = a.d;
  j["n"] = a.n;
  j["seed"] = a.seed;
  j["nodes"] = std::move(nodes);
  j["samples"] = std::move(samples);
  a.out.emit(j);
  return 0;
}

// ---- check -----------------------------------------------------------------

struct CheckArgs {
  CheckConfig config;
  Output out;
};

int run_check(const CheckArgs& a) {
  if (a.config.d < 2) throw UsageError("--d must be >= 2");
  if (a.config.nmax < 0) throw UsageError("--nmax must be >= 0");
  const auto reports = run_check_suite(a.config);
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed;
  if (a.out.csv()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : reports) rows.push_back({r.name, r.passed ? "pass" : "fail", fmt(r.max_residual), r.witness});
    a.out.emit_csv({"check", "status", "max_residual", "witness"}, rows);
  } else {
    Json j;
    j["d"] = a.config.d;
    j["nmax"] = a.config.nmax;
    j["seed"] = a.config.seed;
    j["status"] = passed ? "pass" : "fail";
    j["checks"] = reports_to_json(reports);
    a.out.emit(j);
  }
  return passed ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical harmonics toolkit"};
  app.require_subcommand(1);

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "Dimension of H_n^d (or P_n^d, or P_n on the sphere)");
  dim_cmd->add_option("--d", dim.d, "Ambient dimension")->required();
  dim_cmd->add_option("--n", dim.n, "Degree")->required();
  dim_cmd->add_option("--space", dim.space, "harmonic, homogeneous or sphere")
      ->check(CLI::IsMember({"harmonic", "homogeneous", "sphere"}))
      ->capture_default_str();
  add_output_flags(dim_cmd, dim.out);

  BasisArgs basis;
  auto* basis_cmd = app.add_subcommand("basis", "Exact polynomials of a basis of H_n^d");
  basis_cmd->add_option("--d", basis.d, "Ambient dimension")->required();
  basis_cmd->add_option("--n", basis.n, "Degree")->required();
  basis_cmd->add_option("--kind", basis.kind, "maxwell, sphcoord, d2 or d3")
      ->check(CLI::IsMember({"maxwell", "sphcoord", "d2", "d3"}))
      ->capture_default_str();
  basis_cmd->add_option("--convention", basis.convention, "Legendre sign for d3: degree-parity or condon-shortley")
      ->check(CLI::IsMember({"degree-parity", "condon-shortley"}))
      ->capture_default_str();
  add_output_flags(basis_cmd, basis.out, {"json", "csv", "coeffs"});

  BasisArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a basis at a point of the sphere");
  eval_cmd->add_option("--d", eval.d, "Ambient dimension")->required();
  eval_cmd->add_option("--n", eval.n, "Degree")->required();
  eval_cmd->add_option("--kind", eval.kind, "maxwell, sphcoord, d2 or d3")
      ->check(CLI::IsMember({"maxwell", "sphcoord", "d2", "d3"}))
      ->capture_default_str();
  eval_cmd->add_option("--convention", eval.convention, "Legendre sign for d3")
      ->check(CLI::IsMember({"degree-parity", "condon-shortley"}))
      ->capture_default_str();
  auto* point_opt = eval_cmd->add_option("--point", eval.point, "Comma-separated unit vector");
  auto* angles_opt = eval_cmd->add_option("--angles", eval.angles, "Comma-separated angles t_1..t_{d-1}");
  point_opt->excludes(angles_opt);
  add_output_flags(eval_cmd, eval.out);

  ZonalArgs zonal;
  auto* zonal_cmd = app.add_subcommand("zonal", "Zonal kernel Z_n at <x, y> = t");
  zonal_cmd->add_option("--d", zonal.d, "Ambient dimension")->required();
  zonal_cmd->add_option("--n", zonal.n, "Degree")->required();
  zonal_cmd->add_option("--t", zonal.t, "Inner product")->required();
  add_output_flags(zonal_cmd, zonal.out);

  QuadArgs quad;
  auto* quad_cmd = app.add_subcommand("quad", "Product quadrature rule on the sphere");
  quad_cmd->add_option("--d", quad.d, "Ambient dimension")->required();
  quad_cmd->add_option("--degree", quad.degree, "Polynomial degree integrated exactly")->required();
  add_output_flags(quad_cmd, quad.out);

  ProjectArgs project;
  auto* project_cmd = app.add_subcommand("project", "Projection of a polynomial onto H_n^d");
  project_cmd->add_option("--input", project.input, "Polynomial JSON file ('-' for standard input)")->capture_default_str();
  project_cmd->add_option("--n", project.n, "Project the restriction to the sphere onto degree n");
  add_output_flags(project_cmd, project.out);

  FunkHeckeArgs fh;
  auto* fh_cmd = app.add_subcommand("funk-hecke", "Funk-Hecke multiplier lambda_n(f)");
  fh_cmd->add_option("--d", fh.d, "Ambient dimension")->required();
  fh_cmd->add_option("--n", fh.n, "Degree")->required();
  fh_cmd->add_option("--coeffs", fh.coeffs, "Profile coefficients c0,c1,... of f(t)");
  fh_cmd->add_option("--named", fh.named, "monomial:k, legendre:k, chebyshev:k or exp");
  fh_cmd->add_option("--nodes", fh.nodes, "Gauss-Jacobi node count");
  add_output_flags(fh_cmd, fh.out);

  SystemArgs interp;
  auto* interp_cmd = app.add_subcommand("interp", "Zonal interpolation on a greedy fundamental system");
  interp_cmd->add_option("--d", interp.d, "Ambient dimension")->required();
  interp_cmd->add_option("--n", interp.n, "Degree")->required();
  interp_cmd->add_option("--seed", interp.seed, "Random seed")->capture_default_str();
  interp_cmd->add_option("--candidates", interp.candidates, "Candidates per greedy step")->capture_default_str();
  interp_cmd->add_option("--values", interp.values, "JSON array of node values")->required();
  interp_cmd->add_option("--samples", interp.samples, "Number of sample points")->capture_default_str();
  add_output_flags(interp_cmd, interp.out);

  SystemArgs fundsys;
  auto* fundsys_cmd = app.add_subcommand("fundsys", "Greedy fundamental system with Gram diagnostics");
  fundsys_cmd->add_option("--d", fundsys.d, "Ambient dimension")->required();
  fundsys_cmd->add_option("--n", fundsys.n, "Degree")->required();
  fundsys_cmd->add_option("--seed", fundsys.seed, "Random seed")->capture_default_str();
  fundsys_cmd->add_option("--candidates", fundsys.candidates, "Candidates per greedy step")->capture_default_str();
  add_output_flags(fundsys_cmd, fundsys.out);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run the identity verification suite");
  check_cmd->add_option("--d", check.config.d, "Ambient dimension")->capture_default_str();
  check_cmd->add_option("--nmax", check.config.nmax, "Largest degree")->capture_default_str();
  check_cmd->add_option("--seed", check.config.seed, "Random seed")->capture_default_str();
  add_output_flags(check_cmd, check.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*dim_cmd) return run_dim(dim);
    if (*basis_cmd) return run_basis(basis);
    if (*eval_cmd) {
      if (eval.point.empty() && eval.angles.empty()) throw UsageError("eval needs --point or --angles");
      return run_eval(eval);
    }
    if (*zonal_cmd) return run_zonal(zonal);
    if (*quad_cmd) return run_quad(quad);
    if (*project_cmd) return run_project(project);
    if (*fh_cmd) return run_funk_hecke(fh);
    if (*interp_cmd) return run_interp(interp);
    if (*fundsys_cmd) return run_fundsys(fundsys);
    if (*check_cmd) return run_check(check);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
