// gaugekit command-line tool. Every command prints one JSON report; exit codes
// are 0 (success), 1 (usage or input error), 2 (a check disagreed).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gaugekit/adhm.hpp"
#include "gaugekit/bundles.hpp"
#include "gaugekit/localization.hpp"
#include "gaugekit/moduli_series.hpp"
#include "gaugekit/nekrasov.hpp"
#include "gaugekit/twistor.hpp"
#include "gaugekit/verify.hpp"
#include "gaugekit_golden.hpp"

using namespace gaugekit;

namespace {

constexpr const char* kVersion = "0.1.0";

/// JSON config files: nested objects name subcommands, leaves are option values.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}\n"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw CLI::ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    std::vector<CLI::ConfigItem> items;
    flatten(j, {}, items);
    return items;
  }

 private:
  static std::string scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }
  static void flatten(const json& j, std::vector<std::string> parents, std::vector<CLI::ConfigItem>& out) {
    if (!j.is_object()) throw CLI::ConfigError("config root must be a JSON object");
    for (const auto& [key, v] : j.items()) {
      if (v.is_object()) {
        auto p = parents;
        p.push_back(key);
        flatten(v, p, out);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (v.is_array())
        for (const auto& e : v) item.inputs.push_back(scalar(e));
      else
        item.inputs.push_back(scalar(v));
      out.push_back(item);
    }
  }
};

struct Report {
  json inputs = json::object();
  json results = json::object();
  json checks = json::object();
  bool has_checks = false;
  bool pass = true;
};

std::vector<double> parse_doubles(const std::string& s, std::size_t expected, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      fail(errc::invalid_argument, what + ": '" + item + "' is not a number");
    }
  }
  if (expected && out.size() != expected)
    fail(errc::invalid_argument, what + " needs " + std::to_string(expected) + " comma-separated numbers, got '" + s + "'");
  return out;
}

Point4 parse_point(const std::string& s, const std::string& what) {
  const auto v = parse_doubles(s, 4, what);
  return {v[0], v[1], v[2], v[3]};
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) fail(errc::invalid_argument, what + " must be a list of rows");
  const Eigen::Index rows = Eigen::Index(j.size()), cols = rows ? Eigen::Index(j[0].size()) : 0;
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (Eigen::Index(j[std::size_t(i)].size()) != cols) fail(errc::invalid_argument, what + " has ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& e = j[std::size_t(i)][std::size_t(c)];
      m(i, c) = e.is_array() ? cplx(e.at(0).get<double>(), e.at(1).get<double>()) : cplx(e.get<double>(), 0);
    }
  }
  return m;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_argument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(errc::invalid_argument, path + " is not valid JSON: " + e.what());
  }
}

json adhm_to_json(const AdhmData& d) {
  return json{{"k", d.k},
              {"r", d.r},
              {"alpha1", matrix_to_json(d.alpha1)},
              {"alpha2", matrix_to_json(d.alpha2)},
              {"P", matrix_to_json(d.p_map)},
              {"Q", matrix_to_json(d.q_map)},
              {"epsilon", d.deformation}};
}

AdhmData adhm_from_json(const json& j) {
  return AdhmData(matrix_from_json(j.at("alpha1"), "alpha1"), matrix_from_json(j.at("alpha2"), "alpha2"), matrix_from_json(j.at("P"), "P"),
                  matrix_from_json(j.at("Q"), "Q"), j.value("epsilon", 0.0));
}

json residuals_json(const AdhmData& d) {
  const auto r = adhm_residuals(d);
  return json{{"complex", r.complex_residual}, {"real", r.real_residual}};
}

/// t'Hooft data from --centers (JSON file of [x1,x2,x3,x4] points) or --center, and --scales.
struct ThooftInput {
  std::string centers_file;
  std::vector<std::string> centers;
  std::vector<double> scales;

  void add_options(CLI::App* c) {
    c->add_option("--centers", centers_file, "JSON file with a list of centers [x1,x2,x3,x4]");
    c->add_option("--center", centers, "center x1,x2,x3,x4 (repeatable)");
    c->add_option("--scales", scales, "scale of each center");
  }
  AdhmData build(json& inputs) const {
    std::vector<Point4> pts;
    if (!centers_file.empty()) {
      for (const auto& p : read_json_file(centers_file)) pts.push_back(p.get<Point4>());
    }
    for (const auto& s : centers) pts.push_back(parse_point(s, "--center"));
    if (pts.empty()) pts.push_back({0, 0, 0, 0});
    std::vector<double> sc = scales;
    if (sc.empty()) sc.assign(pts.size(), 1.0);
    if (sc.size() != pts.size()) fail(errc::invalid_argument, "need one scale per center (got " + std::to_string(sc.size()) + " for " + std::to_string(pts.size()) + ")");
    std::vector<std::array<cplx, 2>> cs;
    for (const auto& p : pts) cs.push_back(center_from_point(p));
    inputs["centers"] = pts;
    inputs["scales"] = sc;
    return thooft_data(cs, sc);
  }
};

ManifoldModel load_model(const std::string& spec) {
  if (spec == "s2" || spec == "cp2" || spec == "s2_pair" || spec == "s2_corrupted") return model_by_name(spec);
  return model_from_json(read_json_file(spec));
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json series_json(const TruncatedSeries<RationalFunction>& s) {
  json a = json::array();
  for (const auto& c : s.coefficients()) a.push_back(c.to_string());
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gaugekit: exact and numerical checks for instantons, localization and instanton counting"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file mirroring the command-line flags; nested objects name subcommands");
  std::string output;
  bool timing = false;
  int workers = default_workers();
  std::uint64_t seed = 1;
  app.add_option("-o,--output", output, "write the JSON report to this file instead of stdout");
  app.add_flag("--timing", timing, "add wall-clock seconds to the report");
  app.add_option("--workers", workers, "worker threads (default: GAUGEKIT_WORKERS or hardware concurrency)")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for Monte-Carlo sampling");
  app.footer("Exit codes: 0 success, 1 usage or input error, 2 a mathematical check failed.");

  // ---- adhm
  auto* adhm = app.add_subcommand("adhm", "ADHM data: equations, t'Hooft family, curvature, charge")->require_subcommand(1);
  std::string adhm_data_file;
  auto* adhm_check = adhm->add_subcommand("check", "residuals of the complex and real ADHM equations for a datum");
  adhm_check->add_option("--data", adhm_data_file, "JSON ADHM datum (alpha1, alpha2, P, Q as [re,im] matrices)")->check(CLI::ExistingFile);
  double adhm_tol = 1e-8;
  adhm_check->add_option("--tol", adhm_tol, "residual tolerance");
  ThooftInput th_thooft, th_charge, th_field;
  auto* adhm_thooft = adhm->add_subcommand("thooft", "diagonal t'Hooft datum for distinct centers and scales");
  th_thooft.add_options(adhm_thooft);
  auto* adhm_charge = adhm->add_subcommand("charge", "topological charge, action and anti-self-duality residual on a 4D grid");
  th_charge.add_options(adhm_charge);
  std::string grid_spec = "24,4";
  double fd_step = 1e-2;
  std::string csv_path, bin_path;
  adhm_charge->add_option("--grid", grid_spec, "n,L: n points per axis on [-L,L]^4");
  adhm_charge->add_option("--step", fd_step, "finite-difference step for the curvature");
  adhm_charge->add_option("--csv", csv_path, "dump the energy density as CSV (x1,x2,x3,x4,value)");
  adhm_charge->add_option("--binary", bin_path, "dump the energy density in the GKGRID01 binary format");
  auto* adhm_field = adhm->add_subcommand("field", "curvature diagnostics at one point");
  th_field.add_options(adhm_field);
  std::string field_x = "0.3,0.1,-0.2,0.4";
  adhm_field->add_option("--x", field_x, "point x1,x2,x3,x4");
  adhm_field->add_option("--step", fd_step, "finite-difference step");
  auto* adhm_exists = adhm->add_subcommand("exists", "existence of irreducible ASD connections on S^4 for a group and charge");
  std::string group = "SU";
  int group_rank = 2, group_k = 1;
  adhm_exists->add_option("--group", group, "SU, Sp, Spin, G2, F4, E6, E7, E8");
  adhm_exists->add_option("--rank", group_rank, "rank parameter (ignored for exceptional groups)");
  adhm_exists->add_option("--k", group_k, "charge")->check(CLI::PositiveNumber);

  // ---- twistor
  auto* twistor = app.add_subcommand("twistor", "contour transform of twistor functions and the complexified Laplace equation")->require_subcommand(1);
  auto* tw_bateman = twistor->add_subcommand("bateman", "F(p,q,r,s) = contour integral of f(z, pz+q, rz+s) dz and its Laplace residuals");
  std::string integrand = "builtin:pole", tw_params, tw_point;
  int tw_samples = 128;
  double tw_radius = 1.0, tw_h = 2e-4;
  std::string tw_csv, tw_grid = "5,0.3";
  tw_bateman->add_option("--integrand", integrand, "builtin:bilinear|pole|exp|entire");
  tw_bateman->add_option("--params", tw_params, "p,q,r,s as 8 numbers re,im,... (default: catalog parameters)");
  tw_bateman->add_option("--point", tw_point, "real point x1,x2,x3,x4 (also checks harmonicity there)");
  tw_bateman->add_option("--samples", tw_samples, "contour nodes");
  tw_bateman->add_option("--radius", tw_radius, "contour radius about 0");
  tw_bateman->add_option("--step", tw_h, "finite-difference step");
  tw_bateman->add_option("--csv", tw_csv, "dump F over a grid of real points (x1..x4, Re F, Im F)");
  tw_bateman->add_option("--grid", tw_grid, "n,L for --csv");
  twistor->add_subcommand("catalog", "built-in integrands and their closed forms");

  // ---- bundles
  auto* bundles = app.add_subcommand("bundles", "rank/degree calculus for bundles on curves and P^n")->require_subcommand(1);
  long b_r = 5, b_d = 3, b_h = 3, b_n = 3, b_p = 0, b_g = 1, b_nu = 0;
  auto* b_tree = bundles->add_subcommand("tree", "Euclidean construction of the indecomposable E_{r,d} on an elliptic curve");
  b_tree->add_option("r", b_r, "rank")->required();
  b_tree->add_option("d", b_d, "degree")->required();
  auto* b_ftower = bundles->add_subcommand("ftower", "F_h by successive extensions of the trivial bundle");
  b_ftower->add_option("rank", b_h, "tower rank h")->required();
  auto* b_ns = bundles->add_subcommand("ns", "unitary pair A, B with A B A^-1 B^-1 = exp(2 pi i d / r)");
  b_ns->add_option("r", b_r, "rank")->required();
  b_ns->add_option("d", b_d, "degree")->required();
  auto* b_coh = bundles->add_subcommand("cohomology", "h^i(P^n, O(p))");
  b_coh->add_option("n", b_n, "dimension")->required();
  b_coh->add_option("p", b_p, "twist")->required();
  auto* b_chi = bundles->add_subcommand("chi", "Riemann-Roch Euler characteristic on a curve");
  b_chi->add_option("rank", b_r, "rank")->required();
  b_chi->add_option("degree", b_d, "degree")->required();
  b_chi->add_option("genus", b_g, "genus")->required();
  auto* b_stab = bundles->add_subcommand("stability", "rank-2 stability test: maximal line subbundle degree nu against degree d");
  b_stab->add_option("nu", b_nu, "maximal subbundle degree")->required();
  b_stab->add_option("d", b_d, "degree")->required();

  // ---- moduli
  auto* moduli = app.add_subcommand("moduli", "Poincare series of rank-2 odd-degree moduli over a curve")->require_subcommand(1);
  int genus = 2, jmax = 3, imax = -1, series_order = -1;
  std::string rule = "reconciled";
  auto* m_poinc = moduli->add_subcommand("poincare", "closed-form Poincare polynomial by exact division");
  auto* m_check = moduli->add_subcommand("strata", "equivariant series = moduli polynomial + stratum contributions, coefficientwise");
  auto* m_equiv = moduli->add_subcommand("equivariant", "equivariant series (1+t^3)^e / ((1-t^2)(1-t^4)) truncated");
  for (auto* c : {m_poinc, m_check, m_equiv}) {
    c->add_option("--genus", genus, "genus g >= 2")->check(CLI::Range(2, 64));
    c->add_option("--exponent-rule", rule, "reconciled or paper (the printed exponents)")->check(CLI::IsMember({"reconciled", "paper"}));
  }
  for (auto* c : {m_check, m_equiv}) c->add_option("--order", series_order, "truncation order (default 6g+10)");
  auto* m_aij = moduli->add_subcommand("aij", "genus-independent coefficients a_ij and the Betti numbers they produce");
  m_aij->add_option("--jmax", jmax, "largest j")->check(CLI::NonNegativeNumber);
  m_aij->add_option("--imax", imax, "largest |i| (default 3*jmax)");
  m_aij->add_option("--genus", genus, "also rebuild the Poincare polynomial of this genus");

  // ---- localize
  auto* localize = app.add_subcommand("localize", "fixed-point localization, formal integrals, convexity")->require_subcommand(1);
  std::string model_spec = "s2", class_name = "omega";
  std::vector<double> t_values;
  auto* l_dh = localize->add_subcommand("dh", "oscillatory integral of exp(-itH) against the Liouville form vs the fixed-point sum");
  l_dh->add_option("--model", model_spec, "s2, cp2, s2_pair or a model JSON file");
  l_dh->add_option("--t", t_values, "values of t (nonzero)");
  double dh_tol = 1e-7;
  l_dh->add_option("--tol", dh_tol, "tolerance on |numeric - fixed-point sum|");
  auto* l_ab = localize->add_subcommand("ab", "sum of restrictions over Euler classes; must be a polynomial in tau");
  l_ab->add_option("--model", model_spec, "s2, cp2, s2_pair, s2_corrupted or a model JSON file");
  l_ab->add_option("--class", class_name, "class name (1, omega, omega^2, omega^3, euler, c1, c1^2 for built-in models)");
  auto* l_formal = localize->add_subcommand("formal", "formal integral of 1: sum over fixed points of 1/prod(w tau)");
  std::vector<std::string> weight_lists;
  l_formal->add_option("--weights", weight_lists, "one comma-separated weight list per fixed point (repeatable)")->required();
  auto* l_boundary = localize->add_subcommand("boundary", "C^m formal integral against the boundary quotient pairing");
  int cm = 3;
  l_boundary->add_option("--m", cm, "complex dimension")->check(CLI::PositiveNumber);
  auto* l_hull = localize->add_subcommand("hull", "sampled torus moment values lie in the hull of the fixed-point images");
  long hull_samples = 100000;
  bool hull_corrupt = false;
  l_hull->add_option("--model", model_spec, "cp2, s2 or s2_pair");
  l_hull->add_option("--samples", hull_samples, "sample count")->check(CLI::PositiveNumber);
  l_hull->add_flag("--corrupt", hull_corrupt, "shift H by 2 on a patch (the check must then fail)");
  auto* l_density = localize->add_subcommand("density", "pushforward of the Liouville measure under H: histogram and per-interval polynomial fit");
  int bins = 12;
  long density_samples = 4000000;
  l_density->add_option("--model", model_spec, "s2, cp2 or s2_pair");
  l_density->add_option("--bins", bins, "histogram bins")->check(CLI::PositiveNumber);
  l_density->add_option("--samples", density_samples, "sample count")->check(CLI::PositiveNumber);

  // ---- nekrasov
  auto* nek = app.add_subcommand("nekrasov", "instanton partition function, prepotential, Seiberg-Witten period")->require_subcommand(1);
  int nk_rank = 2, nk_order = 3, nk_k = 2;
  bool check_exp = false, with_limit = false;
  auto* n_z = nek->add_subcommand("z", "Z = sum over Young-diagram tuples of 1/prod(tangent weights), as a series in Lambda");
  n_z->add_option("--rank", nk_rank, "1 or 2")->check(CLI::IsMember({1, 2}));
  n_z->add_option("--order", nk_order, "truncation order")->check(CLI::NonNegativeNumber);
  n_z->add_flag("--check-exp", check_exp, "rank 1: compare with exp(Lambda/(e1 e2)); rank 2: check both symmetries");
  auto* n_f = nek->add_subcommand("prepotential", "F = e1 e2 log Z and its e1 = e2 -> 0 limits");
  n_f->add_option("--rank", nk_rank, "1 or 2")->check(CLI::IsMember({1, 2}));
  n_f->add_option("--order", nk_order, "truncation order")->check(CLI::NonNegativeNumber);
  n_f->add_flag("--limit", with_limit, "compute the e -> 0 limit of each coefficient");
  auto* n_fp = nek->add_subcommand("fixed-points", "fixed points and their tangent weights");
  n_fp->add_option("--rank", nk_rank, "1 or 2")->check(CLI::IsMember({1, 2}));
  n_fp->add_option("--k", nk_k, "instanton number")->check(CLI::NonNegativeNumber);
  auto* n_sw = nek->add_subcommand("sw", "a(u, Lambda) = (1/2 pi i) contour integral of z dw/w on Lambda(w + 1/w) = z^2 + u");
  std::string sw_u = "-1";
  double sw_lambda = 1e-3;
  int sw_samples = 256;
  n_sw->add_option("--u", sw_u, "u as re or re,im");
  n_sw->add_option("--lambda", sw_lambda, "Lambda > 0");
  n_sw->add_option("--samples", sw_samples, "contour nodes");

  // ---- verify
  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  std::string scale = "quick", golden_file;
  std::vector<std::string> tolerance_overrides;
  std::vector<int> only;
  bool list_tolerances = false;
  verify->add_option("--scale", scale, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--tolerance", tolerance_overrides, "override a tolerance: name=value (repeatable)");
  verify->add_option("--only", only, "criterion numbers to run");
  verify->add_option("--golden", golden_file, "oracle golden file for the rank-2 prepotential (default: built in)");
  verify->add_flag("--list-tolerances", list_tolerances, "print tolerance names and defaults");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code != 0) {
      std::cerr << "hint: run `" << app.get_name() << " --help` or `<command> --help` for the grammar\n";
      return 1;
    }
    return 0;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  std::string command;
  for (const CLI::App* a = &app; !a->get_subcommands().empty();) {
    a = a->get_subcommands().front();
    command += (command.empty() ? "" : " ") + a->get_name();
  }
  auto parsed = [](CLI::App* c) { return c->parsed(); };

  try {
    verify_detail::Checks checks(rep.checks);
    // ---------------- adhm
    if (parsed(adhm_check)) {
      const AdhmData d = adhm_data_file.empty() ? thooft_data({{cplx(0), cplx(0)}}, {1.0}) : adhm_from_json(read_json_file(adhm_data_file));
      rep.inputs["data"] = adhm_data_file.empty() ? json("default t'Hooft k=1") : json(adhm_data_file);
      rep.results["datum"] = adhm_to_json(d);
      const auto r = adhm_residuals(d);
      rep.results["residuals"] = residuals_json(d);
      checks.at_most("complex_residual", r.complex_residual, adhm_tol);
      checks.at_most("real_residual", r.real_residual, adhm_tol);
    } else if (parsed(adhm_thooft)) {
      const AdhmData d = th_thooft.build(rep.inputs);
      rep.results["datum"] = adhm_to_json(d);
      rep.results["residuals"] = residuals_json(d);
      rep.results["moduli_dimension_su2"] = moduli_dimension(d.k);
    } else if (parsed(adhm_charge)) {
      const AdhmData d = th_charge.build(rep.inputs);
      const auto g = parse_doubles(grid_spec, 2, "--grid");
      if (g[0] != std::floor(g[0])) fail(errc::invalid_argument, "--grid n must be an integer");
      const Grid4D grid(g[1], int(g[0]));
      rep.inputs["grid"] = json{{"n", grid.n}, {"L", grid.half_width}};
      rep.inputs["h"] = fd_step;
      const auto cr = charge_and_action(d, grid, fd_step, workers);
      rep.results["residuals"] = residuals_json(d);
      rep.results["charge"] = cr.charge;
      rep.results["action"] = cr.action;
      rep.results["max_asd_residual"] = cr.max_asd_residual;
      rep.results["max_field_norm"] = cr.max_field_norm;
      rep.results["grid"] = json{{"n", grid.n}, {"L", grid.half_width}, {"spacing", grid.spacing()}};
      checks.relative("charge", cr.charge, d.k, 0.02);
      checks.relative("action", cr.action, 8 * std::numbers::pi * std::numbers::pi * d.k, 0.02);
      checks.at_most("asd_over_max_F", cr.max_asd_residual / cr.max_field_norm, 1e-3);
      if (!csv_path.empty() || !bin_path.empty()) {
        const auto energy = sample_grid(grid, [&](const Point4& x) { return point_diagnostics(d, x, fd_step).energy; }, workers);
        if (!csv_path.empty()) write_grid_csv(csv_path, grid, energy);
        if (!bin_path.empty()) write_grid_binary(bin_path, grid, energy);
      }
    } else if (parsed(adhm_field)) {
      const AdhmData d = th_field.build(rep.inputs);
      const Point4 x = parse_point(field_x, "--x");
      rep.inputs["x"] = x;
      const auto c = field_strength(d, x, fd_step);
      rep.results["energy_density"] = energy_density(c);
      rep.results["topological_density"] = topological_density(c);
      rep.results["asd_residual"] = asd_residual(c);
      double ah = 0;
      for (const auto& f : c.f_components) ah = std::max(ah, anti_hermitian_defect(f));
      rep.results["anti_hermitian_defect"] = ah;
    } else if (parsed(adhm_exists)) {
      rep.inputs = json{{"group", group}, {"rank", group_rank}, {"k", group_k}};
      rep.results["exists"] = existence_threshold(parse_group(group), group_rank, group_k);
      if (group == "SU" && group_rank == 2) rep.results["moduli_dimension"] = moduli_dimension(group_k);
    }
    // ---------------- twistor
    else if (parsed(tw_bateman)) {
      const std::string prefix = "builtin:";
      if (integrand.rfind(prefix, 0) != 0) fail(errc::invalid_argument, "--integrand must look like builtin:NAME");
      const auto f = twistor_catalog::by_name(integrand.substr(prefix.size()));
      const Contour contour(0.0, tw_radius, tw_samples);
      BatemanParams prm = twistor_catalog::default_params();
      if (!tw_params.empty()) {
        const auto v = parse_doubles(tw_params, 8, "--params");
        prm = {cplx(v[0], v[1]), cplx(v[2], v[3]), cplx(v[4], v[5]), cplx(v[6], v[7])};
      }
      if (!tw_point.empty()) prm = params_from_point(parse_point(tw_point, "--point"));
      rep.inputs = json{{"integrand", f.name}, {"samples", tw_samples}, {"radius", tw_radius}, {"h", tw_h},
                        {"params", json::array({complex_json(prm.p), complex_json(prm.q), complex_json(prm.r), complex_json(prm.s)})}};
      const cplx F = bateman_transform(f, prm, contour);
      rep.results["F"] = complex_json(F);
      if (f.closed_form && tw_radius == 1.0) rep.results["closed_form"] = complex_json(f.closed_form(prm));
      const double scale_f = std::max(std::abs(F), 1e-300);
      const double res = ultrahyperbolic_residual(f, prm, contour, tw_h);
      rep.results["ultrahyperbolic_residual"] = res;
      checks.at_most("ultrahyperbolic_over_F", res / scale_f, std::max(1e-6, stencil_rounding_floor(1.0, tw_h)));
      if (!tw_point.empty()) {
        const Point4 x = parse_point(tw_point, "--point");
        const double hr = harmonic_restriction_residual(f, x, contour, tw_h);
        rep.results["harmonic_residual"] = hr;
        checks.at_most("harmonic_over_F", hr / scale_f, std::max(1e-5, stencil_rounding_floor(1.0, tw_h)));
      }
      if (!tw_csv.empty()) {
        const auto g = parse_doubles(tw_grid, 2, "--grid");
        const Grid4D grid(g[1], int(g[0]));
        std::ofstream out(tw_csv);
        if (!out) fail(errc::invalid_argument, "cannot open " + tw_csv);
        out << "x1,x2,x3,x4,re,im\n";
        out.precision(17);
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const Point4 x = grid.point(i);
          const cplx v = bateman_transform(f, params_from_point(x), contour);
          out << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ',' << v.real() << ',' << v.imag() << '\n';
        }
      }
    } else if (command == "twistor catalog") {
      json list = json::array();
      const auto prm = twistor_catalog::default_params();
      for (const auto& nm : twistor_catalog::names()) {
        const auto f = twistor_catalog::by_name(nm);
        list.push_back(json{{"name", nm}, {"closed_form_at_default", complex_json(f.closed_form(prm))}});
      }
      rep.results["integrands"] = list;
      rep.results["default_params"] = json::array({complex_json(prm.p), complex_json(prm.q), complex_json(prm.r), complex_json(prm.s)});
    }
    // ---------------- bundles
    else if (parsed(b_tree)) {
      rep.inputs = json{{"r", b_r}, {"d", b_d}};
      const auto t = atiyah_tree(b_r, b_d);
      rep.results = to_json(t);
      rep.results["extensions"] = t.count(StepKind::extension);
      rep.results["tensors"] = t.count(StepKind::tensor);
      checks.exact("replay", t.replay() == t.root);
    } else if (parsed(b_ftower)) {
      rep.inputs = json{{"h", b_h}};
      rep.results = to_json(f_tower(b_h));
    } else if (parsed(b_ns)) {
      rep.inputs = json{{"r", b_r}, {"d", b_d}};
      const auto u = ns_matrices(b_r, b_d);
      rep.results["A"] = matrix_to_json(u.a_matrix);
      rep.results["B"] = matrix_to_json(u.b_matrix);
      rep.results["zeta"] = complex_json(u.zeta);
      rep.results["commutant_dimension"] = commutant_dimension(u);
      checks.at_most("commutator_defect", commutator_defect(u), 1e-12);
    } else if (parsed(b_coh)) {
      rep.inputs = json{{"n", b_n}, {"p", b_p}};
      json h = json::array();
      for (const auto& v : line_cohomology_pn(b_n, b_p)) h.push_back(v.str());
      rep.results["h"] = h;
    } else if (parsed(b_chi)) {
      const BundleSymbol e(b_r, b_d, b_g);
      rep.inputs = to_json(e);
      rep.results["chi"] = rr_curve(e);
      if (const auto kc = known_cohomology(e)) rep.results["h0_h1"] = json::array({kc->first, kc->second});
    } else if (parsed(b_stab)) {
      rep.inputs = json{{"nu", b_nu}, {"d", b_d}};
      rep.results["stable"] = nu_stability(b_nu, b_d);
    }
    // ---------------- moduli
    else if (parsed(m_poinc)) {
      rep.inputs = json{{"genus", genus}, {"exponent_rule", rule}};
      const auto p = moduli_poincare(SeriesParams(genus, -1, ExponentRule::by_name(rule)));
      rep.results["coefficients"] = coefficient_array(p);
      rep.results["polynomial"] = p.to_string();
    } else if (parsed(m_check)) {
      const SeriesParams p(genus, series_order, ExponentRule::by_name(rule));
      rep.inputs = json{{"genus", genus}, {"exponent_rule", rule}, {"order", p.order}};
      const auto r = check_stratum_identity(p);
      rep.results["exact_division"] = r.exact_division;
      if (!r.exact_division) rep.results["failure"] = r.failure;
      if (r.exact_division) {
        rep.results["poincare"] = coefficient_array(r.poincare);
        rep.results["strata_used"] = r.strata_used;
        rep.results["mismatched_degrees"] = r.mismatched_degrees;
      }
      checks.exact("exact_division", r.exact_division, r.failure.empty() ? json(nullptr) : json(r.failure));
      checks.exact("identity_holds_through_order", r.identity_holds, r.checked_through);
    } else if (parsed(m_equiv)) {
      const SeriesParams p(genus, series_order, ExponentRule::by_name(rule));
      rep.inputs = json{{"genus", genus}, {"exponent_rule", rule}, {"order", p.order}};
      rep.results["coefficients"] = to_json(equivariant_series(p))["coefficients"];
    } else if (parsed(m_aij)) {
      const int im = imax < 0 ? 3 * jmax : imax;
      rep.inputs = json{{"jmax", jmax}, {"imax", im}};
      const auto t = aij_table(im, jmax);
      json rows = json::object();
      for (int j = 0; j <= jmax; ++j) {
        json col = json::array();
        for (int i = -im; i <= im; ++i) col.push_back(t.at(i, j).str());
        rows[std::to_string(j)] = col;
      }
      rep.results["i_range"] = json::array({-im, im});
      rep.results["a_by_j"] = rows;
      if (m_aij->count("--genus")) {
        const SeriesParams p(genus);
        const auto via = homology_via_aij(p);
        rep.inputs["genus"] = genus;
        rep.results["betti_via_aij"] = coefficient_array(via);
        checks.exact("matches_closed_form", via == moduli_poincare(p));
      }
    }
    // ---------------- localize
    else if (parsed(l_dh)) {
      const auto m = load_model(model_spec);
      if (t_values.empty()) t_values = {0.5, 1.0, std::numbers::pi, 10.0};
      rep.inputs = json{{"model", m.name}, {"t", t_values}};
      json rows = json::array();
      double worst = 0;
      for (double t : t_values) {
        const cplx rhs = dh_rhs(m, t);
        json row{{"t", t}, {"fixed_point_sum", complex_json(rhs)}};
        if (m.sampler) {
          const cplx lhs = dh_lhs_numeric(m, t);
          row["numeric"] = complex_json(lhs);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
        rows.push_back(row);
      }
      rep.results["values"] = rows;
      if (m.sampler) checks.at_most("max_abs_difference", worst, dh_tol);
    } else if (parsed(l_ab)) {
      const auto m = load_model(model_spec);
      rep.inputs = json{{"model", m.name}, {"class", class_name}};
      const auto r = ab_integral(m, class_name);
      rep.results["integral"] = r.to_string();
      checks.exact("polynomial", r.is_polynomial());
    } else if (parsed(l_formal)) {
      std::vector<std::vector<long>> lists;
      for (const auto& s : weight_lists) {
        std::vector<long> w;
        for (double v : parse_doubles(s, 0, "--weights")) {
          if (v != std::floor(v)) fail(errc::invalid_argument, "weights must be integers");
          w.push_back(long(v));
        }
        lists.push_back(w);
      }
      rep.inputs = json{{"weights", lists}};
      rep.results["integral"] = formal_integral(lists).to_string();
    } else if (parsed(l_boundary)) {
      rep.inputs = json{{"m", cm}};
      const auto b = boundary_check_cm(cm);
      rep.results = json{{"lhs", b.lhs.to_string()}, {"rhs", b.rhs.to_string()}, {"pairing", to_string(b.pairing)}};
      checks.exact("equal", b.equal);
    } else if (parsed(l_hull)) {
      auto m = load_model(model_spec);
      if (hull_corrupt) m = corrupt_sampler(m);
      rep.inputs = json{{"model", m.name}, {"samples", hull_samples}, {"seed", seed}};
      const auto h = moment_hull_check(m, hull_samples, seed, workers);
      rep.results = json{{"outside", h.outside}, {"worst_violation", h.worst_violation}};
      checks.exact("inside_hull", h.inside);
    } else if (parsed(l_density)) {
      const auto m = load_model(model_spec);
      rep.inputs = json{{"model", m.name}, {"bins", bins}, {"samples", density_samples}, {"seed", seed}};
      const auto d = pushforward_density(m, bins, density_samples, seed, workers);
      json pieces = json::array();
      for (const auto& p : d.pieces) pieces.push_back(json{{"from", p.lo}, {"to", p.hi}, {"coefficients", p.coefficients}});
      rep.results = json{{"range", json::array({d.lo, d.hi})}, {"histogram", d.histogram}, {"degree", d.degree}, {"pieces", pieces},
                         {"fitted_bins", d.fitted_bins}};
      checks.at_most("fit_residual", d.residual, 0.01);
    }
    // ---------------- nekrasov
    else if (parsed(n_z)) {
      const NekrasovParams prm(nk_rank, nk_order, workers);
      rep.inputs = json{{"rank", nk_rank}, {"order", nk_order}};
      const auto z = z_series(prm);
      rep.results["variables"] = nekrasov_vars();
      rep.results["coefficients"] = series_json(z);
      if (check_exp && nk_rank == 1) {
        const auto c = rank1_closed_form(nk_order);
        bool same = true;
        for (int k = 0; k <= nk_order; ++k) same = same && z[k] == c[k];
        checks.exact("equals_exp_Lambda_over_e1e2", same);
      } else if (check_exp) {
        const auto s = check_symmetries(z);
        checks.exact("symmetric_e1_e2", s.epsilon_swap);
        checks.exact("symmetric_a_minus_a", s.a_reflection);
      }
    } else if (parsed(n_f)) {
      const NekrasovParams prm(nk_rank, nk_order, workers);
      rep.inputs = json{{"rank", nk_rank}, {"order", nk_order}, {"limit", with_limit}};
      const auto f = prepotential(prm);
      rep.results["variables"] = nekrasov_vars();
      rep.results["coefficients"] = series_json(f);
      if (with_limit) {
        const auto l = prepotential_limits(f);
        json lim = json::array();
        for (const auto& v : l.limits) lim.push_back(v.to_string());
        rep.results["limits"] = lim;
        checks.exact("finite_limits", true);
        checks.exact("direction_independent", l.direction_independent);
      }
    } else if (parsed(n_fp)) {
      rep.inputs = json{{"rank", nk_rank}, {"k", nk_k}};
      json list = json::array();
      for (const auto& fp : fixed_points(nk_rank, nk_k)) {
        json w = json::array();
        for (const auto& x : tangent_weights(fp)) w.push_back(x.to_string());
        list.push_back(json{{"partitions", to_json(fp)}, {"weights", w}});
      }
      rep.results["fixed_points"] = list;
      rep.results["count"] = list.size();
    } else if (parsed(n_sw)) {
      const auto uv = parse_doubles(sw_u, 0, "--u");
      if (uv.empty() || uv.size() > 2) fail(errc::invalid_argument, "--u takes re or re,im");
      const cplx u(uv[0], uv.size() == 2 ? uv[1] : 0.0);
      rep.inputs = json{{"u", complex_json(u)}, {"lambda", sw_lambda}, {"samples", sw_samples}};
      const auto p = sw_periods(u, sw_lambda, sw_samples);
      rep.results = json{{"a", complex_json(p.value)}, {"a_doubled_samples", complex_json(p.refined)}, {"a_squared_plus_u", std::abs(p.value * p.value + u)},
                         {"max_curve_residual", p.max_curve_residual}};
      checks.at_most("converged_under_doubling", p.delta, 1e-10);
    }
    // ---------------- verify
    else if (parsed(verify)) {
      VerifyOptions o;
      o.scale = parse_scale(scale);
      o.workers = workers;
      o.seed = seed;
      for (const auto& s : tolerance_overrides) o.tolerances.set_from_string(s);
      if (list_tolerances) {
        rep.results["tolerances"] = o.tolerances.all();
      } else {
        o.golden = golden_file.empty() ? json::parse(gaugekit_golden::nekrasov_rank2) : read_json_file(golden_file);
        o.only.insert(only.begin(), only.end());
        rep.inputs = json{{"scale", scale}, {"tolerance_overrides", tolerance_overrides}, {"only", only}};
        const auto r = verify_all(o, [](const CriterionResult& c) { std::cerr << criterion_line(c) << '\n'; });
        rep.results = to_json(r, o.tolerances, timing);
        checks.exact("all_criteria", r.all_passed());
      }
    }
    rep.has_checks = !rep.checks.empty();
    rep.pass = !rep.has_checks || checks.passed();
  } catch (const error& e) {
    const bool check_failure = is_check_failure(e.code());
    std::cerr << "error: " << e.what() << '\n';
    if (!check_failure) {
      std::cerr << "hint: check the arguments of `" << command << "` (run `" << command << " --help`)\n";
      return 1;
    }
    rep.results["error"] = std::string(name(e.code()));
    rep.results["message"] = e.what();
    rep.pass = false;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  json out{{"command", command}, {"version", kVersion}, {"inputs", rep.inputs}, {"results", rep.results}};
  if (rep.has_checks) out["checks"] = rep.checks;
  out["pass"] = rep.pass;
  if (timing) out["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::string text = out.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(output);
    if (!f) {
      std::cerr << "error: cannot write " << output << '\n';
      return 1;
    }
    f << text;
  }
  return rep.pass ? 0 : 2;
}
