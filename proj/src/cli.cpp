#include "weylgrowth/cli.hpp"

#include "weylgrowth/config.hpp"
#include "weylgrowth/errors.hpp"
#include "weylgrowth/figure.hpp"
#include "weylgrowth/io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace weylgrowth {

namespace {

struct Globals {
  std::optional<double> tolerance;
  std::optional<int> max_iter;
  std::optional<std::uint64_t> seed;
};

Config effective_config(const Globals& g) {
  Config c = config_from_env();
  if (g.tolerance) c.tolerance = *g.tolerance;
  if (g.max_iter) c.max_iter = *g.max_iter;
  if (g.seed) c.seed = *g.seed;
  return c;
}

// "so2n" with --n N names so(2,N)
std::string resolve_preset(const std::string& preset, int n) {
  if (preset == "so2n") {
    if (n < 1) throw InputError("--preset so2n needs --n");
    return "so(2," + std::to_string(n) + ")";
  }
  return preset;
}

std::string vec_text(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

RatVec parse_mu(const std::string& text) {
  RatVec v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      v.push_back(parse_rational(tok));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("bad --mu entry: ") + e.what());
    }
  }
  return v;
}

void print_rootsys_text(const RootSystem& rs, std::ostream& out) {
  out << "root system: " << rs.label() << "\nrank: " << rs.rank() << "\nsimple roots:";
  for (const auto& a : rs.simple_roots()) out << ' ' << vec_text(a);
  out << "\npositive roots:\n";
  for (const auto& r : rs.positive_roots()) out << "  " << vec_text(r.coords) << "  m = " << r.multiplicity << '\n';
  const auto theta = strongly_orthogonal_theta(rs);
  out << "rho: " << vec_text(rs.rho()) << "\nTheta: " << vec_text(theta.theta) << '\n';
  for (std::size_t i = 0; i < rs.rank(); ++i) out << "omega_" << i + 1 << ": " << vec_text(rs.fundamental_weights()[i]) << '\n';
  out << "iota:";
  for (std::size_t i = 0; i < rs.rank(); ++i) out << ' ' << i + 1 << "->" << rs.opposition_permutation()[i] + 1;
  out << "\nWeyl group order: " << rs.predicted_weyl_order() << '\n';
}

int cmd_rootsys(const std::string& preset, const std::string& system_file, bool json, bool enumerate,
                const Config& cfg, std::ostream& out) {
  if (preset.empty() == system_file.empty()) throw InputError("give exactly one of --preset and --system");
  const RootSystem rs = preset.empty() ? root_system_from_json(read_json_file(system_file)) : build_root_system(preset);
  std::optional<std::size_t> enumerated;
  if (enumerate) enumerated = weyl_group(rs, cfg.weyl_cap).size();
  if (json) {
    Json j = root_system_to_json(rs);
    if (enumerated) j["weyl_enumerated"] = *enumerated;
    out << j.dump(2) << '\n';
  } else {
    print_rootsys_text(rs, out);
    if (enumerated) out << "enumerated: " << *enumerated << '\n';
  }
  return 0;
}

int cmd_solve(const std::string& path, const std::vector<std::string>& extra_mu, bool consistency, const Config& cfg,
              std::ostream& out) {
  auto file = load_model(path);
  const auto& g = file.model;
  const auto& rs = g.root_system();
  for (const auto& m : extra_mu) {
    auto v = parse_mu(m);
    if (v.size() != rs.rank()) throw InputError("--mu has wrong dimension");
    file.mus.push_back(std::move(v));
  }
  g.validate(1000, cfg.seed + 1);
  const auto scfg = solver_config(cfg);
  const auto crit = solve_critical(g, scfg);
  bool ok = true;

  Json report;
  report["root_system"] = rs.label();
  report["cone"] = cone_to_json(g.cone());
  report["dual_cone"] = cone_to_json(dual_cone(g.cone(), cfg.dd_rank_cap));
  const auto modified = modified_limit_cone(g);
  report["modified_cone"] = cone_to_json(modified.closure);
  report["modified_cone_empty"] = modified.empty;
  report["critical"] = critical_to_json(rs, crit);

  Json table = Json::array();
  std::vector<Vec> mus_f;
  for (const auto& mu : file.mus) {
    const auto r = delta_prime(g, to_doubles(mu), true, cfg.tolerance);
    Json row{{"mu", to_json(mu)}, {"status", to_string(r.status)}, {"value", number_json(r.value)}};
    const auto ex = delta_prime_exact(g, mu, true);
    if (ex.status == DeltaStatus::finite) row["exact"] = to_json(ex.value);
    row["theta"] = number_json(theta_mu(rs, crit.mu_gamma, to_doubles(mu)));
    table.push_back(row);
    mus_f.push_back(to_doubles(mu));
  }
  report["delta_prime_mu"] = table;

  Json walls = Json::array();
  for (std::size_t a = 0; a < rs.rank(); ++a)
    walls.push_back(onewall_to_json(deduce_onewall(g, modified.closure, a, crit, scfg)));
  report["one_wall"] = walls;

  const auto psi = check_psilinear(g, 200, cfg.seed + 1, 1e-8, scfg);
  report["psi_linear"] = {{"support", psi.support},
                          {"samples", psi.samples},
                          {"max_excess", number_json(psi.max_excess)},
                          {"max_gap", number_json(psi.max_gap)},
                          {"unconditional_holds", psi.unconditional_holds},
                          {"equality_holds", psi.equality_holds}};
  if (!mus_f.empty()) {
    const auto tent = tent_check(g, mus_f, 100, cfg.seed + 1);
    report["tent"] = {{"passed", tent.passed}, {"checked", tent.checked}, {"failures", tent.failures}};
  }

  if (consistency) {
    Json rows = Json::array();
    for (const auto& r : consistency_check(g, crit)) {
      rows.push_back({{"alpha", r.alpha + 1},
                      {"theta", number_json(r.theta)},
                      {"delta_prime", number_json(r.delta_prime)},
                      {"holds", r.holds}});
      ok = ok && r.holds;
    }
    ok = ok && psi.equality_holds && psi.unconditional_holds;
    if (report.contains("tent")) ok = ok && report["tent"]["passed"].get<bool>();
    report["consistency"] = {{"rows", rows}, {"passed", ok}};
  }
  out << report.dump(2) << '\n';
  return ok ? 0 : 1;
}

int cmd_bounds(const std::string& preset, int alpha, std::ostream& out) {
  const auto rs = build_root_system(preset);
  if (alpha < 0 || alpha > static_cast<int>(rs.rank())) throw InputError("--alpha out of range");
  Json report;
  report["root_system"] = rs.label();
  report["rho"] = to_json(rs.rho());
  report["theta"] = to_json(strongly_orthogonal_theta(rs).theta);
  Json list = Json::array();
  for (std::size_t a = 0; a < rs.rank(); ++a)
    if (alpha == 0 || static_cast<std::size_t>(alpha) == a + 1) list.push_back(wall_bound_to_json(a, bound_wall_avoided(rs, a)));
  report["bounds"] = list;
  out << report.dump(2) << '\n';
  return 0;
}

int cmd_figure(const std::string& preset, const std::string& output, std::ostream& out) {
  const auto rs = build_root_system(preset);
  const auto geom = figure_geometry(rs);
  const std::string svg = render_svg(rs, geom);
  std::ofstream f(output, std::ios::binary);
  if (!f) throw InputError("cannot write " + output);
  f << svg;
  Json report;
  report["root_system"] = rs.label();
  report["svg"] = output;
  Json hulls = Json::array();
  for (const auto& h : geom.hulls) {
    Json vs = Json::array();
    for (const auto& v : h.vertices) vs.push_back(to_json(v));
    hulls.push_back({{"label", h.label}, {"apex", to_json(h.apex)}, {"vertices", vs}});
  }
  report["hulls"] = hulls;
  Json cmp = Json::array();
  for (const auto& c : compare_hulls(rs, geom))
    cmp.push_back({{"alpha", c.alpha + 1},
                   {"coincides_with_rho_minus_theta", c.coincides},
                   {"vertex_distance", c.vertex_distance},
                   {"inside_rho_minus_theta", c.inside}});
  report["comparisons"] = cmp;
  out << report.dump(2) << '\n';
  return 0;
}

int cmd_check(const std::string& suite, const std::vector<std::string>& presets, std::size_t samples, std::size_t models,
              bool consistency, const Config& cfg, std::ostream& out) {
  Json report;
  report["suite"] = suite;
  report["seed"] = cfg.seed;
  bool ok = true;
  if (suite == "b3") {
    const auto rows = reproduce_b3_remark(samples, cfg.seed + 1);
    Json fixed = Json::array();
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i < 3) fixed.push_back(b3_row_to_json(rows[i]));
      if (!rows[i].matches) ++mismatches;
    }
    report["rows"] = fixed;
    report["samples"] = rows.size();
    report["mismatches"] = mismatches;
    ok = mismatches == 0;
  } else if (suite == "lemmas" || suite == "replays") {
    Json list = Json::array();
    for (const auto& p : presets) {
      const auto reports = suite == "lemmas" ? run_lemma_suite(p, samples, cfg.seed + 1)
                                             : run_replay_suite(p, models, cfg.seed + 1, consistency, solver_config(cfg));
      for (const auto& r : reports) {
        list.push_back(suite_to_json(r));
        ok = ok && r.passed();
      }
    }
    report["reports"] = list;
    if (suite == "replays") report["consistency_mode"] = consistency;
  } else {
    throw InputError("unknown suite " + suite + " (lemmas, replays, b3)");
  }
  report["passed"] = ok;
  out << report.dump(2) << '\n';
  return ok ? 0 : 1;
}

void write_orbit_csv(const std::string& path, const CartanSample& s) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f.precision(17);
  const std::size_t n = s.points.empty() ? 0 : s.points.front().ambient.size();
  f << "length";
  for (std::size_t i = 0; i < n; ++i) f << ",log_sigma_" << i + 1;
  for (std::size_t i = 0; i < s.rank; ++i) f << ",alpha_" << i + 1;
  f << ",word\n";
  for (const auto& p : s.points) {
    f << p.length;
    for (double x : p.ambient) f << ',' << x + 0.0;
    for (double x : p.coords) f << ',' << x + 0.0;
    f << ',';
    // generator k is the letter 'a' + k, its inverse 'A' + k
    for (auto l : p.word) f << static_cast<char>((l % 2 ? 'A' : 'a') + l / 2);
    f << '\n';
  }
}

int cmd_orbit(const std::string& path, const std::string& csv, double radius_cut, const std::string& mu_text,
              double fraction, int symmetry_depth, const Config& cfg, std::ostream& out) {
  auto spec = orbit_spec_from_json(read_json_file(path));
  spec.cap = cfg.orbit_cap;
  const auto sample = enumerate_orbit(spec);
  const auto amb = parse_ambient(spec.ambient);
  if (!csv.empty()) write_orbit_csv(csv, sample);

  Json report;
  report["ambient"] = sample.ambient;
  report["max_word_length"] = spec.max_word_length;
  report["semigroup"] = spec.semigroup;
  report["points"] = sample.points.size();
  report["dropped"] = sample.dropped;
  report["merged"] = sample.merged;

  double max_norm = 0;
  for (const auto& p : sample.points) {
    double s = 0;
    for (double x : p.ambient) s += x * x;
    max_norm = std::max(max_norm, std::sqrt(s));
  }
  const double cut = radius_cut > 0 ? radius_cut : 0.5 * max_norm;
  report["radius_cut"] = cut;
  try {
    const auto cone = empirical_limit_cone(sample, cut);
    Json gens = Json::array();
    for (const auto& gvec : cone.generators) gens.push_back(to_json(gvec));
    Json c{{"generators", gens},
           {"points", cone.points},
           {"collinear", cone.collinear},
           {"facet_margin", to_json(cone.facet_margin)},
           {"avoids_facet", cone.avoids_facet}};
    if (sample.rank == 2) {
      c["width_degrees"] = cone.width_degrees;
      c["chamber_degrees"] = cone.chamber_degrees;
    }
    report["limit_cone"] = c;
  } catch (const InputError& e) {
    report["limit_cone"] = {{"error", e.what()}};
  }

  Vec mu = mu_text.empty() ? to_doubles(amb.root_system.rho()) : to_doubles(parse_mu(mu_text));
  if (mu.size() != sample.rank) throw InputError("--mu has wrong dimension");
  try {
    const auto e = estimate_exponent(sample, mu, fraction);
    report["exponent"] = {{"mu", to_json(mu)},       {"slope", e.slope}, {"band", e.band},
                          {"t_low", e.t_low},        {"t_high", e.t_high}, {"points", e.points},
                          {"fraction", fraction},    {"label", e.label}};
  } catch (const InputError& e) {
    report["exponent"] = {{"mu", to_json(mu)}, {"error", e.what()}};
  }
  const auto sym = iota_symmetry(spec, sample, std::min(symmetry_depth, spec.max_word_length));
  report["iota_symmetry"] = {{"depth", std::min(symmetry_depth, spec.max_word_length)},
                             {"checked", sym.checked},
                             {"missing", sym.missing},
                             {"max_defect", sym.max_defect}};
  out << report.dump(2) << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth indicators, critical functionals and Weyl orbit geometry", "weylgrowth"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--tolerance", globals.tolerance, "solver tolerance");
  app.add_option("--max-iter", globals.max_iter, "solver iteration cap");
  app.add_option("--seed", globals.seed, "random seed");

  std::string preset, system_file, model, output, suite = "lemmas", gens, csv, mu_text;
  int n = 0, alpha = 0, symmetry_depth = 10;
  bool json = false, enumerate = false, consistency = false;
  std::vector<std::string> mus;
  std::vector<std::string> presets{"a2", "a3", "b2", "b3", "g2", "so(2,5)"};
  std::size_t samples = 10000, models = 20;
  double radius_cut = 0, fraction = 0.5;

  auto* rootsys = app.add_subcommand("rootsys", "print a root system");
  rootsys->add_option("--preset", preset, "preset name, e.g. so(2,5), b3, sl(3,R)");
  rootsys->add_option("--system", system_file, "JSON file describing a custom root system");
  rootsys->add_flag("--json", json, "JSON output");
  rootsys->add_flag("--enumerate", enumerate, "enumerate the Weyl group up to the configured cap");

  auto* solve = app.add_subcommand("solve", "critical functional of a growth model");
  solve->alias("growth-solve");
  solve->add_option("model", model, "model JSON file")->required();
  solve->add_option("--mu", mus, "extra covector for the delta' table, comma separated");
  solve->add_flag("--consistency", consistency, "assert the identity-dependent equalities");

  auto* bounds = app.add_subcommand("bounds", "upper bound on psi when a wall is avoided");
  bounds->add_option("--preset", preset, "preset name")->required();
  bounds->add_option("--n", n, "n for --preset so2n");
  bounds->add_option("--alpha", alpha, "simple root, 1-based (default: all)");

  auto* figure = app.add_subcommand("figure", "rank-2 SVG of the Weyl orbit hulls");
  figure->add_option("--preset", preset, "rank-2 preset")->required();
  figure->add_option("--n", n, "n for --preset so2n");
  figure->add_option("-o,--output", output, "SVG path")->required();

  auto* check = app.add_subcommand("check", "property suites");
  check->add_option("--suite", suite, "lemmas, replays or b3");
  check->add_option("--presets", presets, "presets to run");
  check->add_option("--samples", samples, "samples per lemma (lemmas, b3)");
  check->add_option("--models", models, "random models per preset (replays)");
  check->add_flag("--consistency", consistency, "replays: assert the identity-dependent equalities");

  auto* orbit = app.add_subcommand("orbit", "Cartan projections of a word ball");
  orbit->add_option("generators", gens, "generator JSON file")->required();
  orbit->add_option("--csv", csv, "write every point to this CSV file");
  orbit->add_option("--radius-cut", radius_cut, "limit cone uses points beyond this norm (default: half the max)");
  orbit->add_option("--mu", mu_text, "covector for the exponent estimate (default: rho)");
  orbit->add_option("--fraction", fraction, "top fraction of the T range used in the fit");
  orbit->add_option("--symmetry-depth", symmetry_depth, "word length for the iota-symmetry check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Config cfg = effective_config(globals);
    if (rootsys->parsed()) return cmd_rootsys(preset, system_file, json, enumerate, cfg, out);
    if (solve->parsed()) return cmd_solve(model, mus, consistency, cfg, out);
    if (bounds->parsed()) return cmd_bounds(resolve_preset(preset, n), alpha, out);
    if (figure->parsed()) return cmd_figure(resolve_preset(preset, n), output, out);
    if (check->parsed()) return cmd_check(suite, presets, samples, models, consistency, cfg, out);
    if (orbit->parsed()) return cmd_orbit(gens, csv, radius_cut, mu_text, fraction, symmetry_depth, cfg, out);
  } catch (const ModelInvariantError& e) {
    err << "model violates growth-indicator properties:\n";
    for (const auto& v : e.violations()) err << "  " << v << '\n';
    return 3;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 2;
}

}  // namespace weylgrowth
