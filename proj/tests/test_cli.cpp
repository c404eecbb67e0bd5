#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylgrowth/cli.hpp"
#include "weylgrowth/io.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace weylgrowth;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "weylgrowth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture(const std::string& name) { return std::string(WG_FIXTURES) + "/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

double num(const Json& j) { return j.get<double>(); }

void check_close(const Json& got, const Json& want) {
  if (want.is_number()) {
    CHECK(num(got) == doctest::Approx(num(want)).epsilon(1e-9).scale(1));
  } else if (want.is_array() || want.is_object()) {
    REQUIRE(got.size() == want.size());
    for (auto it = want.begin(); it != want.end(); ++it)
      check_close(want.is_array() ? got.at(static_cast<std::size_t>(it - want.begin())) : got.at(it.key()), *it);
  } else {
    CHECK(got == want);
  }
}

}  // namespace

TEST_CASE("rootsys") {
  auto r = run({"rootsys", "--preset", "so(2,5)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rho: (5/2, 3/2)") != std::string::npos);
  CHECK(r.out.find("Theta: (1, 0)") != std::string::npos);
  CHECK(run({"rootsys", "--preset", "a1"}).out.find("rho: (1/2)") != std::string::npos);

  auto j = run({"rootsys", "--preset", "b3", "--json"}).json();
  CHECK(j["fundamental_weights"][2] == Json::array({"1/2", "1/2", "1/2"}));
  CHECK(j["iota_permutation"] == Json::array({0, 1, 2}));
  CHECK(run({"rootsys", "--preset", "a3", "--json"}).json()["iota_permutation"] == Json::array({2, 1, 0}));
  CHECK(run({"rootsys", "--preset", "f4", "--json", "--enumerate"}).json()["weyl_enumerated"] == 1152);

  auto bad = run({"rootsys", "--preset", "q7"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("q7") != std::string::npos);
  CHECK(run({"rootsys"}).code == 2);
  CHECK(run({"rootsys", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("solve fixtures") {
  SUBCASE("rho model") {
    auto r = run({"solve", fixture("model_rho.json"), "--consistency"});
    CHECK(r.code == 0);
    auto j = r.json();
    CHECK(num(j["critical"]["delta_prime"]) == doctest::Approx(0));
    for (const auto& x : j["critical"]["mu_gamma"]) CHECK(num(x) == doctest::Approx(0));
  }
  SUBCASE("2 rho on B3") {
    auto j = run({"solve", fixture("model_2rho_b3.json"), "--consistency"}).json();
    CHECK(num(j["critical"]["delta_prime"]) == doctest::Approx(std::sqrt(35.0) / 2));
    CHECK(num(j["critical"]["mu_gamma"][0]) == doctest::Approx(2.5));
    CHECK(j["consistency"]["passed"] == true);
  }
  SUBCASE("linear B2 model") {
    auto j = run({"solve", fixture("model_linear_b2.json"), "--mu", "1/2,1/2"}).json();
    CHECK(num(j["critical"]["delta_prime"]) == doctest::Approx(std::sqrt(2.0)));
    CHECK(num(j["critical"]["v_gamma"][0]) == doctest::Approx(std::sqrt(0.5)));
    CHECK(num(j["critical"]["mu_gamma"][1]) == doctest::Approx(1));
    // psi' = (1,1) is linear: delta'_mu = max over the rays of (1,1)(v)/mu(v)
    REQUIRE(j["delta_prime_mu"].size() == 3);
    CHECK(j["delta_prime_mu"][0]["exact"] == "2");
    CHECK(j["delta_prime_mu"][1]["exact"] == "1");
    CHECK(j["delta_prime_mu"][2]["exact"] == "2");
  }
  for (const char* name : {"model_rho", "model_2rho_b3", "model_linear_b2"}) {
    auto j = run({"solve", fixture(std::string(name) + ".json")}).json();
    auto want = read_json_file(fixture(std::string("expected_") + name + ".json"));
    check_close(j["critical"], want["critical"]);
    check_close(j["delta_prime_mu"], want["delta_prime_mu"]);
  }
  CHECK(run({"growth-solve", fixture("model_rho.json")}).code == 0);
}

TEST_CASE("solve errors") {
  auto inv = run({"solve", fixture("model_invalid.json")});
  CHECK(inv.code == 3);
  CHECK(inv.err.find("psi <= 2 rho") != std::string::npos);
  CHECK(run({"solve", fixture("bad.json")}).code == 2);
  CHECK(run({"solve", fixture("nonexistent.json")}).code == 2);
  CHECK(run({"solve", fixture("model_rho.json"), "--mu", "1,x"}).code == 2);
  CHECK(run({"solve", fixture("model_rho.json"), "--mu", "1,2,3"}).code == 2);
  // outside the dual cone of L
  CHECK(run({"solve", fixture("model_rho.json"), "--mu", "-1,0"}).code == 2);
}

TEST_CASE("consistency failure exits 1") {
  const auto path = temp_path("wg_thin.json");
  std::ofstream(path) << R"J({"root_system": "so(2,5)", "cone": {"generators": [[3, 1], [2, 1]]},
                            "pieces": [["15/4", "2"]]})J";
  auto r = run({"solve", path, "--consistency"});
  CHECK(r.code == 1);
  CHECK(r.json()["consistency"]["passed"] == false);
  CHECK(run({"solve", path}).code == 0);
}

TEST_CASE("bounds") {
  for (int n = 3; n <= 10; ++n) {
    auto j = run({"bounds", "--preset", "so2n", "--n", std::to_string(n)}).json();
    const auto c = to_string(frac(n - 2, 2));
    CHECK(j["bounds"][0]["c"] == c);
    CHECK(j["bounds"][1]["c"] == c);
    CHECK(j["bounds"][0]["bound"] == Json::array({std::to_string(n - 1), c}));
  }
  auto one = run({"bounds", "--preset", "so(2,5)", "--alpha", "2"}).json();
  REQUIRE(one["bounds"].size() == 1);
  CHECK(one["bounds"][0]["alpha"] == 2);
  CHECK(one["bounds"][0]["bound"] == Json::array({"4", "3"}));
  CHECK(run({"bounds", "--preset", "so(2,5)", "--alpha", "3"}).code == 2);
  CHECK(run({"bounds", "--preset", "so2n"}).code == 2);
}

TEST_CASE("figure") {
  const auto a = temp_path("wg_fig_a.svg"), b = temp_path("wg_fig_b.svg");
  auto r = run({"figure", "--preset", "so2n", "--n", "5", "-o", a});
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["comparisons"][1]["coincides_with_rho_minus_theta"] == true);
  CHECK(j["comparisons"][0]["inside_rho_minus_theta"] == true);
  CHECK(run({"figure", "--preset", "so(2,5)", "-o", b}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("conv W(3/2 omega_1)") != std::string::npos);
  CHECK(run({"figure", "--preset", "b3", "-o", a}).code == 2);
  CHECK(run({"figure", "--preset", "so(2,5)"}).code == 2);
}

TEST_CASE("check suites") {
  auto lem = run({"check", "--suite", "lemmas", "--presets", "b2", "g2", "--samples", "200", "--seed", "3"});
  CHECK(lem.code == 0);
  CHECK(lem.json()["passed"] == true);
  CHECK(lem.json()["reports"].size() == 12);
  auto rep = run({"--seed", "2", "check", "--suite", "replays", "--presets", "b2", "--models", "4"});
  CHECK(rep.code == 0);
  auto b3 = run({"check", "--suite", "b3", "--samples", "100"});
  CHECK(b3.code == 0);
  CHECK(b3.json()["mismatches"] == 0);
  CHECK(run({"check", "--suite", "everything"}).code == 2);
  CHECK(run({"check", "--suite", "lemmas", "--presets", "nope", "--samples", "1"}).code == 2);
}

TEST_CASE("orbit") {
  const auto csv = temp_path("wg_orbit.csv");
  auto r = run({"orbit", fixture("orbit_cyclic.json"), "--mu", "1/2,1/2", "--csv", csv});
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["points"] == 1001);
  CHECK(j["limit_cone"]["collinear"] == true);
  CHECK(std::abs(num(j["exponent"]["slope"])) <= 0.05);
  CHECK(j["iota_symmetry"]["missing"] == 0);
  const auto text = slurp(csv);
  CHECK(text.rfind("length,log_sigma_1,log_sigma_2,log_sigma_3,alpha_1,alpha_2,word\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1002);

  // a capped run is an input error
  const auto cfg = temp_path("wg_cfg.json");
  std::ofstream(cfg) << R"({"orbit_cap": 50})";
  ::setenv("WEYLGROWTH_CONFIG", cfg.c_str(), 1);
  CHECK(run({"orbit", fixture("orbit_cyclic.json")}).code == 2);
  std::ofstream(cfg) << R"({"bogus": 1})";
  CHECK(run({"rootsys", "--preset", "a2"}).code == 2);
  ::unsetenv("WEYLGROWTH_CONFIG");
  CHECK(run({"orbit", fixture("bad.json")}).code == 2);
}
