#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"
#include "capi.hpp"
#include "common/error.hpp"
#include "output.hpp"
#include "plot.hpp"
#include "scenario.hpp"

namespace fs = std::filesystem;
using namespace gaugeline::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gaugeline");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  static int counter = 0;
  const fs::path p = fs::temp_directory_path() /
                     ("gaugeline_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + "_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

bool is_number(const std::string& s, double& v) {
  char* end = nullptr;
  v = std::strtod(s.c_str(), &end);
  return !s.empty() && end == s.c_str() + s.size();
}

// Cell-by-cell comparison; numbers to `rtol` relative, text exactly.
void compare_csv(const fs::path& golden, const fs::path& actual, double rtol) {
  std::istringstream g(slurp(golden)), a(slurp(actual));
  std::string lg, la;
  int line = 0;
  while (std::getline(g, lg)) {
    ++line;
    REQUIRE_MESSAGE(std::getline(a, la), actual.string() << " ends early at line " << line);
    const auto cg = split(lg), ca = split(la);
    REQUIRE(cg.size() == ca.size());
    for (std::size_t i = 0; i < cg.size(); ++i) {
      double x = 0, y = 0;
      if (is_number(cg[i], x) && is_number(ca[i], y)) {
        CHECK_MESSAGE(std::abs(x - y) <= rtol * std::max(std::abs(x), 1e-300),
                      golden.filename().string() << ":" << line << " col " << i);
      } else {
        CHECK(cg[i] == ca[i]);
      }
    }
  }
  CHECK_FALSE(std::getline(a, la));
}

const std::string kPresets = GAUGELINE_PRESET_DIR;
const fs::path kGolden = GAUGELINE_GOLDEN_DIR;

}  // namespace

TEST_CASE("scenario files are strict") {
  const Scenario s = parse_scenario("mode: lineshape\nreps: coulomb, symmetric\nlineshape:\n  gamma: 0.2\n", "s");
  CHECK(*s.mode == "lineshape");
  CHECK(s.reps->size() == 2);
  CHECK(*s.gamma == 0.2);

  CHECK_THROWS_AS(parse_scenario("mode: lineshape\nlineshape:\n  gama: 0.2\n", "s"), gaugeline::ParseError);
  try {
    parse_scenario("mode: lineshape\nlineshape:\n  gama: 0.2\n", "x.scn");
  } catch (const gaugeline::ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("x.scn:3:") == 0);
  }
  CHECK_THROWS(parse_scenario("mode: lineshape\nfancy:\n  a: 1\n", "s"));
  CHECK_THROWS(parse_scenario("mode: lineshape\npulse:\n  rabi: 1\n", "s"));
  CHECK_THROWS(parse_scenario("mode: pulse\npulse:\n  omega_l: 1\n  delta_l: 0\n", "s"));
  CHECK_THROWS(parse_scenario("mode: lineshape\nlineshape:\n  gamma: abc\n", "s"));
  CHECK_THROWS_AS(load_scenario("/nonexistent.scn"), CliError);
}

TEST_CASE("flags override file values field by field") {
  Scenario file = parse_scenario("mode: lineshape\nlineshape:\n  gamma: 0.2\n  omega_eg: 2\n", "f");
  Scenario flags;
  flags.gamma = 0.05;
  const Scenario m = merge(file, flags);
  CHECK(*m.gamma == 0.05);
  CHECK(*m.omega_eg == 2.0);

  Scenario pulse = parse_scenario("mode: pulse\npulse:\n  omega_l: 0.9\n", "f");
  Scenario dl;
  dl.delta_l = 0.1;
  const Scenario mp = merge(pulse, dl);
  CHECK_FALSE(mp.omega_l.has_value());
  CHECK(*mp.delta_l == 0.1);
}

TEST_CASE("resolve fills defaults and rejects foreign fields") {
  Scenario s;
  s.mode = "lineshape";
  const Resolved r = resolve(s);
  CHECK(r.reps == std::vector<std::string>{"coulomb", "poincare", "symmetric"});
  CHECK(r.grid_points > 0);
  CHECK(r.lamb_shift_auto);
  s.rabi = 1.0;
  try {
    resolve(s);
    FAIL("expected rejection");
  } catch (const CliError& e) {
    CHECK(e.code() == kExitParse);
  }
  Scenario p;
  p.mode = "pulse";
  p.omega_0 = 1.0;
  p.delta_l = 0.25;
  CHECK(resolve(p).omega_l == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("output helpers") {
  CHECK(file_stem("lorentzian+laser") == "lorentzian_laser");
  CHECK(file_stem("Alpha:0.3") == "alpha_0.3");
  CHECK(shortest(1000.0) == "1000");
  CHECK(shortest(0.1) == "0.1");
  for (double v : {1.0 / 3.0, 2e-300, 6.02e23, -0.7}) CHECK(std::strtod(shortest(v).c_str(), nullptr) == v);
}

TEST_CASE("plot ordering and validation") {
  std::vector<Series> s{{"lorentzian", "L", {1, 2}, {1, 1}},
                        {"symmetric", "S", {1, 2}, {1, 2}},
                        {"coulomb", "C", {1, 2}, {2, 1}},
                        {"alpha:0.3", "A", {1, 2}, {1, 1}}};
  const auto o = order_series(s, false);
  CHECK(o[0].key == "coulomb");
  CHECK(o[1].key == "symmetric");
  CHECK(o[2].key == "lorentzian");
  CHECK(o[3].key == "alpha:0.3");
  CHECK(palette_color("coulomb", 0) != palette_color("poincare", 0));

  try {
    order_series({}, false);
    FAIL("expected rejection");
  } catch (const CliError& e) {
    CHECK(e.code() == kExitParse);
  }
  try {
    order_series({{"coulomb", "C", {1, 2}, {0.0, 1.0}}}, true);
    FAIL("expected rejection");
  } catch (const CliError& e) {
    CHECK(e.code() == kExitDomain);
  }
  const std::string svg = render_svg(o, PlotStyle{"t", "", "omega_k", "S", false});
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("C") < svg.find("lorentzian") );
  const std::string gp = render_gnuplot(o, PlotStyle{}, "out.svg");
  CHECK(gp.find("set output 'out.svg'") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli({"--help"}).code == kExitOk);
  CHECK(cli({}).code == kExitParse);
  CHECK(cli({"--seedless", "lineshape"}).code == kExitParse);
  CHECK(cli({"lineshape", "--bogus"}).code == kExitParse);
  const fs::path d = scratch("codes");
  CHECK(cli({"--out-dir", d.string(), "lineshape", "--reps", "velocity"}).code == kExitParse);
  CHECK(cli({"--out-dir", d.string(), "lineshape", "--gamma", "-1"}).code == kExitDomain);
  CHECK(cli({"--out-dir", d.string(), "pulse", "--rabi", "-1"}).code == kExitDomain);
  CHECK(cli({"--out-dir", d.string(), "lineshape", "--grid-min", "2", "--grid-max", "1"}).code == kExitParse);
  CHECK_FALSE(fs::exists(d));
  CHECK(cli({"--out-dir", "/proc/gaugeline/none", "--plot", "none", "lineshape"}).code == kExitIo);
  CHECK(cli({"run", "/nonexistent.scn"}).code == kExitParse);
}

TEST_CASE("runs write every artifact atomically") {
  const fs::path d = scratch("atomic");
  const Run r = cli({"--out-dir", d.string(), "run", kPresets + "/lineshape_linear.scn"});
  REQUIRE(r.code == kExitOk);
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(d)) names.push_back(e.path().filename().string());
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"lineshape.svg", "lineshape_coulomb.csv", "lineshape_poincare.csv",
                                          "lineshape_symmetric.csv", "run_metadata.json"});
  const std::string meta = slurp(d / "run_metadata.json");
  CHECK(meta.find("\"generated_at\"") != std::string::npos);
  CHECK(meta.find("\"spectra\"") != std::string::npos);
  fs::remove_all(d);
}

TEST_CASE("preset outputs match the golden files") {
  for (const auto& entry : fs::directory_iterator(kGolden)) {
    const std::string name = entry.path().filename().string();
    CAPTURE(name);
    const fs::path d = scratch(name);
    REQUIRE(cli({"--out-dir", d.string(), "--plot", "none", "run", kPresets + "/" + name + ".scn"}).code ==
            kExitOk);
    for (const auto& g : fs::directory_iterator(entry.path())) compare_csv(g.path(), d / g.path().filename(), 1e-12);
    fs::remove_all(d);
  }
}

TEST_CASE("repeated runs are byte identical") {
  for (const char* preset : {"lineshape_log.scn", "pulse_reps_gamma0.01.scn", "lamb_line.scn"}) {
    const fs::path a = scratch("a"), b = scratch("b");
    REQUIRE(cli({"--out-dir", a.string(), "run", kPresets + "/" + preset}).code == kExitOk);
    REQUIRE(cli({"--out-dir", b.string(), "run", kPresets + "/" + preset}).code == kExitOk);
    for (const auto& e : fs::directory_iterator(a)) {
      const auto f = e.path().filename();
      if (f == "run_metadata.json") continue;
      CHECK_MESSAGE(slurp(a / f) == slurp(b / f), f.string());
    }
    fs::remove_all(a);
    fs::remove_all(b);
  }
}

TEST_CASE("plot subcommand reads spectrum files") {
  const fs::path d = scratch("plot");
  REQUIRE(cli({"--out-dir", d.string(), "--plot", "none", "fluorescence", "--reps", "coulomb,poincare"}).code ==
          kExitOk);
  const Series s = read_spectrum_csv((d / "fluorescence_coulomb.csv").string());
  CHECK(s.key == "coulomb");
  CHECK(s.x.size() == s.y.size());
  const Run r = cli({"--out-dir", d.string(), "plot", (d / "fluorescence_poincare.csv").string(),
                     (d / "fluorescence_coulomb.csv").string(), "--output", "both.svg"});
  CHECK(r.code == kExitOk);
  CHECK(fs::exists(d / "both.svg"));
  std::ofstream(d / "junk.csv") << "a,b\n1,2\n";
  CHECK(cli({"--out-dir", d.string(), "plot", (d / "junk.csv").string()}).code == kExitParse);
  fs::remove_all(d);
}

TEST_CASE("verify subcommand") {
  const fs::path d = scratch("verify");
  const Run r = cli({"--out-dir", d.string(), "verify"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("pass") != std::string::npos);
  CHECK(fs::exists(d / "verify_report.json"));
  fs::remove_all(d);
}
