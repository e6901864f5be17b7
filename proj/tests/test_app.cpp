#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "app.hpp"
#include "csgroups/errors.hpp"

using namespace csg;
using namespace csg::app;
using nlohmann::json;

namespace {

  std::filesystem::path const fixtures = CSGROUPS_TEST_FIXTURES;

  std::filesystem::path scratch(std::string const& name) {
    auto dir = std::filesystem::temp_directory_path() / "csgroups_test_app";
    std::filesystem::create_directories(dir);
    return dir / name;
  }

  // Exit status of the CLI with `args`, output discarded.
  int cli(std::string const& args) {
    std::string const cmd = std::string("\"") + CSGROUPS_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
    int const         st  = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(st));
    return WEXITSTATUS(st);
  }

  std::vector<Target> few_targets() {
    std::vector<Target> out;
    for (auto const* s : {"builtin:sym(3)", "builtin:q8xF21", "builtin:alt(5)", "builtin:cyclic(4)",
                          "builtin:quaternion8", "builtin:dihedral(6)xcyclic(2)"}) {
      out.push_back(resolve_target(s, fixtures));
    }
    return out;
  }

  Config quiet_config(unsigned jobs = 1) {
    Config cfg;
    cfg.jobs     = jobs;
    cfg.fixtures = fixtures;
    return cfg;
  }

}  // namespace

TEST_CASE("builtin grids have unique names and respect the order cap") {
  for (auto const* grid : {"small", "default"}) {
    INFO(grid);
    auto const            g = builtin_grid(grid, 5000);
    std::set<std::string> names;
    Config                cfg;
    for (std::size_t i = 0; i < g.size(); i += 1 + g.size() / 150) {
      auto const gr = load_target(g[i], cfg);
      CHECK(gr.order() <= (std::string(grid) == "small" ? 200u : 5000u));
    }
    for (auto const& t : g) {
      names.insert(t.name);
      CHECK(t.source.rfind("builtin:", 0) == 0);
    }
    CHECK(names.size() == g.size());
    CHECK(names.count("sym(3)") == 1);
  }
  CHECK(builtin_grid("none", 5000).empty());
  CHECK(builtin_grid("small", 5000).size() < builtin_grid("default", 5000).size());
  CHECK_THROWS_AS(builtin_grid("bogus", 5000), ParameterError);
}

TEST_CASE("targets resolve to builtins or fixture files") {
  auto const b = resolve_target("builtin:sym(3)", fixtures);
  CHECK(b.spec.has_value());
  CHECK(b.source == "builtin:sym(3)");
  auto const bare = resolve_target("S3", fixtures);
  CHECK(bare.spec.has_value());
  auto const f = resolve_target("fixture:g160_234", fixtures);
  REQUIRE(f.path.has_value());
  CHECK(f.path->filename() == "g160_234.txt");
  CHECK(load_target(f, Config{}).order() == 160);
  CHECK_THROWS_AS(load_target(resolve_target("fixture:does_not_exist", fixtures), Config{}), Error);
  CHECK_THROWS_AS(resolve_target("builtin:nonsense(1)", fixtures), ParameterError);
}

TEST_CASE("fixture catalog lists the shipped fixtures in name order") {
  auto const cat = fixture_catalog(fixtures);
  REQUIRE(cat.size() == 5);
  CHECK(std::is_sorted(cat.begin(), cat.end(),
                       [](Target const& a, Target const& b) { return a.source < b.source; }));
  CHECK(fixture_catalog("/nonexistent/dir").empty());
}

TEST_CASE("analyse records class sizes and theorem verdicts") {
  Config const cfg;
  auto const   r = analyse(resolve_target("builtin:alt(5)", fixtures), cfg);
  REQUIRE_FALSE(r.errored);
  json const& e = r.entry;
  CHECK(e["order"] == 60);
  CHECK(e["cs"] == json::array({1, 12, 15, 20}));
  CHECK(e["composite_count"] == 3);
  CHECK(e["soluble"] == false);
  for (auto const* id : {"A", "C", "CH"}) {
    CHECK(e["theorems"][id]["outcome"] == "not_applicable");
  }
  CHECK(e["timings_ms"].is_null());
  CHECK(r.findings.empty());

  auto const s = analyse(resolve_target("builtin:q8xF21", fixtures), cfg, true);
  CHECK(s.entry["theorems"]["A"]["outcome"] == "pass");
  CHECK(s.entry.contains("structure"));
}

TEST_CASE("sweeps are sorted, deterministic and independent of the job count") {
  auto const t  = few_targets();
  auto const r1 = sweep(t, quiet_config(1));
  auto const r2 = sweep(t, quiet_config(2));
  auto const r3 = sweep(t, quiet_config(1));
  CHECK(r1.report.dump() == r3.report.dump());
  // The config echo records the job count; everything else must agree.
  CHECK(r1.report["entries"] == r2.report["entries"]);
  CHECK(r1.report["findings"] == r2.report["findings"]);
  auto const& es = r1.report["entries"];
  REQUIRE(es.size() == t.size());
  for (std::size_t i = 1; i < es.size(); ++i) {
    auto const a = std::pair(es[i - 1]["order"].get<std::size_t>(), es[i - 1]["name"].get<std::string>());
    auto const b = std::pair(es[i]["order"].get<std::size_t>(), es[i]["name"].get<std::string>());
    CHECK(a < b);
  }
  CHECK(r1.report["findings"].empty());
  CHECK(r1.report["version"] == version);
  CHECK(r1.report.contains("config"));
}

TEST_CASE("an empty catalog sweeps to zero entries") {
  auto const r = sweep({}, quiet_config());
  CHECK(r.report["entries"].empty());
  CHECK(r.report["findings"].empty());
}

TEST_CASE("a bad fixture is recorded and the sweep continues") {
  auto const bad = scratch("broken.txt");
  {
    std::ofstream out(bad);
    out << "name broken\ndegree 3\n(1,2\n";
  }
  auto targets = few_targets();
  targets.push_back(resolve_target("fixture:" + bad.string(), fixtures));
  auto const r = sweep(targets, quiet_config());
  CHECK(r.errored == 1);
  CHECK(r.report["entries"].size() == targets.size());
  bool seen = false;
  for (auto const& e : r.report["entries"]) {
    if (e["name"] == "broken") {
      seen = true;
      CHECK(e["error"].is_string());
    }
  }
  CHECK(seen);
}

TEST_CASE("order cap hits are reported as incomplete") {
  Config cfg;
  cfg.max_elements = 50;
  auto const r     = analyse(resolve_target("builtin:sym(5)", fixtures), cfg);
  CHECK(r.errored);
  CHECK(r.incomplete);
}

TEST_CASE("CSV output has one row per entry") {
  auto const         r = sweep(few_targets(), quiet_config());
  std::ostringstream s;
  write_csv(s, r.report);
  std::istringstream in(s.str());
  std::string        line;
  std::getline(in, line);
  CHECK(line.rfind("name,source,order,cs", 0) == 0);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
  }
  CHECK(rows == few_targets().size());
  CHECK(s.str().find("1;12;15;20") != std::string::npos);
}

TEST_CASE("command line exit codes") {
  CHECK(cli("") == exit_usage);
  CHECK(cli("frobnicate") == exit_usage);
  CHECK(cli("analyze 'builtin:sym(3)'") == exit_pass);
  CHECK(cli("analyze builtin:nonsense") == exit_usage);
  CHECK(cli("--max-elements 10 analyze 'builtin:sym(4)'") == exit_inconclusive);
  CHECK(cli("verify A q8xF21") == exit_pass);
  CHECK(cli("verify CH S3") == exit_pass);
  CHECK(cli("verify Z S3") == exit_usage);
  CHECK(cli("verify psl 2") == exit_pass);
  CHECK(cli("--format xml sweep --no-builtins") == exit_usage);
  auto const out = scratch("sweep.json");
  CHECK(cli("--fixtures \"" + fixtures.string() + "\" sweep --grid none --report \"" + out.string()
            + "\"")
        == exit_pass);
  std::ifstream in(out);
  json const    rep = json::parse(in);
  CHECK(rep["entries"].size() == 5);
  CHECK(rep["findings"].empty());
}
