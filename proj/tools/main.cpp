// csgroups: analyse groups, sweep the catalog and verify the class-size
// theorems. Exit codes: 0 pass or not applicable, 1 usage error, 2 a
// conclusion failed, 3 inconclusive because a cap or search limit was hit.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "app.hpp"
#include "csgroups/errors.hpp"

namespace {

  using namespace csg;
  using namespace csg::app;
  using nlohmann::json;

  std::string set_text(json const& arr) {
    std::string o = "{";
    for (std::size_t i = 0; i < arr.size(); ++i) {
      o += (i ? "," : "") + std::to_string(arr[i].get<std::uint64_t>());
    }
    return o + "}";
  }

  bool write_output(std::string const& path, std::string const& text) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return true;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "error: cannot write " << path << '\n';
      return false;
    }
    return true;
  }

  std::string render(json const& report, std::string const& format) {
    if (format == "csv") {
      std::ostringstream s;
      write_csv(s, report);
      return s.str();
    }
    return report.dump(2) + "\n";
  }

  int verdict_exit(TheoremVerdict const& v) {
    switch (v.outcome()) {
      case Outcome::fail:
        return exit_fail;
      case Outcome::incomplete:
        return exit_inconclusive;
      default:
        return exit_pass;
    }
  }

  int lemma_exit(LemmaReport const& r) {
    if (!r.failures.empty()) {
      return exit_fail;
    }
    for (auto const& t : r.tallies) {
      if (t.skipped != 0) {
        return exit_inconclusive;
      }
    }
    return exit_pass;
  }

  void print_entry(json const& e) {
    std::cout << "name: " << e["name"].get<std::string>() << '\n'
              << "source: " << e["source"].get<std::string>() << '\n'
              << "order: " << e["order"] << '\n'
              << "cs: " << set_text(e["cs"]) << '\n'
              << "prime class sizes: " << set_text(e["primes"]) << '\n'
              << "composite class sizes: " << set_text(e["composites"]) << '\n'
              << "soluble: " << (e["soluble"].get<bool>() ? "yes" : "no") << '\n';
    if (e.contains("structure")) {
      json const& s = e["structure"];
      if (s.contains("incomplete")) {
        std::cout << "structure: incomplete (" << s["incomplete"].get<std::string>() << ")\n";
      } else {
        std::cout << "center: " << s["center"] << ", fitting: " << s["fitting"]
                  << ", fitting2: " << s["fitting2"] << '\n'
                  << "derived series: " << s["derived_series"].dump() << '\n'
                  << "sylow orders: " << s["sylow"].dump() << '\n'
                  << "nilpotency class: "
                  << (s["nilpotency_class"].is_null() ? std::string("none")
                                                      : s["nilpotency_class"].dump())
                  << '\n'
                  << "abelian direct factor: " << s["abelian_factor"] << ", core: " << s["core"]
                  << '\n';
      }
    }
    for (auto const& [id, v] : e["theorems"].items()) {
      std::cout << id << ": " << v["outcome"].get<std::string>() << " (" << v["reason"].get<std::string>()
                << ")\n";
      for (auto const& c : v["clauses"]) {
        std::cout << "  " << (c["passed"].get<bool>() ? "ok   " : "FAIL ") << c["label"].get<std::string>()
                  << ": " << c["detail"].get<std::string>() << '\n';
      }
    }
  }

  unsigned parse_exponent(std::string const& s) {
    unsigned    a = 0;
    std::size_t used = 0;
    try {
      a = static_cast<unsigned>(std::stoul(s, &used));
    } catch (std::exception const&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) {
      return 0;
    }
    return a;
  }

  // 2^a (4^a - 1) = n, or 0.
  unsigned psl_exponent_for_order(std::size_t n) {
    for (unsigned a = 1; a < 8; ++a) {
      std::uint64_t const q = std::uint64_t{1} << a;
      if (q * (q * q - 1) == n) {
        return a;
      }
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy class size analysis for finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", version);

  Config      cfg;
  std::string fixtures;
  std::string report_path;
  app.set_config("--config", "", "key=value file mirroring the flags; flags take precedence");
  app.add_option("--max-elements", cfg.max_elements, "closure cap on group order")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-normal-subgroups", cfg.max_normal_subgroups,
                 "cap on normal subgroup enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--pair-sample-seed", cfg.pair_sample_seed, "seed for sampled lemma pairs");
  app.add_option("--report", report_path, "write the report here instead of stdout");
  app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", cfg.jobs, "worker threads, 0 for available parallelism");
  app.add_option("--fixtures", fixtures, "fixture directory");
  app.add_flag("--timings", cfg.timings, "record per-entry timings (reports stop being byte-stable)");

  auto* analyze = app.add_subcommand("analyze", "analyse one group");
  std::string target;
  analyze->add_option("target", target, "builtin:<expr> or fixture:<name|path>")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "analyse the builtin grid and fixture directory");
  bool  no_builtins = false, no_fixtures = false;
  sweep_cmd->add_option("--grid", cfg.grid, "builtin grid")
      ->check(CLI::IsMember({"default", "full", "small", "none"}));
  sweep_cmd->add_flag("--no-builtins", no_builtins, "skip the builtin grid");
  sweep_cmd->add_flag("--no-fixtures", no_fixtures, "skip the fixture directory");
  sweep_cmd->add_flag("--lemmas", cfg.lemmas, "also run the lemma suite on every entry");

  auto*       verify = app.add_subcommand("verify", "check one theorem on one group");
  std::string theorem;
  verify->add_option("theorem", theorem, "A, C, CH, lemmas or psl")
      ->required()
      ->check(CLI::IsMember({"A", "C", "CH", "lemmas", "psl"}));
  verify->add_option("target", target, "group target, or the exponent a for psl")->required();

  auto* lemmas_cmd = app.add_subcommand("lemmas", "run the lemma suite over a catalog");
  std::vector<std::string> lemma_targets;
  bool                     with_fixtures = false;
  lemmas_cmd->add_option("targets", lemma_targets, "groups to check; default is the builtin grid");
  lemmas_cmd->add_option("--grid", cfg.grid, "builtin grid when no targets are given")
      ->check(CLI::IsMember({"default", "full", "small", "none"}));
  lemmas_cmd->add_flag("--with-fixtures", with_fixtures, "include the fixture directory");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  cfg.fixtures = fixtures.empty() ? default_fixture_dir() : std::filesystem::path(fixtures);

  try {
    if (*analyze) {
      EntryResult const r = analyse(resolve_target(target, cfg.fixtures), cfg, true);
      if (r.errored) {
        std::cerr << "error: " << r.entry["error"].get<std::string>() << '\n';
        return r.incomplete ? exit_inconclusive : exit_usage;
      }
      print_entry(r.entry);
      if (!report_path.empty()) {
        json rep = {{"version", version}, {"config", cfg.echo()}, {"entries", json::array({r.entry})},
                    {"findings", r.findings}};
        if (!write_output(report_path, render(rep, cfg.format))) {
          return exit_usage;
        }
      }
      return r.failed ? exit_fail : r.incomplete ? exit_inconclusive : exit_pass;
    }

    if (*sweep_cmd) {
      cfg.builtins = !no_builtins;
      if (no_fixtures) {
        cfg.fixtures.clear();
      }
      SweepOutcome const out = sweep(sweep_catalog(cfg), cfg);
      if (!write_output(report_path, render(out.report, cfg.format))) {
        return exit_usage;
      }
      auto const& s = out.report["summary"];
      std::cerr << "swept " << s["entries"] << " entries, " << s["errored"] << " errored, "
                << out.report["findings"].size() << " findings\n";
      return exit_pass;
    }

    if (*verify) {
      if (theorem == "psl") {
        unsigned       a = parse_exponent(target);
        TheoremVerdict v;
        if (a != 0) {
          v = check_psl_formula(a, cfg.fixtures);
        } else {
          FiniteGroup const g = load_target(resolve_target(target, cfg.fixtures), cfg);
          a                   = psl_exponent_for_order(g.order());
          if (a == 0) {
            throw ParameterError("order " + std::to_string(g.order()) + " is not 2^a (4^a - 1)");
          }
          v = check_psl_formula(a, g);
        }
        json out = {{"theorem", "psl"}, {"exponent", a}, {"verdict", verdict_json(v)}};
        write_output(report_path, out.dump(2) + "\n");
        return verdict_exit(v);
      }
      Target const      t = resolve_target(target, cfg.fixtures);
      FiniteGroup const g = load_target(t, cfg);
      Analysis          a(g, cfg.max_normal_subgroups);
      json out = {{"theorem", theorem}, {"target", t.source}, {"order", g.order()}, {"cs", a.profile().cs()}};
      int code = exit_pass;
      if (theorem == "lemmas") {
        LemmaOptions opts;
        opts.seed         = cfg.pair_sample_seed;
        LemmaReport const r = lemma_suite(a, opts);
        out["lemmas"]       = lemma_json(r);
        code                = lemma_exit(r);
      } else {
        TheoremVerdict const v = theorem == "A"   ? check_theorem_A(a)
                               : theorem == "C"   ? check_theorem_C(a)
                                                  : check_zero_composite_dichotomy(a);
        out["verdict"] = verdict_json(v);
        code           = verdict_exit(v);
      }
      write_output(report_path, out.dump(2) + "\n");
      return code;
    }

    if (*lemmas_cmd) {
      std::vector<Target> targets;
      for (auto const& s : lemma_targets) {
        targets.push_back(resolve_target(s, cfg.fixtures));
      }
      if (lemma_targets.empty()) {
        targets = builtin_grid(cfg.grid, cfg.max_elements);
      }
      if (with_fixtures) {
        auto fx = fixture_catalog(cfg.fixtures);
        targets.insert(targets.end(), fx.begin(), fx.end());
      }
      cfg.lemmas             = true;
      SweepOutcome const out = sweep(targets, cfg);
      json rep               = {{"version", version}, {"config", cfg.echo()}, {"lemmas", lemma_json(out.lemmas)}};
      if (!write_output(report_path, rep.dump(2) + "\n")) {
        return exit_usage;
      }
      std::cerr << "lemma suite over " << out.lemmas.groups << " groups: "
                << (out.lemmas.complete() ? "complete" : "INCOMPLETE") << '\n';
      // A lemma with no instance fails the suite just as a counterexample does.
      if (!out.lemmas.complete()) {
        return exit_fail;
      }
      if (out.errored != 0) {
        return exit_inconclusive;
      }
      return exit_pass;
    }
  } catch (OrderCapExceeded const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_inconclusive;
  } catch (LimitExceeded const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_inconclusive;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
