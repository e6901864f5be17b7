// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "app.hpp"
#include "csgroups/errors.hpp"

using namespace csg;
using namespace csg::app;
using nlohmann::json;
using Sizes = std::vector<std::uint64_t>;

namespace {

  std::filesystem::path const fixtures = CSGROUPS_TEST_FIXTURES;

  // Collects mismatches for one criterion.
  struct Check {
    std::vector<std::string> problems;
    double                   shared_seconds = 0;  // work done earlier on this criterion's behalf

    template <typename A, typename B>
    void eq(std::string const& what, A const& got, B const& want) {
      if (!(got == want)) {
        std::ostringstream s;
        s << what << " mismatch";
        problems.push_back(s.str());
      }
    }
    void that(std::string const& what, bool ok) {
      if (!ok) {
        problems.push_back(what);
      }
    }
  };

  std::uint64_t num(TheoremVerdict const& v, std::string const& key) {
    auto it = v.witnesses.find(key);
    if (it == v.witnesses.end() || !std::holds_alternative<std::uint64_t>(it->second)) {
      return 0;
    }
    return std::get<std::uint64_t>(it->second);
  }

  std::string str(TheoremVerdict const& v, std::string const& key) {
    auto it = v.witnesses.find(key);
    if (it == v.witnesses.end() || !std::holds_alternative<std::string>(it->second)) {
      return {};
    }
    return std::get<std::string>(it->second);
  }

  Sizes list(TheoremVerdict const& v, std::string const& key) {
    auto it = v.witnesses.find(key);
    if (it == v.witnesses.end() || !std::holds_alternative<Sizes>(it->second)) {
      return {};
    }
    return std::get<Sizes>(it->second);
  }

  int failures = 0;

  void criterion(int n, std::string const& title, double limit_s, std::function<void(Check&)> body) {
    Check      c;
    auto const t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (std::exception const& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() + c.shared_seconds;
    if (limit_s > 0 && secs > limit_s) {
      c.problems.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
    }
    bool const ok = c.problems.empty();
    failures += !ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << secs << " s)";
    for (auto const& p : c.problems) {
      line << "; " << p;
    }
    std::cout << line.str() << std::endl;
  }

  void prime_power_case(Check& c, std::string const& fixture, Sizes const& cs, std::string const& which,
                        std::uint64_t other) {
    auto const g = load_fixture(fixtures / (fixture + ".txt"));
    Analysis   a(g);
    c.eq(fixture + " cs", a.profile().cs(), cs);
    auto const v = check_theorem_C(a);
    c.that(fixture + " theorem applies", v.applies);
    c.that(fixture + " outcome pass", v.outcome() == Outcome::pass);
    c.eq(fixture + " case", str(v, "case"), which);
    c.eq(fixture + " other size", num(v, "other_size"), other);
  }

}  // namespace

int main() {
  Config cfg;
  cfg.fixtures = fixtures;

  criterion(1, "order 480 fixture, prime-power case a", 10, [](Check& c) {
    auto const g = load_fixture(fixtures / "g480_166.txt");
    Analysis   a(g);
    c.eq("order", g.order(), 480u);
    c.eq("cs", a.profile().cs(), Sizes{1, 2, 4, 60});
    c.eq("prime sizes", a.split().primes, std::set<std::uint64_t>{2});
    c.eq("composite sizes", a.split().composites, std::set<std::uint64_t>{4, 60});
    auto const v = check_theorem_C(a);
    c.that("outcome pass", v.applies && v.outcome() == Outcome::pass);
    c.eq("case", str(v, "case"), std::string("a"));
    c.eq("prime", num(v, "prime"), 2u);
    c.eq("exponent", num(v, "exponent"), 2u);
    c.eq("other size", num(v, "other_size"), 60u);
    c.eq("other size primes", list(v, "other_size_primes"), Sizes{2, 3, 5});
  });

  criterion(2, "order 160 fixture, prime-power case b", 5, [](Check& c) {
    prime_power_case(c, "g160_234", Sizes{1, 5, 20, 32}, "b", 20);
    auto const g = load_fixture(fixtures / "g160_234.txt");
    Analysis   a(g);
    c.eq("|G/F2|", num(check_theorem_C(a), "f2_index"), 2u);
  });

  criterion(3, "order 486 and 162 fixtures, prime-power case c", 20, [](Check& c) {
    for (auto const& [name, cs, other] : {std::tuple{"g486_176", Sizes{1, 2, 3, 18, 27}, 18},
                                          std::tuple{"g162_5", Sizes{1, 2, 3, 6, 27}, 6}}) {
      auto const t0 = std::chrono::steady_clock::now();
      prime_power_case(c, name, cs, "c", static_cast<std::uint64_t>(other));
      double const s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      c.that(std::string(name) + " within 10 s", s < 10);
    }
  });

  criterion(4, "two-composite structure on quaternion8 x frobenius(7,3)", 5, [](Check& c) {
    auto const g = build(parse_builtin("quaternion8 x frobenius(7,3)"));
    Analysis   a(g);
    c.eq("cs", a.profile().cs(), Sizes{1, 2, 3, 6, 7, 14});
    auto const v = check_theorem_A(a);
    c.that("outcome pass", v.applies && v.outcome() == Outcome::pass);
    c.eq("shared prime", num(v, "shared_prime"), 2u);
    c.eq("left prime", num(v, "left_prime"), 3u);
    c.eq("right prime", num(v, "right_prime"), 7u);
    c.eq("left composite", num(v, "left_composite"), 6u);
    c.eq("right composite", num(v, "right_composite"), 14u);
    c.eq("P class", num(v, "p_factor_class"), 2u);
    c.eq("cs(P)", list(v, "p_factor_cs"), Sizes{1, 2});
    c.eq("cs(H)", list(v, "complement_cs"), Sizes{1, 3, 7});
    std::uint64_t const h = num(v, "complement_order"), z = num(v, "complement_center_order");
    c.that("|H/Z(H)| = 21", z != 0 && h / z == 21);
    c.that("H/Z(H) Frobenius", num(v, "complement_frobenius_kernel_order") != 0);
  });

  // Criteria 5, 8 and 9 share the catalog sweeps.
  std::vector<Target> const catalog = sweep_catalog(cfg);
  std::optional<SweepOutcome> first;
  double                      first_secs = 0;

  criterion(5, "zero-composite dichotomy on every nonabelian catalog group", 0, [&](Check& c) {
    for (auto const& [expr, branch] : {std::pair{"quaternion8", "p-group"}, std::pair{"sym(3)", "frobenius"},
                                       std::pair{"frobenius(7,3)", "frobenius"}}) {
      auto const g = build(parse_builtin(expr));
      Analysis   a(g);
      auto const v = check_zero_composite_dichotomy(a);
      c.that(std::string(expr) + " passes", v.applies && v.outcome() == Outcome::pass);
      c.eq(std::string(expr) + " branch", str(v, "branch"), std::string(branch));
    }
    auto const t0 = std::chrono::steady_clock::now();
    first.emplace(sweep(catalog, cfg));
    first_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t applied = 0;
    for (auto const& e : first->report["entries"]) {
      if (!e["error"].is_null()) {
        c.that(e["name"].get<std::string>() + " errored", false);
        continue;
      }
      if (!e["composites"].empty() || e["cs"].size() < 2) {
        continue;
      }
      ++applied;
      c.that(e["name"].get<std::string>() + " dichotomy",
             e["theorems"]["CH"]["outcome"] == "pass");
    }
    c.that("some catalog group has no composite class size", applied > 0);
  });

  criterion(6, "PSL(2, 2^a) class sizes for a = 2, 3", 30, [](Check& c) {
    auto const a5 = check_psl_formula(2, alternating(5));
    c.that("a = 2 passes", a5.outcome() == Outcome::pass);
    c.eq("alt(5) cs", list(a5, "cs"), Sizes{1, 12, 15, 20});
    c.eq("alt(5) composite count", num(a5, "composite_count"), 3u);
    auto const p8 = check_psl_formula(3, fixtures);
    c.that("a = 3 passes", p8.outcome() == Outcome::pass);
    c.eq("psl2_8 cs", list(p8, "cs"), Sizes{1, 56, 63, 72});
  });

  criterion(7, "lemma suite over the builtin catalog", 300, [&](Check& c) {
    Config lc = cfg;
    lc.lemmas = true;
    auto const out = sweep(builtin_grid(lc.grid, lc.max_elements), lc);
    c.eq("errored entries", out.errored, 0u);
    c.eq("lemma failures", out.lemmas.failures.size(), 0u);
    for (std::size_t i = 0; i < lemma_count; ++i) {
      auto const id = static_cast<LemmaId>(i);
      c.that(std::string(to_string(id)) + " has an instance", out.lemmas[id].instances > 0);
    }
    c.that("complete", out.lemmas.complete());
  });

  criterion(8, "solubility sweep over builtins and fixtures", 300, [&](Check& c) {
    if (!first) {
      auto const t0 = std::chrono::steady_clock::now();
      first.emplace(sweep(catalog, cfg));
      first_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    c.shared_seconds = first_secs;
    c.that("fixtures included", first->report["entries"].size() > 5);
    std::size_t conj = 0;
    for (auto const& f : first->report["findings"]) {
      conj += f["kind"] == "conjecture_B";
    }
    c.eq("solubility findings", conj, 0u);
    c.eq("findings", first->report["findings"].size(), 0u);
  });

  criterion(9, "two sweeps give byte-identical JSON", 0, [&](Check& c) {
    if (!first) {
      first.emplace(sweep(catalog, cfg));
    }
    auto const second = sweep(catalog, cfg);
    c.that("identical", first->report.dump(2) == second.report.dump(2));
  });

  return failures == 0 ? 0 : 1;
}
