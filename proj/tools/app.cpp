#include "app.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <ostream>
#include <set>
#include <thread>

#include "csgroups/errors.hpp"

namespace csg::app {

  using nlohmann::json;

  namespace {

    std::size_t factorial(std::size_t n) {
      std::size_t r = 1;
      for (std::size_t i = 2; i <= n; ++i) {
        r *= i;
      }
      return r;
    }

    std::size_t spec_order(GroupSpec const& s) {
      auto const p = [&](std::size_t i) { return static_cast<std::size_t>(s.params.at(i)); };
      switch (s.kind) {
        case GroupKind::cyclic:
          return p(0);
        case GroupKind::symmetric:
          return factorial(p(0));
        case GroupKind::alternating:
          return p(0) < 2 ? 1 : factorial(p(0)) / 2;
        case GroupKind::dihedral:
          return 2 * p(0);
        case GroupKind::quaternion8:
          return 8;
        case GroupKind::extraspecial_p3:
          return p(0) * p(0) * p(0);
        case GroupKind::frobenius_pq:
          return p(0) * p(1);
        case GroupKind::direct_product: {
          std::size_t r = 1;
          for (auto const& c : s.children) {
            r *= spec_order(c);
          }
          return r;
        }
        case GroupKind::semidirect_product:
          return 2 * p(0) * p(0) * p(0);
        default:
          return 0;
      }
    }

    GroupSpec leaf(GroupKind k, std::vector<std::int64_t> params = {}) {
      GroupSpec s;
      s.kind   = k;
      s.params = std::move(params);
      return s;
    }

    GroupSpec product(GroupSpec const& a, GroupSpec const& b) {
      GroupSpec s;
      s.kind     = GroupKind::direct_product;
      s.children = {a, b};
      return s;
    }

    Target builtin_target(GroupSpec spec) {
      Target t;
      t.name   = spec.to_string();
      t.source = "builtin:" + t.name;
      t.spec   = std::move(spec);
      return t;
    }

    json witness_json(WitnessValue const& w) {
      return std::visit([](auto const& v) { return json(v); }, w);
    }

    double ms_since(std::chrono::steady_clock::time_point t0) {
      auto const us =
          std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0)
              .count();
      return static_cast<double>(us) / 1000.0;
    }

    std::string csv_field(std::string const& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string o = "\"";
      for (char c : s) {
        o += c == '"' ? std::string("\"\"") : std::string(1, c);
      }
      return o + "\"";
    }

    std::string joined(json const& arr) {
      std::string o;
      if (!arr.is_array()) {
        return o;
      }
      for (std::size_t i = 0; i < arr.size(); ++i) {
        o += (i ? ";" : "") + std::to_string(arr[i].get<std::uint64_t>());
      }
      return o;
    }

  }  // namespace

  json Config::echo() const {
    return {{"max_elements", max_elements},
            {"max_normal_subgroups", max_normal_subgroups},
            {"pair_sample_seed", pair_sample_seed},
            {"format", format},
            {"jobs", jobs},
            {"fixtures", fixtures.string()},
            {"timings", timings},
            {"lemmas", lemmas},
            {"builtins", builtins},
            {"grid", grid}};
  }

  std::filesystem::path default_fixture_dir() {
    if (char const* env = std::getenv("CSGROUPS_FIXTURE_DIR"); env != nullptr && *env != '\0') {
      return env;
    }
#ifdef CSGROUPS_DEFAULT_FIXTURE_DIR
    return CSGROUPS_DEFAULT_FIXTURE_DIR;
#else
    return "fixtures";
#endif
  }

  Target resolve_target(std::string const& text, std::filesystem::path const& fixture_dir) {
    auto const starts = [&](std::string_view p) { return text.rfind(p, 0) == 0; };
    if (starts("builtin:")) {
      return builtin_target(parse_builtin(text.substr(8)));
    }
    std::string rest = text;
    if (starts("fixture:")) {
      rest = text.substr(8);
    } else if (!std::filesystem::is_regular_file(text)) {
      return builtin_target(parse_builtin(text));
    }
    if (rest.empty()) {
      throw ParameterError("empty fixture name");
    }
    std::filesystem::path path = rest;
    bool const explicit_path = rest.find('/') != std::string::npos || path.extension() == ".txt";
    if (!explicit_path) {
      path = fixture_dir / (rest + ".txt");
    }
    Target t;
    t.name   = path.stem().string();
    t.source = "fixture:" + (explicit_path ? rest : t.name);
    t.path   = path;
    return t;
  }

  FiniteGroup load_target(Target const& t, Config const& cfg) {
    if (t.spec) {
      return build(*t.spec, cfg.max_elements);
    }
    if (!t.path) {
      throw ParameterError("target " + t.name + " has neither a spec nor a path");
    }
    FiniteGroup g = load_fixture(*t.path, cfg.max_elements);
    return g;
  }

  std::vector<Target> builtin_grid(std::string const& grid, std::size_t max_elements) {
    if (grid == "none") {
      return {};
    }
    if (grid != "default" && grid != "full" && grid != "small") {
      throw ParameterError("unknown grid '" + grid + "' (expected default, full, small or none)");
    }
    std::size_t const cap = grid == "small" ? std::min<std::size_t>(max_elements, 200) : max_elements;

    std::vector<GroupSpec> leaves;
    for (std::int64_t n = 1; n <= 120; ++n) {
      leaves.push_back(leaf(GroupKind::cyclic, {n}));
    }
    for (std::int64_t n = 1; n <= 60; ++n) {
      leaves.push_back(leaf(GroupKind::dihedral, {n}));
    }
    for (std::int64_t n = 1; n <= 5; ++n) {
      leaves.push_back(leaf(GroupKind::symmetric, {n}));
      leaves.push_back(leaf(GroupKind::alternating, {n}));
    }
    leaves.push_back(leaf(GroupKind::quaternion8));
    leaves.push_back(leaf(GroupKind::extraspecial_p3, {3}));
    leaves.push_back(leaf(GroupKind::extraspecial_p3, {5}));
    for (auto [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {3, 2}, {5, 2}, {7, 2}, {7, 3}, {11, 2}, {11, 5}, {13, 3}}) {
      leaves.push_back(leaf(GroupKind::frobenius_pq, {p, q}));
    }
    // The smallest group here with a prime-power composite class size whose
    // Sylow subgroup has class two; it reaches Theorem C case (c).
    GroupSpec heis = leaf(GroupKind::semidirect_product, {3});
    heis.children  = {leaf(GroupKind::extraspecial_p3, {3}), leaf(GroupKind::cyclic, {2})};

    std::vector<GroupSpec> specs = leaves;
    specs.push_back(heis);
    auto const abelian = [](GroupSpec const& s) {
      switch (s.kind) {
        case GroupKind::cyclic:
          return true;
        case GroupKind::dihedral:
        case GroupKind::symmetric:
          return s.params[0] <= 2;
        case GroupKind::alternating:
          return s.params[0] <= 3;
        default:
          return false;
      }
    };
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      for (std::size_t j = i; j < leaves.size(); ++j) {
        GroupSpec const&  x = leaves[i];
        GroupSpec const&  y = leaves[j];
        std::size_t const a = spec_order(x), b = spec_order(y);
        if (a <= 1 || b <= 1 || a * b > cap) {
          continue;
        }
        if (grid != "full") {
          // An abelian direct factor leaves cs unchanged, so beyond the
          // nonabelian pairs only small abelian factors are kept, and
          // abelian pairs only in invariant-factor form C_a x C_b, a | b.
          bool const ax = abelian(x), ay = abelian(y);
          bool const cyclic_pair =
              x.kind == GroupKind::cyclic && y.kind == GroupKind::cyclic && b % a == 0;
          if (ax && ay && !(cyclic_pair && a * b <= 120)) {
            continue;
          }
          if (ax != ay) {
            GroupSpec const&  f  = ax ? x : y;
            std::size_t const fo = ax ? a : b;
            if (f.kind != GroupKind::cyclic || fo > 12) {
              continue;
            }
          }
        }
        specs.push_back(product(x, y));
      }
    }

    std::vector<Target> out;
    std::set<std::string> names;
    for (auto& s : specs) {
      std::size_t const n = spec_order(s);
      if (n == 0 || n > cap) {
        continue;
      }
      Target t = builtin_target(std::move(s));
      if (names.insert(t.name).second) {
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  std::vector<Target> fixture_catalog(std::filesystem::path const& dir) {
    std::vector<Target> out;
    std::error_code     ec;
    if (!std::filesystem::is_directory(dir, ec)) {
      return out;
    }
    std::vector<std::filesystem::path> files;
    for (auto const& e : std::filesystem::directory_iterator(dir, ec)) {
      if (e.path().extension() == ".txt") {
        files.push_back(e.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (auto const& f : files) {
      Target t;
      t.name   = f.stem().string();
      t.source = "fixture:" + f.filename().string();
      t.path   = f;
      out.push_back(std::move(t));
    }
    return out;
  }

  std::vector<Target> sweep_catalog(Config const& cfg) {
    std::vector<Target> out;
    if (cfg.builtins) {
      out = builtin_grid(cfg.grid, cfg.max_elements);
    }
    if (!cfg.fixtures.empty()) {
      auto fx = fixture_catalog(cfg.fixtures);
      out.insert(out.end(), fx.begin(), fx.end());
    }
    return out;
  }

  json verdict_json(TheoremVerdict const& v) {
    json clauses = json::array();
    for (auto const& c : v.conclusions) {
      clauses.push_back({{"label", c.label}, {"passed", c.passed}, {"detail", c.detail}});
    }
    json w = json::object();
    for (auto const& [k, val] : v.witnesses) {
      w[k] = witness_json(val);
    }
    return {{"outcome", std::string(to_string(v.outcome()))},
            {"applies", v.applies},
            {"reason", v.reason},
            {"clauses", clauses},
            {"witnesses", w}};
  }

  json lemma_json(LemmaReport const& r) {
    json lemmas = json::object();
    for (std::size_t i = 0; i < lemma_count; ++i) {
      auto const        id = static_cast<LemmaId>(i);
      LemmaTally const& t  = r[id];
      lemmas[std::string(to_string(id))] = {{"instances", t.instances},
                                            {"failures", t.failures},
                                            {"skipped", t.skipped},
                                            {"skip_reasons", t.skip_reasons}};
    }
    json failures = json::array();
    for (auto const& f : r.failures) {
      failures.push_back({{"lemma", std::string(to_string(f.lemma))},
                          {"group", f.group},
                          {"elements", f.elements},
                          {"detail", f.detail}});
    }
    return {{"groups", r.groups}, {"lemmas", lemmas}, {"failures", failures}, {"complete", r.complete()}};
  }

  EntryResult analyse(Target const& t, Config const& cfg, bool with_structure) {
    using clock = std::chrono::steady_clock;
    EntryResult r;
    json&       e = r.entry;
    e["name"]     = t.name;
    e["source"]   = t.source;
    json timings  = json::object();

    auto const t0 = clock::now();
    std::optional<FiniteGroup> g;
    try {
      g.emplace(load_target(t, cfg));
    } catch (Error const& ex) {
      r.errored     = true;
      r.incomplete  = dynamic_cast<OrderCapExceeded const*>(&ex) != nullptr;
      e["error"]    = ex.what();
      e["order"]    = nullptr;
      e["timings_ms"] = nullptr;
      return r;
    }
    timings["build"] = ms_since(t0);
    r.order          = g->order();

    Analysis   a(*g, cfg.max_normal_subgroups);
    auto const t1    = clock::now();
    auto const& cs   = a.profile().cs();
    auto const& sp   = a.split();
    timings["classes"] = ms_since(t1);

    e["order"]           = g->order();
    e["degree"]          = g->degree();
    e["cs"]              = cs;
    e["class_count"]     = a.profile().classes().size();
    e["primes"]          = sp.primes;
    e["composites"]      = sp.composites;
    e["composite_count"] = sp.composites.size();
    e["error"]           = nullptr;

    auto const t2 = clock::now();
    e["soluble"]  = a.soluble();
    if (with_structure) {
      json s;
      try {
        StructureReport const rep = a.report();
        json                  series = json::array();
        for (auto const& d : rep.derived.series) {
          series.push_back(d.order());
        }
        json sylows = json::object();
        for (auto const& [p, sub] : rep.sylows) {
          sylows[std::to_string(p)] = sub.order();
        }
        s = {{"center", rep.center.order()},
             {"derived_series", series},
             {"fitting", rep.fitting.order()},
             {"fitting2", rep.fitting2.order()},
             {"sylow", sylows},
             {"nilpotency_class", rep.nilpotency_class ? json(*rep.nilpotency_class) : json()}};
        AbelianSplit const& st = a.stripped();
        s["abelian_factor"]    = st.abelian.order();
        s["core"]              = st.core.order();
      } catch (LimitExceeded const& ex) {
        s["incomplete"] = ex.what();
        r.incomplete    = true;
      }
      e["structure"] = s;
    }

    json th = json::object();
    auto record = [&](std::string const& key, TheoremVerdict const& v) {
      th[key] = verdict_json(v);
      if (v.outcome() == Outcome::fail) {
        r.failed = true;
        json bad = json::array();
        for (auto const& c : v.conclusions) {
          if (!c.passed) {
            bad.push_back(c.label);
          }
        }
        r.findings.push_back(
            {{"kind", "theorem_failure"}, {"entry", t.name}, {"theorem", key}, {"clauses", bad}});
      } else if (v.outcome() == Outcome::incomplete) {
        r.incomplete = true;
        r.findings.push_back(
            {{"kind", "incomplete"}, {"entry", t.name}, {"theorem", key}, {"reason", v.reason}});
      }
    };
    record("A", check_theorem_A(a));
    record("C", check_theorem_C(a));
    record("CH", check_zero_composite_dichotomy(a));
    e["theorems"] = th;

    TheoremVerdict const b = check_conjecture_B(a);
    if (b.outcome() == Outcome::fail) {
      r.findings.push_back({{"kind", "conjecture_B"},
                            {"entry", t.name},
                            {"cs", cs},
                            {"detail", b.conclusions.front().detail}});
    }
    timings["theorems"] = ms_since(t2);

    if (cfg.lemmas) {
      auto const t3 = clock::now();
      LemmaOptions opts;
      opts.seed = cfg.pair_sample_seed;
      r.lemmas  = lemma_suite(a, opts);
      for (auto const& f : r.lemmas->failures) {
        r.failed = true;
        r.findings.push_back({{"kind", "lemma_failure"},
                              {"entry", t.name},
                              {"lemma", std::string(to_string(f.lemma))},
                              {"elements", f.elements},
                              {"detail", f.detail}});
      }
      timings["lemmas"] = ms_since(t3);
    }
    e["timings_ms"] = cfg.timings ? timings : json();
    return r;
  }

  SweepOutcome sweep(std::vector<Target> const& targets, Config const& cfg) {
    std::vector<EntryResult> results(targets.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < targets.size(); i = next++) {
        try {
          results[i] = analyse(targets[i], cfg);
        } catch (std::exception const& ex) {
          results[i].errored         = true;
          results[i].entry           = {{"name", targets[i].name},
                                        {"source", targets[i].source},
                                        {"order", nullptr},
                                        {"error", ex.what()},
                                        {"timings_ms", nullptr}};
        }
      }
    };
    unsigned jobs = cfg.jobs != 0 ? cfg.jobs : std::max(1U, std::thread::hardware_concurrency());
    jobs          = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, targets.size())));
    if (jobs <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < jobs; ++j) {
        pool.emplace_back(worker);
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    std::vector<std::size_t> order(results.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return std::tie(results[x].order, targets[x].name) < std::tie(results[y].order, targets[y].name);
    });

    SweepOutcome out;
    json entries  = json::array();
    json findings = json::array();
    std::map<std::string, std::size_t> shapes;
    for (std::size_t i : order) {
      auto& r = results[i];
      if (r.errored) {
        ++out.errored;
      } else {
        std::string const key = "cs=" + std::to_string(r.entry["cs"].size()) + ",composites="
                              + std::to_string(r.entry["composite_count"].get<std::size_t>());
        ++shapes[key];
      }
      if (r.lemmas) {
        out.lemmas.merge(*r.lemmas);
      }
      for (auto& f : r.findings) {
        findings.push_back(std::move(f));
      }
      entries.push_back(std::move(r.entry));
    }
    json& rep        = out.report;
    rep["version"]   = version;
    rep["config"]    = cfg.echo();
    rep["entries"]   = std::move(entries);
    rep["findings"]  = std::move(findings);
    rep["summary"]   = {{"entries", targets.size()}, {"errored", out.errored}, {"shapes", shapes}};
    if (cfg.lemmas) {
      rep["lemmas"] = lemma_json(out.lemmas);
    }
    return out;
  }

  void write_csv(std::ostream& out, json const& report) {
    out << "name,source,order,cs,primes,composites,soluble,A,C,CH,error\n";
    for (auto const& e : report.at("entries")) {
      auto str = [&](char const* k) {
        return e.contains(k) && e[k].is_string() ? e[k].get<std::string>() : std::string();
      };
      auto outcome = [&](char const* k) {
        return e.contains("theorems") ? e["theorems"][k]["outcome"].get<std::string>() : std::string();
      };
      out << csv_field(str("name")) << ',' << csv_field(str("source")) << ','
          << (e["order"].is_null() ? std::string() : std::to_string(e["order"].get<std::uint64_t>()))
          << ',' << joined(e.value("cs", json())) << ',' << joined(e.value("primes", json())) << ','
          << joined(e.value("composites", json())) << ','
          << (e.contains("soluble") ? (e["soluble"].get<bool>() ? "true" : "false") : "") << ','
          << outcome("A") << ',' << outcome("C") << ',' << outcome("CH") << ',' << csv_field(str("error"))
          << '\n';
    }
  }

}  // namespace csg::app
