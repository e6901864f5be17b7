#include <catch_amalgamated.hpp>

#include "app.hpp"
#include "csgroups/theorems.hpp"
#include "oracles.hpp"

using namespace csg;

namespace {

  std::vector<LemmaId> all_lemmas() {
    std::vector<LemmaId> out;
    for (std::size_t i = 0; i < lemma_count; ++i) {
      out.push_back(static_cast<LemmaId>(i));
    }
    return out;
  }

  bool same_tallies(LemmaReport const& a, LemmaReport const& b) {
    for (auto id : all_lemmas()) {
      if (a[id].instances != b[id].instances || a[id].failures != b[id].failures
          || a[id].skipped != b[id].skipped) {
        return false;
      }
    }
    return a.groups == b.groups;
  }

}  // namespace

TEST_CASE("every lemma has a distinct name and a description") {
  std::set<std::string_view> names;
  for (auto id : all_lemmas()) {
    CHECK_FALSE(to_string(id).empty());
    CHECK_FALSE(describe(id).empty());
    names.insert(to_string(id));
  }
  CHECK(names.size() == lemma_count);
}

TEST_CASE("lemma suite holds on the small catalog") {
  LemmaReport total;
  for (auto const& expr : oracle::small_catalog()) {
    INFO(expr);
    auto const g = oracle::make(expr);
    Analysis   a(g);
    auto const r = lemma_suite(a);
    for (auto const& f : r.failures) {
      UNSCOPED_INFO(to_string(f.lemma) << " on " << f.group << ": " << f.detail);
    }
    CHECK(r.failures.empty());
    total.merge(r);
  }
  CHECK(total.groups == oracle::small_catalog().size());
  CHECK(total.failures.empty());
}

TEST_CASE("lemma suite is complete over the small builtin grid") {
  auto const  targets = app::builtin_grid("small", default_order_cap);
  app::Config cfg;
  LemmaReport total;
  for (auto const& t : targets) {
    auto const g = app::load_target(t, cfg);
    Analysis   a(g);
    total.merge(lemma_suite(a));
  }
  for (auto id : all_lemmas()) {
    INFO(to_string(id));
    CHECK(total[id].instances > 0);
    CHECK(total[id].failures == 0);
  }
  CHECK(total.groups == targets.size());
  CHECK(total.complete());
}

TEST_CASE("sampled pair scans are reproducible for a fixed seed") {
  auto const   g = oracle::make("sym(4)xfrobenius(7,3)");
  LemmaOptions opts;
  opts.pair_budget = 50;
  opts.seed        = 17;
  Analysis   a1(g), a2(g);
  auto const r1 = lemma_suite(a1, opts);
  auto const r2 = lemma_suite(a2, opts);
  CHECK(same_tallies(r1, r2));
  CHECK(r1.failures.empty());
}

TEST_CASE("merge adds tallies and completeness needs every lemma") {
  LemmaReport a, b;
  a[LemmaId::coprime_triple].instances = 2;
  b[LemmaId::coprime_triple].instances = 3;
  b[LemmaId::coprime_triple].failures  = 1;
  b.failures.push_back({LemmaId::coprime_triple, "g", "g", {}, "x"});
  a.groups = 1;
  b.groups = 2;
  a.merge(b);
  CHECK(a[LemmaId::coprime_triple].instances == 5);
  CHECK(a[LemmaId::coprime_triple].failures == 1);
  CHECK(a.failures.size() == 1);
  CHECK(a.groups == 3);
  CHECK_FALSE(a.complete());

  LemmaReport c;
  for (auto id : all_lemmas()) {
    c[id].instances = 1;
  }
  CHECK(c.complete());
  c[LemmaId::minimal_centralizer].instances = 0;
  CHECK_FALSE(c.complete());
}
