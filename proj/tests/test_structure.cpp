#include <catch_amalgamated.hpp>

#include "csgroups/errors.hpp"
#include "csgroups/structure.hpp"
#include "oracles.hpp"

using namespace csg;

namespace {

  // Groups small enough for the full subgroup lattice.
  std::vector<std::string> lattice_catalog() {
    return {"cyclic(1)",  "cyclic(6)",      "dihedral(2)",     "sym(3)",          "dihedral(4)",
            "quaternion8", "alt(4)",        "dihedral(6)",     "frobenius(5,2)",  "frobenius(7,3)",
            "sym(4)",      "extraspecial(3)", "sym(3)xcyclic(2)", "quaternion8xcyclic(3)",
            "dihedral(4)xcyclic(2)", "heisext(3)", "dihedral(9)"};
  }

}  // namespace

TEST_CASE("center and derived subgroup match brute force") {
  for (auto const& expr : oracle::small_catalog()) {
    INFO(expr);
    auto const g = oracle::make(expr);
    CHECK(oracle::members(center(g)) == oracle::center(g));
    CHECK(oracle::members(derived_subgroup(g, whole_group(g))) == oracle::derived(g));
    auto const ds = derived_series(g);
    CHECK(ds.soluble == oracle::soluble(g));
    CHECK(ds.series.front().order() == g.order());
    for (std::size_t i = 1; i < ds.series.size(); ++i) {
      CHECK(ds.series[i].members.is_subset_of(ds.series[i - 1].members));
      CHECK(is_normal(g, ds.series[i]));
    }
  }
  CHECK_FALSE(derived_series(alternating(5)).soluble);
  CHECK_FALSE(oracle::soluble(alternating(5)));
}

TEST_CASE("Sylow subgroups have full p-part order and O_p is their intersection") {
  for (auto const& expr : lattice_catalog()) {
    INFO(expr);
    auto const g = oracle::make(expr);
    for (auto p : prime_divisors(g.order())) {
      INFO("p = " << p);
      auto const s = sylow(g, p);
      CHECK(s.order() == oracle::p_part_of(g.order(), p));
      CHECK(oracle::members(core_p(g, p)) == oracle::core_p(g, p));
      auto const n = oracle::sylow_count(g, p);
      CHECK(n % p == 1);
      CHECK(g.order() % n == 0);
    }
    CHECK(sylow(g, 101).order() == 1);
  }
}

TEST_CASE("Fitting subgroup matches brute force and F2/F is the Fitting subgroup of G/F") {
  for (auto const& expr : lattice_catalog()) {
    INFO(expr);
    auto const g = oracle::make(expr);
    auto const f = fitting(g);
    CHECK(oracle::members(f) == oracle::fitting(g));
    auto const f2 = fitting2(g);
    CHECK(f.members.is_subset_of(f2.members));
    CHECK(is_normal(g, f2));
    auto const q = quotient(g, f);
    CHECK(q.image.order() * f.order() == g.order());
    CHECK(fitting(q.image).order() * f.order() == f2.order());
  }
}

TEST_CASE("normal subgroup enumeration is complete") {
  for (auto const& expr : lattice_catalog()) {
    INFO(expr);
    auto const               g = oracle::make(expr);
    std::set<std::set<Elem>> mine;
    std::size_t              last = 0;
    for (auto const& n : normal_subgroups(g)) {
      CHECK(n.order() >= last);
      last = n.order();
      mine.insert(oracle::members(n));
    }
    CHECK(mine == oracle::normal_subgroups(g));
  }
  CHECK_THROWS_AS(normal_subgroups(oracle::make("cyclic(2)xcyclic(2)xcyclic(2)xcyclic(2)"), 5),
                  LimitExceeded);
}

TEST_CASE("Frobenius detection agrees with the classical definition") {
  for (auto const& expr : lattice_catalog()) {
    INFO(expr);
    auto const g        = oracle::make(expr);
    bool const expected = oracle::frobenius(g);
    auto const fast     = is_frobenius(g, FrobeniusSearch::fitting_only);
    auto const full     = is_frobenius(g, FrobeniusSearch::exhaustive);
    CHECK(fast.is_frobenius == expected);
    CHECK(full.is_frobenius == expected);
    if (fast.is_frobenius) {
      REQUIRE(fast.kernel);
      CHECK(is_frobenius_kernel(g, *fast.kernel));
      CHECK(*fast.kernel == fitting(g));
      if (fast.complement) {
        CHECK(fast.complement->order() * fast.kernel->order() == g.order());
      }
    }
  }
  CHECK(is_frobenius(oracle::make("frobenius(7,3)")).is_frobenius);
  CHECK(is_frobenius(oracle::make("alt(4)")).is_frobenius);
  CHECK_FALSE(is_frobenius(oracle::make("quaternion8")).is_frobenius);
  CHECK_FALSE(is_frobenius(oracle::make("cyclic(6)")).is_frobenius);
}

TEST_CASE("nilpotency class") {
  CHECK(nilpotency_class(cyclic(1)) == 0);
  CHECK(nilpotency_class(cyclic(5)) == 1);
  CHECK(nilpotency_class(quaternion8()) == 2);
  CHECK(nilpotency_class(extraspecial(3)) == 2);
  CHECK(nilpotency_class(dihedral(8)) == 3);
  CHECK_THROWS_AS(nilpotency_class(symmetric(3)), NotNilpotent);
  for (auto const& expr : lattice_catalog()) {
    INFO(expr);
    auto const g    = oracle::make(expr);
    auto const subs = oracle::all_subgroups(g);
    CHECK(is_nilpotent(g) == oracle::nilpotent_subgroup(subs, whole_group(g)));
  }
}

TEST_CASE("quotients require a normal subgroup") {
  auto const g = symmetric(4);
  auto const v = core_p(g, 2);
  REQUIRE(v.order() == 4);
  auto const q = quotient(g, v);
  CHECK(q.image.order() == 6);
  CHECK(oracle::cs(q.image) == oracle::Sizes{1, 2, 3});
  CHECK_THROWS_AS(quotient(g, sylow(g, 3)), ParameterError);
}

TEST_CASE("stripping abelian direct factors") {
  auto const g = oracle::make("sym(3)xcyclic(6)");
  auto const s = strip_abelian_factors(g);
  CHECK(s.abelian.order() == 6);
  CHECK(s.core.order() == 6);
  CHECK(is_direct_product(g, s.core, s.abelian));
  CHECK(oracle::cs(as_group(g, s.core)) == oracle::Sizes{1, 2, 3});

  // The center of Q8 is not a direct factor.
  auto const q = quaternion8();
  auto const t = strip_abelian_factors(q);
  CHECK(t.abelian.order() == 1);
  CHECK(t.core.order() == 8);

  auto const h = oracle::make("quaternion8xcyclic(3)");
  auto const u = strip_abelian_factors(h);
  CHECK(u.abelian.order() == 3);
  CHECK(is_direct_product(h, u.core, u.abelian));
  CHECK_FALSE(is_direct_product(h, sylow(h, 2), sylow(h, 2)));
}

TEST_CASE("Hall subgroups") {
  auto const g = oracle::make("frobenius(7,3)xsym(3)");
  for (std::set<std::uint64_t> pi : {std::set<std::uint64_t>{2, 3}, {3, 7}, {2, 7}, {7}}) {
    auto const h = hall(g, pi);
    REQUIRE(h.has_value());
    std::uint64_t want = 1;
    for (auto p : pi) {
      want *= oracle::p_part_of(g.order(), p);
    }
    CHECK(h->order() == want);
    for (Elem x : h->members.indices<Elem>()) {
      CHECK(is_pi_element(g, x, pi));
    }
  }
  // A5 has no subgroup of order 15.
  CHECK_FALSE(hall(alternating(5), {3, 5}).has_value());
}

TEST_CASE("Analysis memoises and agrees with the free functions") {
  auto const g = oracle::make("heisext(3)");
  Analysis   a(g);
  CHECK(a.center() == center(g));
  CHECK(a.fitting() == fitting(g));
  CHECK(a.fitting2() == fitting2(g));
  CHECK(a.sylow(3).order() == 27);
  CHECK(&a.sylow(3) == &a.sylow(3));
  CHECK(a.profile().cs() == conjugacy_classes(g).cs());
  CHECK(a.soluble());
  auto const r = a.report();
  CHECK(r.sylows.size() == 2);
  CHECK_FALSE(r.nilpotency_class.has_value());
}
