#include <catch_amalgamated.hpp>

#include <random>

#include "csgroups/arith.hpp"
#include "csgroups/classes.hpp"
#include "oracles.hpp"

using namespace csg;

namespace {

  void check_against_oracle(FiniteGroup const& g) {
    auto const prof = conjugacy_classes(g);
    auto const ref  = oracle::classes(g);
    REQUIRE(prof.classes().size() == ref.size());
    std::size_t total = 0;
    for (auto const& c : prof.classes()) {
      total += c.members.size();
      CHECK(c.representative == c.members.front());
      CHECK(std::is_sorted(c.members.begin(), c.members.end()));
      std::set<Elem> const mine(c.members.begin(), c.members.end());
      CHECK(std::find(ref.begin(), ref.end(), mine) != ref.end());
    }
    CHECK(total == g.order());
    CHECK(prof.cs() == oracle::cs(g));
    for (Elem x = 0; x < g.order(); ++x) {
      CHECK(prof.class_of(x).members.size() == prof.class_size_of(x));
      CHECK(prof.class_size_of(x) * prof.centralizer_order_of(x) == g.order());
    }
  }

}  // namespace

TEST_CASE("conjugacy classes match brute force on the small catalog") {
  for (auto const& expr : oracle::small_catalog()) {
    INFO(expr);
    check_against_oracle(oracle::make(expr));
  }
}

TEST_CASE("conjugacy classes match brute force on random permutation groups") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 25; ++t) {
    auto const g = oracle::random_group(rng, 3 + rng() % 5, 1 + rng() % 2, 400);
    INFO("order " << g.order());
    check_against_oracle(g);
  }
}

TEST_CASE("centralizers match brute force and have order |G| / |x^G|") {
  for (auto const& expr : {"sym(4)", "heisext(3)", "quaternion8xcyclic(3)", "frobenius(11,5)"}) {
    INFO(expr);
    auto const g    = oracle::make(expr);
    auto const prof = conjugacy_classes(g);
    for (Elem x = 0; x < g.order(); ++x) {
      auto const c = centralizer(g, x);
      auto const v = c.indices<Elem>();
      CHECK(std::set<Elem>(v.begin(), v.end()) == oracle::centralizer(g, x));
      CHECK(c.count() == prof.centralizer_order_of(x));
    }
  }
}

TEST_CASE("cs examples") {
  // Abelian groups have cs = {1}.
  CHECK(conjugacy_classes(cyclic(12)).cs() == std::vector<std::uint64_t>{1});
  // Also checked against the brute-force oracle.
  CHECK(conjugacy_classes(symmetric(3)).cs() == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(conjugacy_classes(alternating(5)).cs() == std::vector<std::uint64_t>{1, 12, 15, 20});
  auto const q8f21 = oracle::make("q8xF21");
  CHECK(conjugacy_classes(q8f21).cs() == std::vector<std::uint64_t>{1, 2, 3, 6, 7, 14});
  CHECK(oracle::cs(q8f21) == conjugacy_classes(q8f21).cs());
}

TEST_CASE("primary decomposition: commuting prime-power parts whose product is x") {
  std::mt19937_64 rng(9);
  for (auto const& expr : {"sym(5)", "frobenius(7,3)xcyclic(4)", "heisext(3)"}) {
    INFO(expr);
    auto const g = oracle::make(expr);
    for (Elem x = 0; x < g.order(); ++x) {
      auto const parts = primary_decomposition(g, x);
      CHECK(parts.size() == prime_divisors(g.order_of(x)).size());
      Elem product = 0;
      std::uint64_t last = 0;
      for (auto const& p : parts) {
        CHECK(p.of_element == x);
        CHECK(p.prime > last);
        last = p.prime;
        CHECK(g.order_of(p.part) == p_part(g.order_of(x), p.prime));
        CHECK(g.mul(p.part, x) == g.mul(x, p.part));
        for (auto const& q : parts) {
          CHECK(g.mul(p.part, q.part) == g.mul(q.part, p.part));
        }
        product = g.mul(product, p.part);
      }
      CHECK(product == x);
    }
  }
}

TEST_CASE("composite split partitions cs minus 1") {
  auto const s = composite_split(std::vector<std::uint64_t>{1, 2, 4, 60});
  CHECK(s.primes == std::set<std::uint64_t>{2});
  CHECK(s.composites == std::set<std::uint64_t>{4, 60});
  auto const t = composite_split(std::vector<std::uint64_t>{1});
  CHECK(t.primes.empty());
  CHECK(t.composites.empty());
}

TEST_CASE("arithmetic helpers agree with trial division") {
  auto brute_prime = [](std::uint64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d < n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  };
  for (std::uint64_t n = 0; n <= 2000; ++n) {
    INFO(n);
    CHECK(is_prime(n) == brute_prime(n));
    CHECK(is_composite(n) == (n > 1 && !brute_prime(n)));
    if (n == 0) {
      continue;
    }
    std::set<std::uint64_t> ps;
    for (std::uint64_t d = 2; d <= n; ++d) {
      if (n % d == 0 && brute_prime(d)) {
        ps.insert(d);
      }
    }
    CHECK(prime_divisors(n) == ps);
    auto const prof = arithmetic_profile(n);
    CHECK(prof.primes() == ps);
    std::uint64_t rebuilt = 1;
    for (auto [p, e] : prof.prime_factors) {
      rebuilt *= ipow(p, e);
      CHECK(prof.p_part.at(p) == p_part(n, p));
    }
    CHECK(rebuilt == n);
    std::uint64_t q = 0;
    unsigned      e = 0;
    CHECK(is_prime_power(n, &q, &e) == (ps.size() == 1));
    if (ps.size() == 1) {
      CHECK(ipow(q, e) == n);
    }
    CHECK(is_pi_number(n, ps));
  }
}
