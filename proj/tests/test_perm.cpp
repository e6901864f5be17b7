#include <catch_amalgamated.hpp>

#include <random>

#include "csgroups/errors.hpp"
#include "csgroups/group.hpp"
#include "oracles.hpp"

using namespace csg;

namespace {

  Permutation random_perm(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint32_t> im(n);
    for (std::size_t i = 0; i < n; ++i) {
      im[i] = static_cast<std::uint32_t>(i);
    }
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(im);
  }

  std::uint64_t brute_order(Permutation const& p) {
    Permutation q = p;
    std::uint64_t k = 1;
    while (!q.is_identity()) {
      q = compose(q, p);
      ++k;
    }
    return k;
  }

}  // namespace

TEST_CASE("permutations reject non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), InvalidPermutation);
  CHECK_NOTHROW(Permutation({2, 0, 1}));
  CHECK_THROWS_AS(Permutation::from_cycles(4, {{0, 1}, {1, 2}}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 5}}), InvalidPermutation);
}

TEST_CASE("compose applies the right factor first") {
  Permutation const p({1, 2, 0});  // 0->1->2->0
  Permutation const q({1, 0, 2});  // swap 0 1
  Permutation const pq = compose(p, q);
  for (std::uint32_t i = 0; i < 3; ++i) {
    CHECK(pq(i) == p(q(i)));
  }
  CHECK_THROWS_AS(compose(p, Permutation::identity(4)), DegreeMismatch);
}

TEST_CASE("cycle notation is 1-based and round-trips through from_cycles") {
  auto const p = Permutation::from_cycles(6, {{0, 2, 4}, {1, 5}});
  CHECK(p.to_cycle_string() == "(1,3,5)(2,6)");
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
}

TEST_CASE("inverse and element order agree with brute force") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t const n = 1 + rng() % 12;
    auto const        p = random_perm(rng, n);
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(compose(inverse(p), p).is_identity());
    CHECK(element_order(p) == brute_order(p));
  }
}

TEST_CASE("closure enumerates the group and records a Schreier tree") {
  std::vector<Permutation> gens{Permutation({1, 2, 3, 4, 0}), Permutation({1, 0, 2, 3, 4})};
  auto const               t = close(gens, 5);
  CHECK(t.size() == 120);
  CHECK(t[0].is_identity());
  for (Elem i = 1; i < t.size(); ++i) {
    CHECK(t[i] == compose(t[t.parent(i)], t.generators()[t.via(i)]));
  }
  for (Elem i = 0; i < t.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      CHECK(t[t.times_generator(i, s)] == compose(t[i], gens[s]));
    }
  }
  CHECK_THROWS_AS(close(gens, 5, 119), OrderCapExceeded);
  CHECK_THROWS_AS(close({Permutation({1, 0}), Permutation({0, 2, 1})}, 2), DegreeMismatch);
  CHECK(close({}, 3).size() == 1);
}

TEST_CASE("order cap errors report the cap and partial count") {
  std::vector<Permutation> gens{Permutation({1, 2, 3, 4, 5, 0}), Permutation({1, 0, 2, 3, 4, 5})};
  try {
    close(gens, 6, 100);
    FAIL("expected OrderCapExceeded");
  } catch (OrderCapExceeded const& e) {
    CHECK(e.cap() == 100);
    CHECK(e.partial_count() == 101);
  }
}

TEST_CASE("Cayley table, inverses, orders and powers match permutation arithmetic") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 12; ++t) {
    FiniteGroup const g = oracle::random_group(rng, 4 + rng() % 4, 2);
    for (Elem a = 0; a < g.order(); ++a) {
      CHECK(g.inv(a) == oracle::perm_inv(g, a));
      CHECK(g.order_of(a) == element_order(g.element(a)));
      CHECK(g.pow(a, g.order_of(a)) == 0);
      CHECK(g.pow(a, 3) == g.mul(a, g.mul(a, a)));
      auto const row = g.row(a);
      auto const col = g.col(a);
      for (Elem b = 0; b < g.order(); b += 1 + g.order() / 40) {
        CHECK(row[b] == oracle::perm_mul(g, a, b));
        CHECK(col[b] == oracle::perm_mul(g, b, a));
        CHECK(g.conj(a, b) == g.mul(g.inv(b), g.mul(a, b)));
      }
    }
  }
}

TEST_CASE("the multiplication table is associative") {
  std::mt19937_64 rng(5);
  FiniteGroup const g = oracle::random_group(rng, 6, 2);
  for (int t = 0; t < 2000; ++t) {
    Elem const a = rng() % g.order(), b = rng() % g.order(), c = rng() % g.order();
    CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
}
