#include <catch_amalgamated.hpp>

#include "csgroups/errors.hpp"
#include "csgroups/theorems.hpp"
#include "oracles.hpp"

using namespace csg;

namespace {

  std::filesystem::path const fixtures = CSGROUPS_TEST_FIXTURES;

  std::uint64_t num(TheoremVerdict const& v, std::string const& key) {
    INFO("witness " << key);
    REQUIRE(v.witnesses.count(key) == 1);
    return std::get<std::uint64_t>(v.witnesses.at(key));
  }

  std::string str(TheoremVerdict const& v, std::string const& key) {
    INFO("witness " << key);
    REQUIRE(v.witnesses.count(key) == 1);
    return std::get<std::string>(v.witnesses.at(key));
  }

  oracle::Sizes list(TheoremVerdict const& v, std::string const& key) {
    INFO("witness " << key);
    REQUIRE(v.witnesses.count(key) == 1);
    return std::get<std::vector<std::uint64_t>>(v.witnesses.at(key));
  }

  void all_clauses_pass(TheoremVerdict const& v) {
    CHECK_FALSE(v.conclusions.empty());
    for (auto const& c : v.conclusions) {
      INFO(c.label << ": " << c.detail);
      CHECK(c.passed);
    }
  }

}  // namespace

TEST_CASE("two-composite structure theorem on quaternion8 x frobenius(7,3)") {
  auto const g = oracle::make("q8xF21");
  Analysis   a(g);
  CHECK(a.profile().cs() == oracle::Sizes{1, 2, 3, 6, 7, 14});
  auto const v = check_theorem_A(a);
  REQUIRE(v.applies);
  CHECK(v.outcome() == Outcome::pass);
  all_clauses_pass(v);
  CHECK(num(v, "shared_prime") == 2);
  CHECK(num(v, "left_prime") == 3);
  CHECK(num(v, "right_prime") == 7);
  CHECK(num(v, "left_composite") == 6);
  CHECK(num(v, "right_composite") == 14);
  CHECK(num(v, "p_factor_order") == 8);
  CHECK(num(v, "p_factor_class") == 2);
  CHECK(list(v, "p_factor_cs") == oracle::Sizes{1, 2});
  CHECK(num(v, "complement_order") == 21);
  CHECK(list(v, "complement_cs") == oracle::Sizes{1, 3, 7});
  CHECK(num(v, "complement_center_order") == 1);
  CHECK(num(v, "complement_frobenius_kernel_order") == 7);
}

TEST_CASE("two-composite structure theorem survives an abelian direct factor") {
  auto const g = oracle::make("q8xF21xcyclic(2)");
  Analysis   a(g);
  auto const v = check_theorem_A(a);
  REQUIRE(v.applies);
  CHECK(v.outcome() == Outcome::pass);
  CHECK(num(v, "abelian_factor_order") == 2);
  CHECK(num(v, "core_order") == 168);
}

TEST_CASE("theorems report not applicable outside their hypotheses") {
  auto const s3 = symmetric(3);
  Analysis   a(s3);
  CHECK(check_theorem_A(a).outcome() == Outcome::not_applicable);
  CHECK(check_theorem_C(a).outcome() == Outcome::not_applicable);
  CHECK(check_conjecture_B(a).outcome() == Outcome::not_applicable);

  auto const c6 = cyclic(6);
  Analysis   b(c6);
  auto const ch = check_zero_composite_dichotomy(b);
  CHECK(ch.outcome() == Outcome::not_applicable);
  CHECK(ch.reason == "abelian");

  // A5 has three composite class sizes, so none of the two-composite
  // statements apply.
  auto const a5 = alternating(5);
  Analysis   c(a5);
  CHECK(check_theorem_A(c).outcome() == Outcome::not_applicable);
  CHECK(check_theorem_C(c).outcome() == Outcome::not_applicable);
  CHECK(check_zero_composite_dichotomy(c).outcome() == Outcome::not_applicable);
  CHECK(check_conjecture_B(c).outcome() == Outcome::not_applicable);
}

TEST_CASE("prime-power case analysis on the shipped fixtures") {
  SECTION("order 480: composite 4 = 2^2 beside 60") {
    auto const g = load_fixture(fixtures / "g480_166.txt");
    Analysis   a(g);
    CHECK(a.profile().cs() == oracle::Sizes{1, 2, 4, 60});
    CHECK(a.split().primes == std::set<std::uint64_t>{2});
    CHECK(a.split().composites == std::set<std::uint64_t>{4, 60});
    auto const v = check_theorem_C(a);
    REQUIRE(v.applies);
    CHECK(v.outcome() == Outcome::pass);
    CHECK(str(v, "case") == "a");
    CHECK(num(v, "prime") == 2);
    CHECK(num(v, "exponent") == 2);
    CHECK(num(v, "other_size") == 60);
    CHECK(list(v, "other_size_primes") == oracle::Sizes{2, 3, 5});
  }
  SECTION("order 160: 32 = 2^5 beside 20") {
    auto const g = load_fixture(fixtures / "g160_234.txt");
    Analysis   a(g);
    CHECK(a.profile().cs() == oracle::Sizes{1, 5, 20, 32});
    auto const v = check_theorem_C(a);
    REQUIRE(v.applies);
    CHECK(v.outcome() == Outcome::pass);
    CHECK(str(v, "case") == "b");
    CHECK(num(v, "other_size") == 20);
    CHECK(num(v, "f2_index") == 2);
    CHECK(num(v, "second_prime") == 5);
  }
  SECTION("order 486 and 162: 27 = 3^3 beside 18 and 6") {
    for (auto const& [name, other, cs] :
         {std::tuple{"g486_176", 18, oracle::Sizes{1, 2, 3, 18, 27}},
          std::tuple{"g162_5", 6, oracle::Sizes{1, 2, 3, 6, 27}}}) {
      INFO(name);
      auto const g = load_fixture(fixtures / (std::string(name) + ".txt"));
      Analysis   a(g);
      CHECK(a.profile().cs() == cs);
      auto const v = check_theorem_C(a);
      REQUIRE(v.applies);
      CHECK(v.outcome() == Outcome::pass);
      CHECK(str(v, "case") == "c");
      CHECK(num(v, "prime") == 3);
      CHECK(num(v, "other_size") == static_cast<std::uint64_t>(other));
    }
  }
}

TEST_CASE("the zero-composite dichotomy holds on every small nonabelian group") {
  std::size_t applied = 0;
  for (auto const& expr : oracle::small_catalog()) {
    INFO(expr);
    auto const g = oracle::make(expr);
    Analysis   a(g);
    auto const v = check_zero_composite_dichotomy(a);
    if (!v.applies) {
      continue;
    }
    ++applied;
    CHECK(v.outcome() == Outcome::pass);
  }
  CHECK(applied >= 5);

  auto const q8 = quaternion8();
  Analysis   aq(q8);
  auto const vq = check_zero_composite_dichotomy(aq);
  CHECK(str(vq, "branch") == "p-group");
  CHECK(num(vq, "prime") == 2);

  for (auto const& expr : {"sym(3)", "frobenius(7,3)"}) {
    auto const g = oracle::make(expr);
    Analysis   a(g);
    auto const v = check_zero_composite_dichotomy(a);
    CHECK(v.outcome() == Outcome::pass);
    CHECK(str(v, "branch") == "frobenius");
    CHECK(num(v, "central_quotient") == g.order());
  }
}

TEST_CASE("solubility check on two-composite groups") {
  auto const g = oracle::make("q8xF21");
  Analysis   a(g);
  auto const v = check_conjecture_B(a);
  CHECK(v.applies);
  CHECK(v.outcome() == Outcome::pass);
}

TEST_CASE("class sizes of PSL(2, 2^a)") {
  // cs(PSL(2, 2^a)) = {1, 2^2a - 1, 2^a (2^a - 1), 2^a (2^a + 1)}
  CHECK(psl_formula_sizes(2) == oracle::Sizes{1, 12, 15, 20});
  CHECK(psl_formula_sizes(3) == oracle::Sizes{1, 56, 63, 72});
  CHECK(psl_formula_sizes(4) == oracle::Sizes{1, 240, 255, 272});

  auto const a5 = check_psl_formula(2, alternating(5));
  CHECK(a5.outcome() == Outcome::pass);
  CHECK(num(a5, "composite_count") == 3);
  auto const p8 = check_psl_formula(3, fixtures);
  CHECK(p8.outcome() == Outcome::pass);
  all_clauses_pass(p8);

  CHECK(check_psl_formula(2, symmetric(5)).outcome() == Outcome::fail);
  CHECK_THROWS_AS(check_psl_formula(4, fixtures), ParameterError);
}

TEST_CASE("verdict outcomes") {
  TheoremVerdict v;
  CHECK(v.outcome() == Outcome::not_applicable);
  v.applies = true;
  v.conclusions.push_back({"x", true, ""});
  CHECK(v.outcome() == Outcome::pass);
  v.conclusions.push_back({"y", false, ""});
  CHECK(v.outcome() == Outcome::fail);
  CHECK_FALSE(v.passed());
  v.conclusions.pop_back();
  v.incomplete = true;
  CHECK(v.outcome() == Outcome::incomplete);
  CHECK(to_string(Outcome::not_applicable) == "not_applicable");
  CHECK(to_string(TheoremId::CH) == "CH");
}
