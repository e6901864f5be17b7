#include "csgroups/theorems.hpp"

#include <algorithm>
#include <numeric>

#include "csgroups/arith.hpp"
#include "csgroups/construct.hpp"
#include "csgroups/errors.hpp"

namespace csg {

  namespace {

    using Sizes = std::vector<std::uint64_t>;

    std::string join_sizes(Sizes const& v) {
      std::string out = "{";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
      }
      return out + "}";
    }

    Sizes sorted(std::initializer_list<std::uint64_t> xs) {
      Sizes v(xs);
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }

    Sizes to_vec(std::set<std::uint64_t> const& s) {
      return {s.begin(), s.end()};
    }

    bool is_power_of(std::uint64_t n, std::uint64_t p) {
      if (n == 0) {
        return false;
      }
      while (n % p == 0) {
        n /= p;
      }
      return n == 1;
    }

    Sizes class_sizes(FiniteGroup const& g) {
      return conjugacy_classes(g).cs();
    }

    struct Decomposition {
      std::vector<Clause>                 clauses;
      std::map<std::string, WitnessValue> witnesses;
      bool                                all_pass = false;
    };

    Decomposition evaluate_decomposition(FiniteGroup const& core,
                                         Subgroup const&    p_part,
                                         Subgroup const&    complement,
                                         std::uint64_t      shared,
                                         std::uint64_t      left,
                                         std::uint64_t      right) {
      Decomposition d;
      FiniteGroup const pg = as_group(core, p_part, core.name() + " p-factor");
      FiniteGroup const hg = as_group(core, complement, core.name() + " complement");

      Sizes const    cs_p    = class_sizes(pg);
      unsigned const cls     = nilpotency_class(pg);
      Sizes const    cs_h    = class_sizes(hg);
      Subgroup const zh      = center(hg);
      auto const     hq      = quotient(hg, zh);
      auto const     frob    = is_frobenius(hq.image);
      bool const     cs_p_ok = cs_p == sorted({1, shared});
      bool const     cls_ok  = cls <= 2;
      bool const     cs_h_ok = cs_h == sorted({1, left, right});
      bool const     frob_ok = frob.is_frobenius && hq.image.order() == left * right;

      d.clauses.push_back({"direct_decomposition", true,
                           "core of order " + std::to_string(core.order()) + " = P("
                               + std::to_string(pg.order()) + ") x H(" + std::to_string(hg.order())
                               + ")"});
      d.clauses.push_back({"p_factor_class_sizes", cs_p_ok, "cs(P) = " + join_sizes(cs_p)});
      d.clauses.push_back(
          {"p_factor_class_at_most_two", cls_ok, "nilpotency class " + std::to_string(cls)});
      d.clauses.push_back({"complement_class_sizes", cs_h_ok, "cs(H) = " + join_sizes(cs_h)});
      d.clauses.push_back({"complement_central_quotient_frobenius", frob_ok,
                           "|H/Z(H)| = " + std::to_string(hq.image.order())
                               + (frob.is_frobenius ? ", Frobenius with kernel of order "
                                                          + std::to_string(frob.kernel->order())
                                                    : ", not Frobenius")});
      d.witnesses["p_factor_order"]          = std::uint64_t{pg.order()};
      d.witnesses["p_factor_class"]          = std::uint64_t{cls};
      d.witnesses["p_factor_cs"]             = cs_p;
      d.witnesses["complement_order"]        = std::uint64_t{hg.order()};
      d.witnesses["complement_cs"]           = cs_h;
      d.witnesses["complement_center_order"] = std::uint64_t{zh.order()};
      if (frob.is_frobenius) {
        d.witnesses["complement_frobenius_kernel_order"] = std::uint64_t{frob.kernel->order()};
      }
      d.all_pass = cs_p_ok && cls_ok && cs_h_ok && frob_ok;
      return d;
    }

    void check_decomposition(Analysis&       a,
                             TheoremVerdict& v,
                             std::uint64_t   shared,
                             std::uint64_t   left,
                             std::uint64_t   right) {
      FiniteGroup const& g     = a.group();
      AbelianSplit const& sp   = a.stripped();
      FiniteGroup const  core  = as_group(g, sp.core, g.name() + " core");
      v.witnesses["abelian_factor_order"] = std::uint64_t{sp.abelian.order()};
      v.witnesses["core_order"]           = std::uint64_t{core.order()};

      auto const normals = normal_subgroups(core, a.normal_limit());
      std::optional<Decomposition> first;
      for (auto const& p : normals) {
        if (p.order() <= 1 || !is_power_of(p.order(), shared)) {
          continue;
        }
        for (auto const& h : normals) {
          if (h.order() * p.order() != core.order() || !is_direct_product(core, p, h)) {
            continue;
          }
          Decomposition d = evaluate_decomposition(core, p, h, shared, left, right);
          if (d.all_pass) {
            first = std::move(d);
            break;
          }
          if (!first) {
            first = std::move(d);
          }
        }
        if (first && first->all_pass) {
          break;
        }
      }
      if (!first) {
        v.conclusions.push_back({"direct_decomposition", false,
                                 "no normal " + std::to_string(shared)
                                     + "-subgroup of the core has a normal direct complement"});
        return;
      }
      for (auto& c : first->clauses) {
        v.conclusions.push_back(std::move(c));
      }
      for (auto& [k, w] : first->witnesses) {
        v.witnesses[k] = std::move(w);
      }
    }

  }  // namespace

  std::string_view to_string(TheoremId id) {
    switch (id) {
      case TheoremId::A: return "A";
      case TheoremId::C: return "C";
      case TheoremId::CH: return "CH";
      case TheoremId::ConjB: return "ConjB";
      case TheoremId::PropAS: return "PropAS";
    }
    return "?";
  }

  std::string_view to_string(Outcome o) {
    switch (o) {
      case Outcome::pass: return "pass";
      case Outcome::fail: return "fail";
      case Outcome::not_applicable: return "not_applicable";
      case Outcome::incomplete: return "incomplete";
    }
    return "?";
  }

  Outcome TheoremVerdict::outcome() const {
    if (!applies) {
      return Outcome::not_applicable;
    }
    for (auto const& c : conclusions) {
      if (!c.passed) {
        return Outcome::fail;
      }
    }
    if (incomplete) {
      return Outcome::incomplete;
    }
    return Outcome::pass;
  }

  TheoremVerdict check_theorem_A(Analysis& a) {
    TheoremVerdict v;
    v.id                = TheoremId::A;
    Sizes const& cs     = a.profile().cs();
    auto const&  split  = a.split();
    Sizes const  primes = to_vec(split.primes);
    Sizes const  comps  = to_vec(split.composites);
    v.witnesses["cs"]   = cs;
    if (comps.size() != 2) {
      v.reason = std::to_string(comps.size()) + " composite class sizes";
      return v;
    }
    v.applies                    = true;
    v.reason                     = "exactly two composite class sizes";
    v.witnesses["prime_sizes"]     = primes;
    v.witnesses["composite_sizes"] = comps;
    v.conclusions.push_back({"prime_sizes_at_most_three", primes.size() <= 3,
                             std::to_string(primes.size()) + " prime class sizes"});

    if (cs.size() != 6 || primes.size() != 3) {
      v.witnesses["labelling"] = std::string("not applicable");
      return v;
    }

    // Search every labelling; the shared prime must also be gcd(m, n).
    std::optional<std::array<std::uint64_t, 3>> label;
    for (auto shared : primes) {
      Sizes rest;
      for (auto p : primes) {
        if (p != shared) {
          rest.push_back(p);
        }
      }
      if (sorted({shared * rest[0], shared * rest[1]}) == comps) {
        label = std::array<std::uint64_t, 3>{shared, rest[0], rest[1]};
        break;
      }
    }
    std::uint64_t const g = std::gcd(comps[0], comps[1]);
    if (!label) {
      v.conclusions.push_back({"composites_share_a_prime", false,
                               "no labelling gives composites " + join_sizes(comps)});
      return v;
    }
    auto const [shared, left, right] = *label;
    bool const agrees                = g == shared;
    v.conclusions.push_back({"composites_share_a_prime", agrees,
                             std::to_string(shared * left) + " = " + std::to_string(shared) + "*"
                                 + std::to_string(left) + ", " + std::to_string(shared * right)
                                 + " = " + std::to_string(shared) + "*" + std::to_string(right)
                                 + ", gcd " + std::to_string(g)});
    v.witnesses["shared_prime"]    = shared;
    v.witnesses["left_prime"]      = left;
    v.witnesses["right_prime"]     = right;
    v.witnesses["left_composite"]  = shared * left;
    v.witnesses["right_composite"] = shared * right;

    try {
      check_decomposition(a, v, shared, left, right);
    } catch (LimitExceeded const& e) {
      v.incomplete = true;
      v.reason += std::string("; decomposition incomplete: ") + e.what();
    }
    return v;
  }

  TheoremVerdict check_theorem_C(Analysis& a) {
    TheoremVerdict v;
    v.id               = TheoremId::C;
    Sizes const& cs    = a.profile().cs();
    Sizes const  comps = to_vec(a.split().composites);
    v.witnesses["cs"]  = cs;

    struct Labelling {
      std::uint64_t prime, exponent, prime_power, other;
    };
    std::vector<Labelling> labels;
    if (comps.size() == 2) {
      for (std::size_t i = 0; i < 2; ++i) {
        std::uint64_t p = 0;
        unsigned      e = 0;
        if (is_prime_power(comps[i], &p, &e) && e >= 2) {
          labels.push_back({p, e, comps[i], comps[1 - i]});
        }
      }
    }
    if (cs.size() < 4 || labels.empty()) {
      v.reason = cs.size() < 4 ? "fewer than four class sizes"
                 : comps.size() != 2
                     ? std::to_string(comps.size()) + " composite class sizes"
                     : "no composite class size is a prime power";
      return v;
    }
    v.applies = true;
    v.reason  = "two composite class sizes, one a prime power";

    try {
      bool const soluble = a.soluble();
      v.conclusions.push_back({"soluble", soluble,
                               "derived length " + std::to_string(a.derived().series.size() - 1)});

      FiniteGroup const& g  = a.group();
      Subgroup const&    f2 = a.fitting2();
      v.witnesses["f2_index"] = std::uint64_t{g.order() / f2.order()};
      if (f2.order() == g.order()) {
        v.conclusions.push_back({"f2_quotient_prime_orders", true, "G = F2(G)"});
      } else {
        auto const      q = quotient(g, f2);
        std::set<std::uint64_t> orders;
        bool            ok = true;
        for (Elem x = 1; x < q.image.order(); ++x) {
          orders.insert(q.image.order_of(x));
          ok = ok && is_prime(q.image.order_of(x));
        }
        v.witnesses["f2_quotient_element_orders"] = to_vec(orders);
        v.conclusions.push_back({"f2_quotient_prime_orders", ok,
                                 "|G/F2(G)| = " + std::to_string(q.image.order())
                                     + ", non-identity element orders " + join_sizes(to_vec(orders))});
      }

      std::uint64_t const core_order = a.stripped().core.order();
      std::set<std::uint64_t> const core_primes = prime_divisors(core_order);
      v.witnesses["core_order"] = core_order;

      for (std::size_t li = 0; li < labels.size(); ++li) {
        auto const& [p, e, pa, n] = labels[li];
        std::string const prefix  = labels.size() > 1 ? std::to_string(pa) + ":" : "";
        v.conclusions.push_back({prefix + "prime_divides_other_size", n % p == 0,
                                 std::to_string(p) + " | " + std::to_string(n)});

        Sizes rest;
        for (auto c : cs) {
          if (c != 1 && c != pa && c != n) {
            rest.push_back(c);
          }
        }
        bool          case_a = false, case_b = false, case_c = false;
        std::uint64_t q = 0, b = 0;
        if (cs.size() == 4 && rest.size() == 1 && rest[0] == p) {
          case_a = true;
        }
        if (cs.size() == 4 && rest.size() == 1 && rest[0] != p && is_prime(rest[0])) {
          std::uint64_t const r  = rest[0];
          std::uint64_t const np = p_part(n, p);
          unsigned            bb = 0;
          for (std::uint64_t t = np; t > 1; t /= p) {
            ++bb;
          }
          if (n == r * np && bb >= 1 && bb <= e) {
            case_b = true;
            q      = r;
            b      = bb;
          }
        }
        if (cs.size() == 5 && rest.size() == 2) {
          std::uint64_t const other = rest[0] == p ? rest[1] : rest[1] == p ? rest[0] : 0;
          if (other != 0 && other != p && is_prime(other) && is_pi_number(n, {p, other})) {
            case_c = true;
            q      = other;
          }
        }
        int const matched = int(case_a) + int(case_b) + int(case_c);
        std::string const which = case_a ? "a" : case_b ? "b" : case_c ? "c" : "none";
        v.conclusions.push_back({prefix + "exactly_one_case", matched == 1,
                                 "case " + which + ", cs = " + join_sizes(cs)});

        if (case_a) {
          std::uint64_t bp = 0;
          unsigned      be = 0;
          if (is_prime_power(n, &bp, &be) && bp == p && be != 1 && be != e) {
            v.conclusions.push_back({prefix + "prime_power_core", is_power_of(core_order, p),
                                     "core of order " + std::to_string(core_order)});
          }
        }
        if (case_b || case_c) {
          bool ok = true;
          for (auto r : core_primes) {
            ok = ok && (r == p || r == q);
          }
          v.conclusions.push_back({prefix + "two_prime_core", ok,
                                   "core of order " + std::to_string(core_order) + " with primes "
                                       + join_sizes(to_vec(core_primes))});
        }

        if (li == 0) {
          v.witnesses["case"]              = which;
          v.witnesses["prime"]             = p;
          v.witnesses["exponent"]          = std::uint64_t{e};
          v.witnesses["prime_power"]       = pa;
          v.witnesses["other_size"]        = n;
          v.witnesses["other_size_primes"] = to_vec(prime_divisors(n));
          if (q != 0) {
            v.witnesses["second_prime"] = q;
          }
          if (case_b) {
            v.witnesses["other_size_exponent"] = b;
          }
          if (case_c) {
            // Record whether the mixed size has the shape q p^b, 1 <= b <= a.
            std::uint64_t const np = p_part(n, p);
            unsigned            bb = 0;
            for (std::uint64_t t = np; t > 1; t /= p) {
              ++bb;
            }
            bool const shaped = n == q * np && bb >= 1 && bb <= e;
            v.witnesses["other_size_shape"] =
                std::string(shaped ? "q*p^b" : "other");
            if (shaped) {
              v.witnesses["other_size_exponent"] = std::uint64_t{bb};
            }
          }
        }
      }
    } catch (LimitExceeded const& ex) {
      v.incomplete = true;
      v.reason += std::string("; incomplete: ") + ex.what();
    }
    return v;
  }

  TheoremVerdict check_zero_composite_dichotomy(Analysis& a) {
    TheoremVerdict v;
    v.id              = TheoremId::CH;
    Sizes const& cs   = a.profile().cs();
    v.witnesses["cs"] = cs;
    if (!a.split().composites.empty()) {
      v.reason = std::to_string(a.split().composites.size()) + " composite class sizes";
      return v;
    }
    if (cs.size() == 1) {
      v.reason = "abelian";
      return v;
    }
    v.applies = true;
    v.reason  = "no composite class size";

    try {
      FiniteGroup const& g    = a.group();
      Subgroup const&    core = a.stripped().core;
      v.witnesses["core_order"] = std::uint64_t{core.order()};

      // p-group branch
      std::string   p_detail;
      bool          p_branch = false;
      std::uint64_t p        = 0;
      unsigned      e        = 0;
      if (is_prime_power(core.order(), &p, &e)) {
        FiniteGroup const cg  = as_group(g, core, g.name() + " core");
        unsigned const    cls = nilpotency_class(cg);
        p_branch              = cs == sorted({1, p}) && cls <= 2;
        p_detail = "core is a " + std::to_string(p) + "-group of class " + std::to_string(cls);
        if (p_branch) {
          v.witnesses["branch"]           = std::string("p-group");
          v.witnesses["prime"]            = p;
          v.witnesses["nilpotency_class"] = std::uint64_t{cls};
        }
      } else {
        p_detail = "core of order " + std::to_string(core.order()) + " is not of prime-power order";
      }

      std::string f_detail;
      bool        f_branch = false;
      if (!p_branch) {
        Subgroup const& z    = a.center();
        auto const      q    = quotient(g, z);
        auto const      frob = is_frobenius(q.image);
        Sizes const     ps   = to_vec(a.split().primes);
        f_branch = frob.is_frobenius && ps.size() == 2 && q.image.order() == ps[0] * ps[1]
                && cs.size() == 3;
        f_detail = "|G/Z(G)| = " + std::to_string(q.image.order())
                 + (frob.is_frobenius ? " Frobenius" : " not Frobenius");
        if (f_branch) {
          v.witnesses["branch"]              = std::string("frobenius");
          v.witnesses["central_quotient"]    = std::uint64_t{q.image.order()};
          v.witnesses["kernel_order"]        = std::uint64_t{frob.kernel->order()};
          v.witnesses["primes"]              = ps;
        }
      }
      std::string detail = p_branch ? p_detail : f_branch ? f_detail : p_detail + "; " + f_detail;
      v.conclusions.push_back({"dichotomy", p_branch || f_branch, std::move(detail)});
    } catch (LimitExceeded const& ex) {
      v.incomplete = true;
      v.reason += std::string("; incomplete: ") + ex.what();
    }
    return v;
  }

  TheoremVerdict check_conjecture_B(Analysis& a) {
    TheoremVerdict v;
    v.id              = TheoremId::ConjB;
    v.witnesses["cs"] = a.profile().cs();
    auto const n      = a.split().composites.size();
    if (n != 2) {
      v.reason = std::to_string(n) + " composite class sizes";
      return v;
    }
    v.applies = true;
    v.reason  = "exactly two composite class sizes";
    v.conclusions.push_back({"soluble", a.soluble(),
                             a.soluble() ? "derived series reaches 1"
                                         : "derived series stops at order "
                                               + std::to_string(a.derived().series.back().order())});
    return v;
  }

  std::vector<std::uint64_t> psl_formula_sizes(unsigned exponent) {
    std::uint64_t const q = std::uint64_t{1} << exponent;
    return sorted({1, q * q - 1, q * (q - 1), q * (q + 1)});
  }

  TheoremVerdict check_psl_formula(unsigned exponent, FiniteGroup const& g) {
    TheoremVerdict v;
    v.id      = TheoremId::PropAS;
    v.applies = true;
    v.reason  = "PSL(2," + std::to_string(1U << exponent) + ")";
    std::uint64_t const q       = std::uint64_t{1} << exponent;
    Sizes const         formula = psl_formula_sizes(exponent);
    Sizes const         cs      = class_sizes(g);
    auto const          split   = composite_split(cs);
    v.witnesses["exponent"]        = std::uint64_t{exponent};
    v.witnesses["formula"]         = formula;
    v.witnesses["cs"]              = cs;
    v.witnesses["composite_count"] = std::uint64_t{split.composites.size()};
    v.conclusions.push_back({"order", g.order() == q * (q * q - 1),
                             "|G| = " + std::to_string(g.order())});
    v.conclusions.push_back({"class_sizes_match_formula", cs == formula,
                             "computed " + join_sizes(cs) + ", formula " + join_sizes(formula)});
    v.conclusions.push_back({"at_least_three_composites", split.composites.size() >= 3,
                             std::to_string(split.composites.size()) + " composite class sizes"});
    return v;
  }

  TheoremVerdict check_psl_formula(unsigned exponent, std::filesystem::path const& fixture_dir) {
    if (exponent == 2) {
      return check_psl_formula(exponent, alternating(5));
    }
    if (exponent == 3) {
      return check_psl_formula(exponent, load_fixture(fixture_dir / "psl2_8.txt"));
    }
    throw ParameterError("PSL(2, 2^" + std::to_string(exponent)
                         + ") is only available for exponents 2 and 3");
  }

}  // namespace csg
