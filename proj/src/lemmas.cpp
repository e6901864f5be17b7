#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "csgroups/arith.hpp"
#include "csgroups/errors.hpp"
#include "csgroups/kernels.hpp"
#include "csgroups/theorems.hpp"

namespace csg {

  namespace {

    using Sizes = std::vector<std::uint64_t>;

    bool is_power_of(std::uint64_t n, std::uint64_t p) {
      while (n % p == 0) {
        n /= p;
      }
      return n == 1;
    }

    std::uint64_t fnv(std::string const& s) {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (unsigned char c : s) {
        h = (h ^ c) * 0x100000001b3ULL;
      }
      return h;
    }

    // Coset index of every element for the left cosets of a subgroup.
    std::vector<std::uint32_t> left_coset_ids(FiniteGroup const& g, Subgroup const& h) {
      auto const                 hm = h.members.indices<Elem>();
      std::vector<std::uint32_t> ids(g.order(), UINT32_MAX);
      std::vector<Elem>          buf(hm.size());
      std::uint32_t              next = 0;
      for (Elem x = 0; x < g.order(); ++x) {
        if (ids[x] != UINT32_MAX) {
          continue;
        }
        kernels::active().gather_u32(buf.data(), g.row(x).data(), hm.data(), hm.size());
        for (Elem y : buf) {
          ids[y] = next;
        }
        ++next;
      }
      return ids;
    }

    class Suite {
     public:
      Suite(Analysis& a, LemmaOptions const& opt)
          : a_(a), g_(a.group()), opt_(opt), rng_(opt.seed ^ fnv(a.group().name())) {}

      LemmaReport run() {
        r_.groups = 1;
        guarded(LemmaId::quotient_class_divides, [&] { quotient_class_divides(); },
                {LemmaId::pi_element_lift});
        guarded(LemmaId::pi_element_lift, [&] { pi_element_lift(); });
        guarded(LemmaId::coprime_class_factorisation, [&] { coprime_class_factorisation(); });
        guarded(LemmaId::coprime_commuting_centralizer, [&] { coprime_commuting_centralizer(); });
        guarded(LemmaId::prime_free_sylow_split, [&] { prime_free_sylow_split(); });
        guarded(LemmaId::coprime_triple, [&] { coprime_triple(); });
        guarded(LemmaId::disconnected_class_sizes, [&] { disconnected_class_sizes(); });
        guarded(LemmaId::prime_power_product, [&] { prime_power_product(); });
        guarded(LemmaId::two_prime_reduction, [&] { two_prime_reduction(); });
        guarded(LemmaId::minimal_centralizer, [&] { minimal_centralizer(); });
        return std::move(r_);
      }

     private:
      template <typename F>
      void guarded(LemmaId id, F&& f, std::vector<LemmaId> also = {}) {
        if (r_[id].skipped != 0) {
          return;
        }
        try {
          f();
        } catch (LimitExceeded const& e) {
          also.push_back(id);
          for (auto l : also) {
            r_[l].skipped += 1;
            r_[l].skip_reasons.push_back(g_.name() + ": " + e.what());
          }
        }
      }

      void check(LemmaId id, bool ok, std::vector<Elem> elems, std::string detail) {
        auto& t = r_[id];
        ++t.instances;
        if (!ok) {
          ++t.failures;
          r_.failures.push_back(
              {id, g_.name(), g_.spec().to_string(), std::move(elems), std::move(detail)});
        }
      }

      std::vector<Elem> reps() {
        std::vector<Elem> out;
        for (auto const& c : a_.profile().classes()) {
          out.push_back(c.representative);
        }
        return out;
      }

      std::uint64_t size_of(Elem x) {
        return a_.profile().class_size_of(x);
      }

      // Calls f(x, y) for every pair in xs * ys, or for pair_budget pairs
      // drawn uniformly when the product is larger.
      template <typename F>
      void pairs(std::vector<Elem> const& xs, std::vector<Elem> const& ys, F&& f) {
        std::uint64_t const total = std::uint64_t{xs.size()} * ys.size();
        if (total <= opt_.pair_budget) {
          for (Elem x : xs) {
            for (Elem y : ys) {
              f(x, y);
            }
          }
          return;
        }
        std::uniform_int_distribution<std::size_t> dx(0, xs.size() - 1);
        std::uniform_int_distribution<std::size_t> dy(0, ys.size() - 1);
        for (std::uint64_t i = 0; i < opt_.pair_budget; ++i) {
          f(xs[dx(rng_)], ys[dy(rng_)]);
        }
      }

      std::vector<Subgroup> const& proper_normals() {
        if (!proper_normals_) {
          proper_normals_.emplace();
          for (auto const& n : a_.normal_subgroups()) {
            if (n.order() > 1 && n.order() < g_.order()) {
              proper_normals_->push_back(n);
            }
          }
        }
        return *proper_normals_;
      }

      std::vector<std::uint32_t> const& coset_ids(std::size_t i) {
        if (coset_ids_.size() != proper_normals().size()) {
          coset_ids_.assign(proper_normals().size(), {});
        }
        if (coset_ids_[i].empty()) {
          coset_ids_[i] = left_coset_ids(g_, proper_normals()[i]);
        }
        return coset_ids_[i];
      }

      // |(xN)^(G/N)| divides |x^G| for every normal N and every x.
      void quotient_class_divides() {
        auto const& normals = proper_normals();
        for (std::size_t i = 0; i < normals.size(); ++i) {
          auto const& ids = coset_ids(i);
          for (auto const& c : a_.profile().classes()) {
            std::vector<std::uint32_t> seen;
            for (Elem y : c.members) {
              seen.push_back(ids[y]);
            }
            std::sort(seen.begin(), seen.end());
            auto const image = static_cast<std::uint64_t>(
                std::unique(seen.begin(), seen.end()) - seen.begin());
            check(LemmaId::quotient_class_divides, c.members.size() % image == 0,
                  {c.representative},
                  "class of size " + std::to_string(c.members.size()) + " maps to size "
                      + std::to_string(image) + " modulo N of order "
                      + std::to_string(normals[i].order()));
          }
        }
      }

      // Every pi-element of G/N is the image of a pi-element of G: the
      // product of the pi-parts of any preimage.
      void pi_element_lift() {
        auto const& normals = proper_normals();
        for (std::size_t i = 0; i < normals.size(); ++i) {
          auto const& ids = coset_ids(i);
          auto const& n   = normals[i];
          for (Elem x : reps()) {
            std::uint64_t k = 1;
            for (Elem y = x; !n.members.test(y); y = g_.mul(y, x)) {
              ++k;
            }
            if (k == 1) {
              continue;
            }
            auto const primes = prime_divisors(k);
            Elem       lift   = 0;
            for (auto const& part : primary_decomposition(g_, x)) {
              if (primes.contains(part.prime)) {
                lift = g_.mul(lift, part.part);
              }
            }
            bool const ok = ids[lift] == ids[x] && is_pi_element(g_, lift, primes);
            check(LemmaId::pi_element_lift, ok, {x, lift},
                  "coset of order " + std::to_string(k) + " modulo N of order "
                      + std::to_string(n.order()));
          }
        }
      }

      // Coprime noncentral class sizes: |C(x)C(y)| = |G| and every x y' with
      // y' ~ y is conjugate to x y, with |(xy)^G| dividing |x^G||y^G|.
      void coprime_class_factorisation() {
        std::vector<Elem> xs, ys;
        for (Elem x : reps()) {
          if (size_of(x) > 1) {
            xs.push_back(x);
          }
        }
        for (Elem y = 0; y < g_.order(); ++y) {
          if (size_of(y) > 1) {
            ys.push_back(y);
          }
        }
        std::size_t const n = g_.order();
        std::unordered_map<std::uint64_t, bool> single_class;
        pairs(xs, ys, [&](Elem x, Elem y) {
          std::uint64_t const sx = size_of(x), sy = size_of(y);
          if (std::gcd(sx, sy) != 1) {
            return;
          }
          Bitset const& cx   = a_.centralizer_of(x);
          Bitset const& cy   = a_.centralizer_of(y);
          std::uint64_t prod = cx.count() * cy.count() / cx.count_and(cy);
          // x^G y^G is the union of the classes of x y' over y' in y^G, a set
          // that depends on y only through its class.
          std::size_t const cy_index = a_.profile().class_index(y);
          std::uint64_t const key = std::uint64_t{x} * a_.profile().classes().size() + cy_index;
          auto [it, fresh] = single_class.try_emplace(key, true);
          if (fresh) {
            std::size_t const xy = a_.profile().class_index(g_.mul(x, y));
            for (Elem z : a_.profile().classes()[cy_index].members) {
              if (a_.profile().class_index(g_.mul(x, z)) != xy) {
                it->second = false;
                break;
              }
            }
          }
          bool const same = it->second;
          std::uint64_t const sxy = size_of(g_.mul(x, y));
          check(LemmaId::coprime_class_factorisation,
                prod == n && same && (sx * sy) % sxy == 0, {x, y},
                "|C(x)C(y)| = " + std::to_string(prod) + ", |(xy)^G| = " + std::to_string(sxy));
        });
      }

      // Commuting x, y of coprime orders: C(xy) = C(x) n C(y), and both
      // class sizes divide |(xy)^G|.
      void coprime_commuting_centralizer() {
        std::vector<Elem> xs, ys;
        for (Elem x : reps()) {
          if (x != 0) {
            xs.push_back(x);
          }
        }
        for (Elem y = 1; y < g_.order(); ++y) {
          ys.push_back(y);
        }
        pairs(xs, ys, [&](Elem x, Elem y) {
          if (std::gcd(g_.order_of(x), g_.order_of(y)) != 1) {
            return;
          }
          Elem const xy = g_.mul(x, y);
          if (xy != g_.mul(y, x)) {
            return;
          }
          Bitset const  meet = a_.centralizer_of(x) & a_.centralizer_of(y);
          bool const    eq   = meet == a_.centralizer_of(xy);
          std::uint64_t sxy  = size_of(xy);
          check(LemmaId::coprime_commuting_centralizer,
                eq && sxy % size_of(x) == 0 && sxy % size_of(y) == 0, {x, y},
                eq ? "class sizes do not divide |(xy)^G|" : "C(xy) differs from C(x) n C(y)");
        });
      }

      // p divides no class size iff G = P x O_p'(G) with P an abelian Sylow
      // p-subgroup. The right side holds exactly when P is abelian and
      // normal and the p'-elements form a subgroup of order |G|_p' that
      // centralises P.
      void prime_free_sylow_split() {
        std::size_t const n = g_.order();
        for (auto p : prime_divisors(n)) {
          bool lhs = true;
          for (auto c : a_.profile().cs()) {
            lhs = lhs && c % p != 0;
          }
          Subgroup const&   sp = a_.sylow(p);
          std::vector<Elem> others;
          for (Elem x = 0; x < n; ++x) {
            if (g_.order_of(x) % p != 0) {
              others.push_back(x);
            }
          }
          bool rhs = commute(g_, sp, sp) && is_normal(g_, sp)
                  && others.size() == n / p_part(n, p);
          if (rhs) {
            Bitset k(n);
            for (Elem x : others) {
              k.set(x);
            }
            for (Elem x : others) {
              for (Elem y : others) {
                if (!k.test(g_.mul(x, y))) {
                  rhs = false;
                  break;
                }
              }
              if (!rhs) {
                break;
              }
            }
            if (rhs) {
              Subgroup const kk = from_members(g_, k);
              rhs               = commute(g_, sp, kk);
            }
          }
          check(LemmaId::prime_free_sylow_split, lhs == rhs, {},
                "prime " + std::to_string(p) + ": divides no class size " + (lhs ? "yes" : "no")
                    + ", splits " + (rhs ? "yes" : "no"));
        }
      }

      // Pairwise coprime 1 < a < b1 < b2 in cs: some c in cs with c > b_i and
      // c | a b_i.
      void coprime_triple() {
        Sizes const& cs = a_.profile().cs();
        for (std::size_t i = 1; i < cs.size(); ++i) {
          for (std::size_t j = i + 1; j < cs.size(); ++j) {
            for (std::size_t k = j + 1; k < cs.size(); ++k) {
              std::uint64_t const a = cs[i], b1 = cs[j], b2 = cs[k];
              if (std::gcd(a, b1) != 1 || std::gcd(a, b2) != 1 || std::gcd(b1, b2) != 1) {
                continue;
              }
              bool found = false;
              for (auto c : cs) {
                found = found || (c > b1 && (a * b1) % c == 0) || (c > b2 && (a * b2) % c == 0);
              }
              check(LemmaId::coprime_triple, found, {},
                    "triple " + std::to_string(a) + "," + std::to_string(b1) + ","
                        + std::to_string(b2));
            }
          }
        }
      }

      // When every nontrivial class size is a pi-number or a pi'-number and
      // both kinds occur, the core after stripping abelian factors is H L
      // with abelian Hall subgroups, L normal, G/Z(G) Frobenius and
      // cs = {1, |L|, |H Z / Z|}.
      void disconnected_class_sizes() {
        Sizes const& cs = a_.profile().cs();
        // Components of the graph joining primes that divide a common size.
        std::map<std::uint64_t, std::uint64_t> parent;
        auto find = [&](std::uint64_t x) {
          while (parent[x] != x) {
            x = parent[x];
          }
          return x;
        };
        for (auto c : cs) {
          auto const ps = prime_divisors(c);
          for (auto p : ps) {
            parent.emplace(p, p);
          }
          for (auto p : ps) {
            parent[find(p)] = find(*ps.begin());
          }
        }
        std::map<std::uint64_t, std::set<std::uint64_t>> comps;
        for (auto const& [p, _] : parent) {
          comps[find(p)].insert(p);
        }
        if (comps.size() < 2) {
          return;
        }
        FiniteGroup const& g    = g_;
        Subgroup const&    core = a_.stripped().core;
        FiniteGroup const  cg   = as_group(g, core, g.name() + " core");
        auto const         all  = prime_divisors(cg.order());
        Subgroup const     z    = center(cg);
        auto const         q    = quotient(cg, z);
        bool const         frob = is_frobenius(q.image).is_frobenius;
        for (auto const& [_, pi] : comps) {
          std::set<std::uint64_t> co;
          for (auto p : all) {
            if (!pi.contains(p)) {
              co.insert(p);
            }
          }
          auto const h = hall(cg, pi);
          auto const l = hall(cg, co);
          bool       ok = false;
          std::string detail = "no Hall subgroups";
          if (h && l) {
            bool const ab = commute(cg, *h, *h) && commute(cg, *l, *l);
            for (int swap = 0; swap < 2 && !ok; ++swap) {
              Subgroup const& hh = swap ? *l : *h;
              Subgroup const& ll = swap ? *h : *l;
              std::uint64_t const hz = hh.order() / hh.members.count_and(z.members);
              Sizes expect{1, ll.order(), hz};
              std::sort(expect.begin(), expect.end());
              expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
              ok = ab && frob && is_normal(cg, ll) && expect == cs;
            }
            detail = std::string("Hall orders ") + std::to_string(h->order()) + ", "
                   + std::to_string(l->order()) + (ab ? ", abelian" : ", nonabelian")
                   + (frob ? ", Frobenius central quotient" : ", central quotient not Frobenius");
          }
          check(LemmaId::disconnected_class_sizes, ok, {}, detail);
        }
      }

      // Noncentral t-elements x, y with class sizes powers of distinct primes
      // and |(xy)^G| a prime power > 1: x, y lie in O_t(G) and |(xy)^G| is
      // the larger class size, a power of t.
      void prime_power_product() {
        std::size_t const n = g_.order();
        for (auto t : prime_divisors(n)) {
          std::vector<Elem> xs, ys;
          auto keep = [&](Elem x) {
            return x != 0 && is_power_of(g_.order_of(x), t) && size_of(x) > 1
                && is_prime_power(size_of(x));
          };
          for (Elem x : reps()) {
            if (keep(x)) {
              xs.push_back(x);
            }
          }
          for (Elem y = 1; y < n; ++y) {
            if (keep(y)) {
              ys.push_back(y);
            }
          }
          if (xs.empty()) {
            continue;
          }
          pairs(xs, ys, [&](Elem x, Elem y) {
            std::uint64_t px = 0, py = 0, pxy = 0;
            is_prime_power(size_of(x), &px);
            is_prime_power(size_of(y), &py);
            if (px == py) {
              return;
            }
            std::uint64_t const sxy = size_of(g_.mul(x, y));
            if (sxy == 1 || !is_prime_power(sxy, &pxy)) {
              return;
            }
            Subgroup const& ot  = a_.core_p(t);
            Subgroup const& syl = a_.sylow(t);
            bool const      ok  = ot.contains(x) && ot.contains(y)
                          && sxy == std::max(size_of(x), size_of(y)) && pxy == t
                          && !commute(g_, syl, syl);
            check(LemmaId::prime_power_product, ok, {x, y},
                  "t = " + std::to_string(t) + ", sizes " + std::to_string(size_of(x)) + ", "
                      + std::to_string(size_of(y)) + " -> " + std::to_string(sxy));
          });
        }
      }

      // Prime-power-order p'-elements all of class size 1 or m: m = p^a q^b,
      // and when q divides m the core is a {p, q}-group.
      void two_prime_reduction() {
        std::size_t const n = g_.order();
        for (auto p : prime_divisors(n)) {
          std::set<std::uint64_t> sizes;
          for (auto const& c : a_.profile().classes()) {
            std::uint64_t r = 0;
            Elem const    x = c.representative;
            if (x != 0 && is_prime_power(g_.order_of(x), &r) && r != p && c.members.size() > 1) {
              sizes.insert(c.members.size());
            }
          }
          if (sizes.size() != 1) {
            continue;
          }
          std::uint64_t const     m = *sizes.begin();
          std::set<std::uint64_t> qs;
          for (auto r : prime_divisors(m)) {
            if (r != p) {
              qs.insert(r);
            }
          }
          std::set<std::uint64_t> core_qs;
          for (auto r : prime_divisors(a_.stripped().core.order())) {
            if (r != p) {
              core_qs.insert(r);
            }
          }
          // The {p, q}-group conclusion names q through m, so it only binds
          // when m is not a power of p: dihedral(15) with p = 2 has m = 2 and
          // an abelian, non-central {3, 5}-complement.
          bool ok = qs.size() <= 1;
          if (ok && qs.size() == 1) {
            ok = core_qs.empty() || qs == core_qs;
          }
          check(LemmaId::two_prime_reduction, ok, {},
                "p = " + std::to_string(p) + ", m = " + std::to_string(m) + ", core order "
                    + std::to_string(a_.stripped().core.order()));
        }
      }

      // A centraliser minimal among centralisers, realised by a nontrivial
      // r-element, is R x A with R its Sylow r-subgroup and A an abelian
      // r'-group.
      void minimal_centralizer() {
        std::unordered_set<Bitset, BitsetHash> done;
        for (Elem x : reps()) {
          if (x == 0) {
            continue;
          }
          Bitset const& cx = a_.centralizer_of(x);
          if (!done.insert(cx).second) {
            continue;
          }
          std::size_t const size    = cx.count();
          bool              minimal = true;
          cx.for_each([&](std::size_t y) {
            if (minimal) {
              Bitset const& cy = a_.centralizer_of(static_cast<Elem>(y));
              minimal          = !(cy.is_subset_of(cx) && cy.count() < size);
            }
          });
          if (!minimal) {
            continue;
          }
          Subgroup const xs = from_members(g_, cx);
          Bitset         zx = cx;
          for (Elem s : xs.gens) {
            zx &= a_.centralizer_of(s);
          }
          std::set<std::uint64_t> realised;
          cx.for_each([&](std::size_t y) {
            std::uint64_t r = 0;
            if (y != 0 && is_prime_power(g_.order_of(static_cast<Elem>(y)), &r)
                && a_.centralizer_of(static_cast<Elem>(y)) == cx) {
              realised.insert(r);
            }
          });
          for (auto r : realised) {
            std::uint64_t r_count = 0, other_count = 0;
            bool          central = true;
            cx.for_each([&](std::size_t y) {
              if (is_power_of(g_.order_of(static_cast<Elem>(y)), r)) {
                ++r_count;
              }
              if (g_.order_of(static_cast<Elem>(y)) % r != 0) {
                ++other_count;
                central = central && zx.test(y);
              }
            });
            bool const ok = central && r_count == p_part(size, r)
                         && other_count == size / p_part(size, r);
            check(LemmaId::minimal_centralizer, ok, {x},
                  "centraliser of order " + std::to_string(size) + ", r = " + std::to_string(r));
          }
        }
      }

      Analysis&                                           a_;
      FiniteGroup const&                                  g_;
      LemmaOptions const&                                 opt_;
      std::mt19937_64                                     rng_;
      LemmaReport                                         r_;
      std::optional<std::vector<Subgroup>>                proper_normals_;
      std::vector<std::vector<std::uint32_t>>             coset_ids_;
    };

  }  // namespace

  std::string_view to_string(LemmaId id) {
    switch (id) {
      case LemmaId::quotient_class_divides: return "quotient_class_divides";
      case LemmaId::coprime_class_factorisation: return "coprime_class_factorisation";
      case LemmaId::coprime_commuting_centralizer: return "coprime_commuting_centralizer";
      case LemmaId::prime_free_sylow_split: return "prime_free_sylow_split";
      case LemmaId::pi_element_lift: return "pi_element_lift";
      case LemmaId::coprime_triple: return "coprime_triple";
      case LemmaId::disconnected_class_sizes: return "disconnected_class_sizes";
      case LemmaId::prime_power_product: return "prime_power_product";
      case LemmaId::two_prime_reduction: return "two_prime_reduction";
      case LemmaId::minimal_centralizer: return "minimal_centralizer";
    }
    return "?";
  }

  std::string_view describe(LemmaId id) {
    switch (id) {
      case LemmaId::quotient_class_divides: return "|(xN)^(G/N)| divides |x^G|";
      case LemmaId::coprime_class_factorisation:
        return "coprime |x^G|, |y^G| give G = C(x)C(y) and (xy)^G = x^G y^G";
      case LemmaId::coprime_commuting_centralizer:
        return "commuting x, y of coprime orders give C(xy) = C(x) n C(y)";
      case LemmaId::prime_free_sylow_split:
        return "p divides no class size iff G = P x O_p'(G) with P abelian";
      case LemmaId::pi_element_lift: return "pi-elements of G/N lift to pi-elements of G";
      case LemmaId::coprime_triple:
        return "pairwise coprime 1 < a < b1 < b2 in cs give c > b_i dividing a b_i";
      case LemmaId::disconnected_class_sizes:
        return "pi / pi' split class sizes give abelian Halls and a Frobenius central quotient";
      case LemmaId::prime_power_product:
        return "t-elements with prime-power class sizes of distinct primes lie in O_t(G)";
      case LemmaId::two_prime_reduction:
        return "one class size m among p'-elements gives m = p^a q^b";
      case LemmaId::minimal_centralizer: return "minimal centralisers of r-elements are R x A";
    }
    return "?";
  }

  void LemmaReport::merge(LemmaReport const& other) {
    groups += other.groups;
    for (std::size_t i = 0; i < lemma_count; ++i) {
      auto&       t = tallies[i];
      auto const& o = other.tallies[i];
      t.instances += o.instances;
      t.failures += o.failures;
      t.skipped += o.skipped;
      t.skip_reasons.insert(t.skip_reasons.end(), o.skip_reasons.begin(), o.skip_reasons.end());
    }
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }

  bool LemmaReport::complete() const {
    if (!failures.empty()) {
      return false;
    }
    return std::all_of(tallies.begin(), tallies.end(),
                       [](LemmaTally const& t) { return t.instances > 0; });
  }

  LemmaReport lemma_suite(Analysis& a, LemmaOptions const& options) {
    return Suite(a, options).run();
  }

}  // namespace csg
