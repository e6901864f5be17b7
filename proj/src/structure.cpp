#include "csgroups/structure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "csgroups/arith.hpp"
#include "csgroups/errors.hpp"

namespace csg {

  namespace {

    bool by_order_then_members(Subgroup const& a, Subgroup const& b) {
      if (a.order() != b.order()) {
        return a.order() < b.order();
      }
      return a.members.indices() < b.members.indices();
    }

    Bitset normalizer_members(FiniteGroup const& g, Subgroup const& h) {
      Bitset n(g.order());
      for (Elem x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (Elem y : h.gens) {
          if (!h.members.test(g.conj(y, x))) {
            ok = false;
            break;
          }
        }
        if (ok) {
          n.set(x);
        }
      }
      return n;
    }

    bool is_p_power(std::uint64_t n, std::uint64_t p) {
      while (n % p == 0) {
        n /= p;
      }
      return n == 1;
    }

    Bitset cyclic_members(FiniteGroup const& g, Elem x) {
      Bitset c(g.order());
      Elem   y = 0;
      do {
        c.set(y);
        y = g.mul(y, x);
      } while (y != 0);
      return c;
    }

    std::vector<Subgroup> join_closure(FiniteGroup const&           g,
                                       std::vector<Subgroup> const& seeds,
                                       std::size_t                  limit) {
      std::unordered_set<Bitset, BitsetHash> seen;
      std::vector<Subgroup>                  out;
      auto                                   add = [&](Subgroup s) {
        if (seen.insert(s.members).second) {
          out.push_back(std::move(s));
          if (out.size() > limit) {
            throw LimitExceeded("subgroup enumeration exceeded " + std::to_string(limit)
                                + " subgroups in " + g.name());
          }
        }
      };
      add(trivial_subgroup(g));
      for (auto const& s : seeds) {
        add(s);
      }
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (auto const& s : seeds) {
          if (s.members.is_subset_of(out[i].members)) {
            continue;
          }
          Subgroup j = join(g, out[i], s);
          if (!seen.contains(j.members)) {
            add(std::move(j));
          }
        }
      }
      return out;
    }

  }  // namespace

  Subgroup center(FiniteGroup const& g) {
    Bitset z(g.order());
    z.set_all();
    for (Elem s : g.generators()) {
      z &= centralizer(g, s);
    }
    return from_members(g, z);
  }

  Subgroup derived_subgroup(FiniteGroup const& g, Subgroup const& h) {
    std::vector<Elem> comms;
    for (std::size_t i = 0; i < h.gens.size(); ++i) {
      for (std::size_t j = i + 1; j < h.gens.size(); ++j) {
        Elem const c = g.commutator(h.gens[i], h.gens[j]);
        if (c != 0) {
          comms.push_back(c);
        }
      }
    }
    return normal_closure(g, comms, h);
  }

  DerivedSeries derived_series(FiniteGroup const& g) {
    DerivedSeries out;
    out.series.push_back(whole_group(g));
    while (out.series.back().order() > 1) {
      Subgroup d = derived_subgroup(g, out.series.back());
      if (d.order() == out.series.back().order()) {
        break;
      }
      out.series.push_back(std::move(d));
    }
    out.soluble = out.series.back().order() == 1;
    return out;
  }

  std::vector<Subgroup> lower_central_series(FiniteGroup const& g) {
    std::vector<Subgroup> out{whole_group(g)};
    while (out.back().order() > 1) {
      std::vector<Elem> comms;
      for (Elem x : out.back().gens) {
        for (Elem s : g.generators()) {
          Elem const c = g.commutator(x, s);
          if (c != 0) {
            comms.push_back(c);
          }
        }
      }
      Subgroup next = normal_closure(g, comms);
      if (next.order() == out.back().order()) {
        break;
      }
      out.push_back(std::move(next));
    }
    return out;
  }

  Subgroup sylow(FiniteGroup const& g, std::uint64_t p) {
    std::uint64_t const target = p_part(g.order(), p);
    Subgroup            h      = trivial_subgroup(g);
    while (h.order() < target) {
      // N_G(P)/P has order divisible by p while P is not Sylow, and any
      // p-element of N_G(P) extends P to a larger p-subgroup.
      Bitset const n    = normalizer_members(g, h);
      Elem         best = 0;
      n.for_each([&](std::size_t x) {
        if (best == 0 && !h.members.test(x) && is_p_power(g.order_of(static_cast<Elem>(x)), p)) {
          best = static_cast<Elem>(x);
        }
      });
      h = *extend(g, h, {best});
    }
    return h;
  }

  Subgroup core_p(FiniteGroup const& g, std::uint64_t p) {
    Subgroup const                         s = sylow(g, p);
    std::unordered_set<Bitset, BitsetHash> seen{s.members};
    std::vector<Subgroup>                  orbit{s};
    Bitset                                 meet = s.members;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Elem x : g.generators()) {
        Subgroup c = conjugate(g, orbit[i], x);
        if (seen.insert(c.members).second) {
          meet &= c.members;
          orbit.push_back(std::move(c));
        }
      }
    }
    return from_members(g, meet);
  }

  Subgroup fitting(FiniteGroup const& g) {
    Subgroup f = trivial_subgroup(g);
    for (auto p : prime_divisors(g.order())) {
      f = join(g, f, core_p(g, p));
    }
    return f;
  }

  Subgroup fitting2(FiniteGroup const& g) {
    Subgroup const f = fitting(g);
    if (f.order() == g.order()) {
      return f;
    }
    CosetAction const q = quotient(g, f);
    return preimage(g, q.projection, fitting(q.image));
  }

  CosetAction quotient(FiniteGroup const& g, Subgroup const& n) {
    if (!is_normal(g, n)) {
      throw ParameterError("quotient by a subgroup that is not normal in " + g.name());
    }
    return coset_action(g, n, g.name() + " / N" + std::to_string(n.order()));
  }

  std::vector<Subgroup> normal_subgroups(FiniteGroup const& g, std::size_t limit) {
    ClassProfile const                     profile = conjugacy_classes(g);
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Subgroup>                  seeds;
    for (auto const& c : profile.classes()) {
      if (c.representative == 0) {
        continue;
      }
      Subgroup s = normal_closure(g, {c.representative});
      if (seen.insert(s.members).second) {
        seeds.push_back(std::move(s));
      }
    }
    auto out = join_closure(g, seeds, limit);
    std::sort(out.begin(), out.end(), by_order_then_members);
    for (auto& s : out) {
      s.tags.push_back("normal");
    }
    return out;
  }

  std::vector<Subgroup> abelian_subgroups(FiniteGroup const& g,
                                          Subgroup const&    a,
                                          std::size_t        limit) {
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Subgroup>                  cyclics;
    a.members.for_each([&](std::size_t x) {
      if (x == 0) {
        return;
      }
      Bitset c = cyclic_members(g, static_cast<Elem>(x));
      if (seen.insert(c).second) {
        cyclics.push_back(Subgroup{std::move(c), {static_cast<Elem>(x)}, {}});
      }
    });
    auto out = join_closure(g, cyclics, limit);
    std::sort(out.begin(), out.end(), [](Subgroup const& x, Subgroup const& y) {
      return by_order_then_members(y, x);
    });
    return out;
  }

  bool is_pi_element(FiniteGroup const& g, Elem x, std::set<std::uint64_t> const& primes) {
    return is_pi_number(g.order_of(x), primes);
  }

  std::optional<Subgroup> hall(FiniteGroup const&             g,
                               std::set<std::uint64_t> const& primes,
                               std::size_t                    limit) {
    std::uint64_t target  = 1;
    std::uint64_t largest = 0;
    std::uint64_t anchor  = 0;
    for (auto p : prime_divisors(g.order())) {
      if (primes.contains(p)) {
        std::uint64_t const part = p_part(g.order(), p);
        target *= part;
        if (part > largest) {
          largest = part;
          anchor  = p;
        }
      }
    }
    if (target == 1) {
      return trivial_subgroup(g);
    }
    if (target == g.order()) {
      return whole_group(g);
    }
    Subgroup const start = sylow(g, anchor);
    if (start.order() == target) {
      return start;
    }

    // One generator per cyclic pi-subgroup, larger orders first.
    std::unordered_set<Bitset, BitsetHash> cyc_seen;
    std::vector<Elem>                      cands;
    for (Elem x = 1; x < g.order(); ++x) {
      if (is_pi_element(g, x, primes) && cyc_seen.insert(cyclic_members(g, x)).second) {
        cands.push_back(x);
      }
    }
    std::stable_sort(cands.begin(), cands.end(), [&](Elem a, Elem b) {
      return g.order_of(a) > g.order_of(b);
    });

    std::unordered_set<Bitset, BitsetHash> visited{start.members};
    std::vector<Subgroup>                  stack{start};
    while (!stack.empty()) {
      Subgroup h = std::move(stack.back());
      stack.pop_back();
      for (Elem x : cands) {
        if (h.members.test(x)) {
          continue;
        }
        auto j = extend(g, h, {x}, target);
        if (!j || target % j->order() != 0) {
          continue;
        }
        if (j->order() == target) {
          j->tags.push_back("hall");
          return j;
        }
        if (visited.insert(j->members).second) {
          if (visited.size() > limit) {
            throw LimitExceeded("Hall subgroup search exceeded " + std::to_string(limit)
                                + " subgroups in " + g.name());
          }
          stack.push_back(std::move(*j));
        }
      }
    }
    return std::nullopt;
  }

  bool is_nilpotent(FiniteGroup const& g) {
    for (auto p : prime_divisors(g.order())) {
      if (!is_normal(g, sylow(g, p))) {
        return false;
      }
    }
    return true;
  }

  unsigned nilpotency_class(FiniteGroup const& g) {
    if (!is_nilpotent(g)) {
      throw NotNilpotent(g.name() + " is not nilpotent");
    }
    auto const series = lower_central_series(g);
    return static_cast<unsigned>(series.size() - 1);
  }

  bool is_frobenius_kernel(FiniteGroup const& q, Subgroup const& k) {
    std::size_t const n = q.order();
    if (k.order() <= 1 || k.order() >= n || std::gcd(k.order(), n / k.order()) != 1) {
      return false;
    }
    if (!is_normal(q, k)) {
      return false;
    }
    bool ok = true;
    k.members.for_each([&](std::size_t x) {
      if (ok && x != 0) {
        ok = centralizer(q, static_cast<Elem>(x)).is_subset_of(k.members);
      }
    });
    return ok;
  }

  FrobeniusVerdict is_frobenius(FiniteGroup const& q, FrobeniusSearch mode, std::size_t limit) {
    std::vector<Subgroup> candidates;
    if (mode == FrobeniusSearch::fitting_only) {
      candidates.push_back(fitting(q));
    } else {
      candidates = normal_subgroups(q, limit);
    }
    for (auto& k : candidates) {
      if (!is_frobenius_kernel(q, k)) {
        continue;
      }
      auto const h = hall(q, prime_divisors(q.order() / k.order()));
      if (h && h->order() * k.order() == q.order()) {
        return FrobeniusVerdict{true, std::move(k), *h};
      }
    }
    return {};
  }

  AbelianSplit strip_abelian_factors(FiniteGroup const& g, std::size_t limit) {
    if (g.is_abelian()) {
      return {trivial_subgroup(g), whole_group(g)};
    }
    Subgroup const z = center(g);
    if (z.order() == 1) {
      return {whole_group(g), trivial_subgroup(g)};
    }
    Subgroup const    d   = derived_subgroup(g, whole_group(g));
    CosetAction const ab  = quotient(g, d);
    auto const        zs  = abelian_subgroups(g, z, limit);
    auto const        qs  = abelian_subgroups(ab.image, whole_group(ab.image), limit);
    std::size_t const qn  = ab.image.order();
    for (auto const& a : zs) {
      if (a.order() == 1) {
        break;
      }
      if (a.members.count_and(d.members) != 1 || qn % a.order() != 0) {
        continue;
      }
      Bitset image(qn);
      a.members.for_each([&](std::size_t x) { image.set(ab.projection[x]); });
      for (auto const& b : qs) {
        if (b.order() * a.order() == qn && b.members.count_and(image) == 1) {
          Subgroup h = preimage(g, ab.projection, b);
          return {std::move(h), a};
        }
      }
    }
    return {whole_group(g), trivial_subgroup(g)};
  }

  bool is_direct_product(FiniteGroup const& g, Subgroup const& a, Subgroup const& b) {
    return a.order() * b.order() == g.order() && a.members.count_and(b.members) == 1
        && is_normal(g, a) && is_normal(g, b) && commute(g, a, b);
  }

  Analysis::Analysis(FiniteGroup const& g, std::size_t normal_limit)
      : g_(g), normal_limit_(normal_limit), centralizers_(g.order()) {}

  ClassProfile const& Analysis::profile() {
    if (!profile_) {
      profile_ = conjugacy_classes(g_);
    }
    return *profile_;
  }

  CompositeSplit const& Analysis::split() {
    if (!split_) {
      split_ = composite_split(profile());
    }
    return *split_;
  }

  Bitset const& Analysis::centralizer_of(Elem x) {
    auto& slot = centralizers_[x];
    if (!slot) {
      slot = centralizer(g_, x);
    }
    return *slot;
  }

  Subgroup const& Analysis::center() {
    if (!center_) {
      center_ = csg::center(g_);
    }
    return *center_;
  }

  DerivedSeries const& Analysis::derived() {
    if (!derived_) {
      derived_ = derived_series(g_);
    }
    return *derived_;
  }

  Subgroup const& Analysis::sylow(std::uint64_t p) {
    auto it = sylows_.find(p);
    if (it == sylows_.end()) {
      Subgroup s = csg::sylow(g_, p);
      s.tags.push_back("sylow-" + std::to_string(p));
      it = sylows_.emplace(p, std::move(s)).first;
    }
    return it->second;
  }

  Subgroup const& Analysis::core_p(std::uint64_t p) {
    auto it = cores_.find(p);
    if (it == cores_.end()) {
      it = cores_.emplace(p, csg::core_p(g_, p)).first;
    }
    return it->second;
  }

  Subgroup const& Analysis::fitting() {
    if (!fitting_) {
      Subgroup f = trivial_subgroup(g_);
      for (auto p : prime_divisors(g_.order())) {
        f = join(g_, f, core_p(p));
      }
      fitting_ = std::move(f);
    }
    return *fitting_;
  }

  Subgroup const& Analysis::fitting2() {
    if (!fitting2_) {
      Subgroup const& f = fitting();
      if (f.order() == g_.order()) {
        fitting2_ = f;
      } else {
        CosetAction const q = quotient(g_, f);
        fitting2_           = preimage(g_, q.projection, csg::fitting(q.image));
      }
    }
    return *fitting2_;
  }

  std::vector<Subgroup> const& Analysis::normal_subgroups() {
    if (!normals_) {
      normals_ = csg::normal_subgroups(g_, normal_limit_);
    }
    return *normals_;
  }

  AbelianSplit const& Analysis::stripped() {
    if (!stripped_) {
      stripped_ = strip_abelian_factors(g_, normal_limit_);
    }
    return *stripped_;
  }

  StructureReport Analysis::report() {
    StructureReport r{center(), derived(), fitting(), fitting2(), {}, std::nullopt};
    for (auto p : prime_divisors(g_.order())) {
      r.sylows.emplace(p, sylow(p));
    }
    if (fitting().order() == g_.order()) {
      r.nilpotency_class = nilpotency_class(g_);
    }
    return r;
  }

}  // namespace csg
