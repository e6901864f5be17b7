#include "csgroups/subgroup.hpp"

#include <algorithm>

#include "csgroups/kernels.hpp"

namespace csg {

  Subgroup trivial_subgroup(FiniteGroup const& g) {
    Subgroup h{Bitset(g.order()), {}, {}};
    h.members.set(0);
    return h;
  }

  Subgroup whole_group(FiniteGroup const& g) {
    Subgroup h{Bitset(g.order()), g.generators(), {}};
    h.members.set_all();
    return h;
  }

  std::optional<Subgroup> extend(FiniteGroup const&       g,
                                 Subgroup const&          base,
                                 std::vector<Elem> const& extra,
                                 std::size_t              bound) {
    Subgroup h = base;
    for (Elem x : extra) {
      if (!h.members.test(x)) {
        h.gens.push_back(x);
      }
    }
    if (h.gens.size() == base.gens.size()) {
      return h;
    }
    // Right multiplication by the generators from the identity reaches every
    // element of the generated subgroup.
    Bitset            seen(g.order());
    std::vector<Elem> queue{0};
    seen.set(0);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto const row = g.row(queue[i]);
      for (Elem s : h.gens) {
        Elem const y = row[s];
        if (!seen.test(y)) {
          seen.set(y);
          queue.push_back(y);
          if (queue.size() > bound) {
            return std::nullopt;
          }
        }
      }
    }
    h.members = std::move(seen);
    return h;
  }

  Subgroup generate(FiniteGroup const& g, std::vector<Elem> const& gens) {
    return *extend(g, trivial_subgroup(g), gens);
  }

  Subgroup from_members(FiniteGroup const& g, Bitset const& members) {
    Subgroup h = trivial_subgroup(g);
    members.for_each([&](std::size_t x) {
      if (!h.members.test(x)) {
        h = *extend(g, h, {static_cast<Elem>(x)});
      }
    });
    return h;
  }

  Subgroup join(FiniteGroup const& g, Subgroup const& a, Subgroup const& b) {
    if (b.members.is_subset_of(a.members)) {
      return a;
    }
    if (a.members.is_subset_of(b.members)) {
      return b;
    }
    return *extend(g, a, b.gens);
  }

  Subgroup intersection(FiniteGroup const& g, Subgroup const& a, Subgroup const& b) {
    if (a.members.is_subset_of(b.members)) {
      return a;
    }
    if (b.members.is_subset_of(a.members)) {
      return b;
    }
    return from_members(g, a.members & b.members);
  }

  bool is_normalised_by(FiniteGroup const& g, Subgroup const& h, Subgroup const& by) {
    for (Elem s : by.gens) {
      for (Elem x : h.gens) {
        if (!h.members.test(g.conj(x, s))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_normal(FiniteGroup const& g, Subgroup const& h) {
    for (Elem s : g.generators()) {
      for (Elem x : h.gens) {
        if (!h.members.test(g.conj(x, s))) {
          return false;
        }
      }
    }
    return true;
  }

  Subgroup normal_closure(FiniteGroup const& g, std::vector<Elem> const& xs, Subgroup const& within) {
    Subgroup h = generate(g, xs);
    bool     grown = true;
    while (grown) {
      grown = false;
      std::vector<Elem> missing;
      for (Elem s : within.gens) {
        for (Elem x : h.gens) {
          Elem const y = g.conj(x, s);
          if (!h.members.test(y)
              && std::find(missing.begin(), missing.end(), y) == missing.end()) {
            missing.push_back(y);
          }
        }
      }
      if (!missing.empty()) {
        h     = *extend(g, h, missing);
        grown = true;
      }
    }
    return h;
  }

  Subgroup normal_closure(FiniteGroup const& g, std::vector<Elem> const& xs) {
    return normal_closure(g, xs, whole_group(g));
  }

  Subgroup conjugate(FiniteGroup const& g, Subgroup const& h, Elem x) {
    Subgroup out{Bitset(g.order()), {}, {}};
    h.members.for_each([&](std::size_t y) { out.members.set(g.conj(static_cast<Elem>(y), x)); });
    for (Elem y : h.gens) {
      out.gens.push_back(g.conj(y, x));
    }
    return out;
  }

  Subgroup normalizer(FiniteGroup const& g, Subgroup const& h) {
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
    return from_members(g, n);
  }

  bool commute(FiniteGroup const& g, Subgroup const& h, Subgroup const& k) {
    for (Elem x : h.gens) {
      for (Elem y : k.gens) {
        if (g.mul(x, y) != g.mul(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteGroup as_group(FiniteGroup const& g, Subgroup const& h, std::string name) {
    std::vector<Permutation> gens;
    for (Elem x : h.gens) {
      gens.push_back(g.element(x));
    }
    GroupSpec spec;
    spec.kind     = GroupKind::subgroup;
    spec.children = {g.spec()};
    if (name.empty()) {
      name = "subgroup of order " + std::to_string(h.order()) + " in " + g.name();
    }
    return FiniteGroup(close(gens, g.degree(), g.order()), std::move(name), std::move(spec));
  }

  CosetAction coset_action(FiniteGroup const& g, Subgroup const& h, std::string name) {
    std::size_t const          n = g.order();
    auto const                 hm = h.members.indices<Elem>();
    std::vector<std::uint32_t> coset_of(n, UINT32_MAX);
    std::vector<Elem>          reps;
    std::vector<Elem>          buf(hm.size());
    auto const&                kern = kernels::active();
    for (Elem x = 0; x < n; ++x) {
      if (coset_of[x] != UINT32_MAX) {
        continue;
      }
      auto const c = static_cast<std::uint32_t>(reps.size());
      reps.push_back(x);
      kern.gather_u32(buf.data(), g.row(x).data(), hm.data(), hm.size());
      for (Elem y : buf) {
        coset_of[y] = c;
      }
    }
    std::size_t const k = reps.size();

    auto action_of = [&](Elem x) {
      std::vector<std::uint32_t> img(k);
      auto const                 row = g.row(x);
      for (std::size_t c = 0; c < k; ++c) {
        img[c] = coset_of[row[reps[c]]];
      }
      return Permutation::unchecked(std::move(img));
    };

    std::vector<Permutation> gens;
    for (Elem s : g.generators()) {
      gens.push_back(action_of(s));
    }
    GroupSpec spec;
    spec.kind     = GroupKind::quotient;
    spec.children = {g.spec()};
    if (name.empty()) {
      name = g.name() + " on cosets of a subgroup of order " + std::to_string(h.order());
    }
    FiniteGroup image(close(gens, k, n), std::move(name), std::move(spec));

    std::vector<Elem> projection(n);
    bool const        normal = is_normal(g, h);
    if (normal) {
      std::vector<Elem> per_coset(k);
      for (std::size_t c = 0; c < k; ++c) {
        per_coset[c] = *image.index_of(action_of(reps[c]));
      }
      for (Elem x = 0; x < n; ++x) {
        projection[x] = per_coset[coset_of[x]];
      }
    } else {
      for (Elem x = 0; x < n; ++x) {
        projection[x] = *image.index_of(action_of(x));
      }
    }
    return CosetAction{std::move(image), std::move(projection), std::move(coset_of)};
  }

  Subgroup preimage(FiniteGroup const&       g,
                    std::vector<Elem> const& projection,
                    Subgroup const&          target) {
    Bitset m(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      if (target.members.test(projection[x])) {
        m.set(x);
      }
    }
    return from_members(g, m);
  }

}  // namespace csg
