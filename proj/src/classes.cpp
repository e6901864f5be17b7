#include "csgroups/classes.hpp"

#include <algorithm>

#include "csgroups/kernels.hpp"

namespace csg {

  ClassProfile::ClassProfile(std::size_t group_order, std::vector<ConjugacyClass> classes)
      : order_(group_order), classes_(std::move(classes)), class_of_(group_order, 0) {
    std::set<std::uint64_t> sizes;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      for (Elem x : classes_[c].members) {
        class_of_[x] = static_cast<std::uint32_t>(c);
      }
      sizes.insert(classes_[c].members.size());
    }
    cs_.assign(sizes.begin(), sizes.end());
  }

  ClassProfile conjugacy_classes(FiniteGroup const& g) {
    std::size_t const           n = g.order();
    std::vector<bool>           seen(n, false);
    std::vector<ConjugacyClass> classes;
    auto const&                 gens = g.generators();
    for (Elem x = 0; x < n; ++x) {
      if (seen[x]) {
        continue;
      }
      ConjugacyClass cls{x, {x}};
      seen[x] = true;
      for (std::size_t i = 0; i < cls.members.size(); ++i) {
        Elem const y = cls.members[i];
        for (Elem s : gens) {
          Elem const z = g.conj(y, s);
          if (!seen[z]) {
            seen[z] = true;
            cls.members.push_back(z);
          }
        }
      }
      std::sort(cls.members.begin(), cls.members.end());
      classes.push_back(std::move(cls));
    }
    return ClassProfile(n, std::move(classes));
  }

  Bitset centralizer(FiniteGroup const& g, Elem x) {
    Bitset c(g.order());
    auto   row = g.row(x);
    auto   col = g.col(x);
    kernels::active().eq_mask_u32(c.data(), row.data(), col.data(), g.order());
    return c;
  }

  std::vector<PrimaryPart> primary_decomposition(FiniteGroup const& g, Elem x) {
    std::vector<PrimaryPart> parts;
    std::uint64_t const      o = g.order_of(x);
    if (o == 1) {
      return parts;
    }
    for (auto const& [q, e] : arithmetic_profile(o).prime_factors) {
      std::uint64_t const qa = ipow(q, e);
      std::uint64_t const m  = o / qa;
      std::uint64_t       u  = 1;
      while ((m * u) % qa != 1 % qa) {
        ++u;
      }
      parts.push_back({q, g.pow(x, m * u), x});
    }
    return parts;
  }

  CompositeSplit composite_split(std::vector<std::uint64_t> const& cs) {
    CompositeSplit out;
    for (auto c : cs) {
      if (c == 1) {
        continue;
      }
      if (is_prime(c)) {
        out.primes.insert(c);
      } else {
        out.composites.insert(c);
      }
    }
    return out;
  }

}  // namespace csg
