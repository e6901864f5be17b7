#pragma once

// Conjugacy classes, centralizers, class sizes and primary decomposition.

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "csgroups/arith.hpp"
#include "csgroups/bitset.hpp"
#include "csgroups/group.hpp"

namespace csg {

  struct ConjugacyClass {
    Elem              representative;  // smallest element index in the class
    std::vector<Elem> members;         // ascending
  };

  class ClassProfile {
   public:
    ClassProfile() = default;
    ClassProfile(std::size_t group_order, std::vector<ConjugacyClass> classes);

    std::size_t group_order() const noexcept {
      return order_;
    }
    std::vector<ConjugacyClass> const& classes() const noexcept {
      return classes_;
    }
    std::size_t class_index(Elem x) const noexcept {
      return class_of_[x];
    }
    ConjugacyClass const& class_of(Elem x) const noexcept {
      return classes_[class_of_[x]];
    }

    // |x^G|
    std::uint64_t class_size_of(Elem x) const noexcept {
      return classes_[class_of_[x]].members.size();
    }
    // |C_G(x)| = |G| / |x^G|
    std::uint64_t centralizer_order_of(Elem x) const noexcept {
      return order_ / class_size_of(x);
    }

    // cs(G), ascending.
    std::vector<std::uint64_t> const& cs() const noexcept {
      return cs_;
    }

   private:
    std::size_t                 order_ = 0;
    std::vector<ConjugacyClass> classes_;
    std::vector<std::uint32_t>  class_of_;
    std::vector<std::uint64_t>  cs_;
  };

  // Orbits of G acting on itself by conjugation, found by conjugating with
  // generators only.
  ClassProfile conjugacy_classes(FiniteGroup const& g);

  // C_G(x) as a set of element indices.
  Bitset centralizer(FiniteGroup const& g, Elem x);

  struct PrimaryPart {
    std::uint64_t prime;
    Elem          part;
    Elem          of_element;
  };

  // One part per prime dividing o(x): the q-part is x^(m u) where
  // m = o(x) / o(x)_q and u is the inverse of m modulo o(x)_q. Parts are
  // ordered by prime; the identity has no parts.
  std::vector<PrimaryPart> primary_decomposition(FiniteGroup const& g, Elem x);

  struct CompositeSplit {
    std::set<std::uint64_t> primes;
    std::set<std::uint64_t> composites;
  };

  // Partition of cs \ {1} into prime and composite class sizes.
  CompositeSplit composite_split(std::vector<std::uint64_t> const& cs);
  inline CompositeSplit composite_split(ClassProfile const& profile) {
    return composite_split(profile.cs());
  }

}  // namespace csg
