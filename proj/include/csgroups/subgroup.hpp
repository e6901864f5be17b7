#pragma once

// Subgroups of an explicit group, stored as element-index bitsets with a
// generating set, and the coset machinery that turns subgroups and quotients
// back into first-class groups.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csgroups/bitset.hpp"
#include "csgroups/group.hpp"

namespace csg {

  struct Subgroup {
    Bitset                   members;
    std::vector<Elem>        gens;
    std::vector<std::string> tags;

    std::size_t order() const {
      return members.count();
    }
    bool contains(Elem x) const {
      return members.test(x);
    }
    bool operator==(Subgroup const& other) const {
      return members == other.members;
    }
  };

  Subgroup trivial_subgroup(FiniteGroup const& g);
  Subgroup whole_group(FiniteGroup const& g);

  // <gens>
  Subgroup generate(FiniteGroup const& g, std::vector<Elem> const& gens);

  // <base, extra>, or nullopt as soon as the closure exceeds `bound` elements.
  std::optional<Subgroup> extend(FiniteGroup const&       g,
                                 Subgroup const&          base,
                                 std::vector<Elem> const& extra,
                                 std::size_t              bound = SIZE_MAX);

  // Generating set picked greedily from a member set that is known to be a
  // subgroup.
  Subgroup from_members(FiniteGroup const& g, Bitset const& members);

  Subgroup join(FiniteGroup const& g, Subgroup const& a, Subgroup const& b);
  Subgroup intersection(FiniteGroup const& g, Subgroup const& a, Subgroup const& b);

  // Normalised by every generator of g.
  bool is_normal(FiniteGroup const& g, Subgroup const& h);
  // Normalised by every generator of `by` (a subgroup of g).
  bool is_normalised_by(FiniteGroup const& g, Subgroup const& h, Subgroup const& by);

  // Smallest subgroup of `within` containing `xs` and normalised by `within`.
  Subgroup normal_closure(FiniteGroup const& g, std::vector<Elem> const& xs, Subgroup const& within);
  Subgroup normal_closure(FiniteGroup const& g, std::vector<Elem> const& xs);

  // x^-1 H x
  Subgroup conjugate(FiniteGroup const& g, Subgroup const& h, Elem x);
  Subgroup normalizer(FiniteGroup const& g, Subgroup const& h);

  // Every element of h commutes with every element of k.
  bool commute(FiniteGroup const& g, Subgroup const& h, Subgroup const& k);

  // The subgroup as a group in its own right, on the ambient points.
  FiniteGroup as_group(FiniteGroup const& g, Subgroup const& h, std::string name = {});

  struct CosetAction {
    FiniteGroup       image;
    // projection[x] is the image element of x.
    std::vector<Elem> projection;
    // coset_of[x] is the index of the left coset x H.
    std::vector<std::uint32_t> coset_of;
  };

  // Action of g on the left cosets of h by left multiplication. The kernel is
  // the core of h.
  CosetAction coset_action(FiniteGroup const& g, Subgroup const& h, std::string name = {});

  // Subgroup of g mapping into `target` (a subgroup of image).
  Subgroup preimage(FiniteGroup const&       g,
                    std::vector<Elem> const& projection,
                    Subgroup const&          target);

}  // namespace csg
