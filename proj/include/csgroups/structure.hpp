#pragma once

// Structural subgroups of an explicit group: center, derived and lower
// central series, Sylow subgroups and O_p, the Fitting series, quotients,
// normal subgroup enumeration, Hall subgroups, Frobenius detection and
// stripping of abelian direct factors.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "csgroups/classes.hpp"
#include "csgroups/subgroup.hpp"

namespace csg {

  inline constexpr std::size_t default_normal_subgroup_limit = 10000;
  inline constexpr std::size_t default_search_limit          = 20000;

  Subgroup center(FiniteGroup const& g);

  // [H, H] for a subgroup H.
  Subgroup derived_subgroup(FiniteGroup const& g, Subgroup const& h);

  struct DerivedSeries {
    std::vector<Subgroup> series;  // G first, stops at the first repeat
    bool                  soluble = false;
  };
  DerivedSeries derived_series(FiniteGroup const& g);

  // gamma_1 = G, gamma_{i+1} = [gamma_i, G], until it stabilises.
  std::vector<Subgroup> lower_central_series(FiniteGroup const& g);

  // Normaliser ascent. Trivial when p does not divide |G|.
  Subgroup sylow(FiniteGroup const& g, std::uint64_t p);

  // O_p(G): intersection of the conjugates of one Sylow p-subgroup.
  Subgroup core_p(FiniteGroup const& g, std::uint64_t p);

  Subgroup fitting(FiniteGroup const& g);
  Subgroup fitting2(FiniteGroup const& g);

  // G/N as a permutation group on the cosets of N. Throws ParameterError when
  // N is not normal.
  CosetAction quotient(FiniteGroup const& g, Subgroup const& n);

  // Every normal subgroup, ascending by order and then by member set. Throws
  // LimitExceeded when more than `limit` are found.
  std::vector<Subgroup> normal_subgroups(FiniteGroup const& g,
                                         std::size_t limit = default_normal_subgroup_limit);

  // Every subgroup of an abelian subgroup `a`, as joins of cyclic subgroups,
  // descending by order. Throws LimitExceeded past `limit`.
  std::vector<Subgroup> abelian_subgroups(FiniteGroup const& g,
                                          Subgroup const&    a,
                                          std::size_t        limit = default_normal_subgroup_limit);

  bool is_pi_element(FiniteGroup const& g, Elem x, std::set<std::uint64_t> const& primes);

  // A subgroup of order |G|_pi. The search starts from a Sylow subgroup for
  // the largest prime-power part (every Hall subgroup has a conjugate
  // containing it) and adds pi-elements depth first. nullopt when the search
  // is exhausted; LimitExceeded after `limit` visited subgroups.
  std::optional<Subgroup> hall(FiniteGroup const&             g,
                               std::set<std::uint64_t> const& primes,
                               std::size_t                    limit = default_search_limit);

  bool is_nilpotent(FiniteGroup const& g);

  // Length of the lower central series; 0 for the trivial group. Throws
  // NotNilpotent.
  unsigned nilpotency_class(FiniteGroup const& g);

  struct FrobeniusVerdict {
    bool                    is_frobenius = false;
    std::optional<Subgroup> kernel;
    std::optional<Subgroup> complement;
  };

  // Kernel condition: 1 < K < Q normal, (|K|, |Q:K|) = 1 and C_Q(k) <= K for
  // every non-identity k in K. The fast path only tries K = F(Q), which is
  // the kernel whenever Q is Frobenius; the exhaustive path tries every
  // normal subgroup.
  enum class FrobeniusSearch { fitting_only, exhaustive };
  FrobeniusVerdict is_frobenius(FiniteGroup const& q,
                                FrobeniusSearch    mode  = FrobeniusSearch::fitting_only,
                                std::size_t        limit = default_normal_subgroup_limit);

  // Does K (normal in Q) satisfy the kernel condition? A complement is not
  // searched for.
  bool is_frobenius_kernel(FiniteGroup const& q, Subgroup const& k);

  struct AbelianSplit {
    Subgroup core;      // H with G = H x A
    Subgroup abelian;   // A <= Z(G), of maximal order
  };

  // Largest A <= Z(G) with a complement. Complements of a central A contain
  // G' and are automatically normal, so they are found as preimages of
  // subgroups of G/G' meeting the image of A trivially.
  AbelianSplit strip_abelian_factors(FiniteGroup const& g,
                                     std::size_t        limit = default_normal_subgroup_limit);

  // Is g = a x b as an internal direct product?
  bool is_direct_product(FiniteGroup const& g, Subgroup const& a, Subgroup const& b);

  struct StructureReport {
    Subgroup                          center;
    DerivedSeries                     derived;
    Subgroup                          fitting;
    Subgroup                          fitting2;
    std::map<std::uint64_t, Subgroup> sylows;
    std::optional<unsigned>           nilpotency_class;
  };

  // Lazily computed, memoised facts about one group. Not thread-safe; each
  // worker owns its own Analysis.
  class Analysis {
   public:
    explicit Analysis(FiniteGroup const& g,
                      std::size_t        normal_limit = default_normal_subgroup_limit);

    FiniteGroup const& group() const noexcept {
      return g_;
    }
    std::size_t normal_limit() const noexcept {
      return normal_limit_;
    }

    ClassProfile const&          profile();
    CompositeSplit const&        split();
    Bitset const&                centralizer_of(Elem x);
    Subgroup const&              center();
    DerivedSeries const&         derived();
    Subgroup const&              sylow(std::uint64_t p);
    Subgroup const&              core_p(std::uint64_t p);
    Subgroup const&              fitting();
    Subgroup const&              fitting2();
    std::vector<Subgroup> const& normal_subgroups();
    AbelianSplit const&          stripped();
    bool                         soluble() {
      return derived().soluble;
    }
    StructureReport report();

   private:
    FiniteGroup const&                     g_;
    std::size_t                            normal_limit_;
    std::optional<ClassProfile>            profile_;
    std::optional<CompositeSplit>          split_;
    std::vector<std::optional<Bitset>>     centralizers_;
    std::optional<Subgroup>                center_;
    std::optional<DerivedSeries>           derived_;
    std::map<std::uint64_t, Subgroup>      sylows_;
    std::map<std::uint64_t, Subgroup>      cores_;
    std::optional<Subgroup>                fitting_;
    std::optional<Subgroup>                fitting2_;
    std::optional<std::vector<Subgroup>>   normals_;
    std::optional<AbelianSplit>            stripped_;
  };

}  // namespace csg
