#pragma once

// Permutations on {0, ..., deg-1} and breadth-first closure of a generating
// set into an explicit element table.
//
// Composition convention: compose(p, q) is "q first, then p", i.e. the image
// of i is p(q(i)). The group product a * b used everywhere else in the engine
// is compose(a, b).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace csg {

  // Index of an element inside its group's element table. Index 0 is always
  // the identity.
  using Elem = std::uint32_t;

  inline constexpr std::size_t default_order_cap = 5000;

  class Permutation {
   public:
    Permutation() = default;

    // Throws InvalidPermutation unless `images` is a bijection on
    // {0, ..., images.size()-1}.
    explicit Permutation(std::vector<std::uint32_t> images);

    static Permutation identity(std::size_t deg);

    // No bijection check; for images produced by composing or inverting
    // valid permutations.
    static Permutation unchecked(std::vector<std::uint32_t> images);

    // Builds a permutation of degree `deg` from disjoint cycles over 0-based
    // points. Throws InvalidPermutation on repeated or out-of-range points.
    static Permutation from_cycles(std::size_t                                    deg,
                                   std::vector<std::vector<std::uint32_t>> const& cycles);

    std::size_t degree() const noexcept {
      return images_.size();
    }
    std::uint32_t operator()(std::uint32_t i) const noexcept {
      return images_[i];
    }
    std::span<std::uint32_t const> images() const noexcept {
      return images_;
    }

    bool is_identity() const noexcept;

    // Disjoint-cycle notation over 1-based points, "()" for the identity.
    std::string to_cycle_string() const;

    bool operator==(Permutation const&) const = default;

   private:
    std::vector<std::uint32_t> images_;
  };

  struct PermutationHash {
    std::size_t operator()(Permutation const& p) const noexcept;
  };

  // i -> p(q(i)). Throws DegreeMismatch if the degrees differ.
  Permutation compose(Permutation const& p, Permutation const& q);
  Permutation inverse(Permutation const& p);

  // Least k >= 1 with p^k = 1 (lcm of the cycle lengths).
  std::uint64_t element_order(Permutation const& p);

  // Explicit list of the elements of <generators>, in breadth-first order of
  // right multiplication by the generators, together with the Schreier tree
  // and the right-multiplication-by-generator table the Cayley table is built
  // from.
  class ElementTable {
   public:
    std::size_t degree() const noexcept {
      return degree_;
    }
    std::size_t size() const noexcept {
      return elements_.size();
    }
    Permutation const& operator[](Elem i) const noexcept {
      return elements_[i];
    }
    std::vector<Permutation> const& elements() const noexcept {
      return elements_;
    }
    std::optional<Elem> find(Permutation const& p) const;

    std::vector<Permutation> const& generators() const noexcept {
      return generators_;
    }

    // elements()[i] == elements()[parent(i)] * generators()[via(i)] for i > 0.
    Elem parent(Elem i) const noexcept {
      return parent_[i];
    }
    std::uint32_t via(Elem i) const noexcept {
      return via_[i];
    }

    // Index of elements()[x] * generators()[s].
    Elem times_generator(Elem x, std::size_t s) const noexcept {
      return step_[static_cast<std::size_t>(x) * generators_.size() + s];
    }

   private:
    friend ElementTable close(std::vector<Permutation> const& generators,
                              std::size_t                     degree,
                              std::size_t                     cap);

    std::size_t                                                degree_ = 0;
    std::vector<Permutation>                                   elements_;
    std::unordered_map<Permutation, Elem, PermutationHash>     lookup_;
    std::vector<Permutation>                                   generators_;
    std::vector<Elem>                                          parent_;
    std::vector<std::uint32_t>                                 via_;
    std::vector<Elem>                                          step_;
  };

  // Closure of the generators under composition. `degree` is only consulted
  // when `generators` is empty. Throws OrderCapExceeded once more than `cap`
  // elements have been found, and DegreeMismatch on mixed degrees.
  ElementTable close(std::vector<Permutation> const& generators,
                     std::size_t                     degree,
                     std::size_t                     cap = default_order_cap);

}  // namespace csg
