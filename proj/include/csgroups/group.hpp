#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csgroups/perm.hpp"

namespace csg {

  enum class GroupKind {
    cyclic,
    symmetric,
    alternating,
    dihedral,
    quaternion8,
    extraspecial_p3,
    frobenius_pq,
    direct_product,
    semidirect_product,
    fixture,
    subgroup,
    quotient,
  };

  // Provenance of a group: which constructor produced it and from what.
  struct GroupSpec {
    GroupKind                  kind = GroupKind::cyclic;
    std::vector<std::int64_t>  params;
    std::vector<GroupSpec>     children;
    std::optional<std::string> fixture_path;

    // Canonical text form, e.g. "sym(3)" or "quaternion8 x frobenius(7,3)".
    std::string to_string() const;
  };

  // A finite group as an explicit element table with its Cayley table.
  // Immutable after construction; safe to share between threads.
  class FiniteGroup {
   public:
    FiniteGroup(ElementTable table, std::string name, GroupSpec spec);

    std::size_t order() const noexcept {
      return n_;
    }
    std::size_t degree() const noexcept {
      return table_.degree();
    }
    std::string const& name() const noexcept {
      return name_;
    }
    GroupSpec const& spec() const noexcept {
      return spec_;
    }
    ElementTable const& table() const noexcept {
      return table_;
    }
    Permutation const& element(Elem i) const noexcept {
      return table_[i];
    }
    std::optional<Elem> index_of(Permutation const& p) const {
      return table_.find(p);
    }

    static constexpr Elem identity() noexcept {
      return 0;
    }

    Elem mul(Elem a, Elem b) const noexcept {
      return right_[static_cast<std::size_t>(a) * n_ + b];
    }
    Elem inv(Elem a) const noexcept {
      return inverse_[a];
    }
    // g^-1 x g
    Elem conj(Elem x, Elem g) const noexcept {
      return mul(mul(inverse_[g], x), g);
    }
    // x^-1 y^-1 x y
    Elem commutator(Elem x, Elem y) const noexcept {
      return mul(mul(inverse_[x], inverse_[y]), mul(x, y));
    }
    Elem pow(Elem x, std::uint64_t k) const noexcept;

    std::uint32_t order_of(Elem x) const noexcept {
      return orders_[x];
    }

    // row(a)[g] = a * g and col(a)[g] = g * a, both contiguous.
    std::span<Elem const> row(Elem a) const noexcept {
      return {right_.data() + static_cast<std::size_t>(a) * n_, n_};
    }
    std::span<Elem const> col(Elem a) const noexcept {
      return {left_.data() + static_cast<std::size_t>(a) * n_, n_};
    }

    // Distinct non-identity generators as element indices.
    std::vector<Elem> const& generators() const noexcept {
      return gens_;
    }

    bool is_abelian() const noexcept;

   private:
    ElementTable               table_;
    std::string                name_;
    GroupSpec                  spec_;
    std::size_t                n_;
    std::vector<Elem>          right_;
    std::vector<Elem>          left_;
    std::vector<Elem>          inverse_;
    std::vector<std::uint32_t> orders_;
    std::vector<Elem>          gens_;
  };

}  // namespace csg
