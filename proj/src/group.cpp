#include "csgroups/group.hpp"

#include <algorithm>

namespace csg {

  namespace {
    std::string join_params(std::vector<std::int64_t> const& ps) {
      std::string out;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i != 0) {
          out += ',';
        }
        out += std::to_string(ps[i]);
      }
      return out;
    }
  }  // namespace

  std::string GroupSpec::to_string() const {
    switch (kind) {
      case GroupKind::cyclic:
        return "cyclic(" + join_params(params) + ")";
      case GroupKind::symmetric:
        return "sym(" + join_params(params) + ")";
      case GroupKind::alternating:
        return "alt(" + join_params(params) + ")";
      case GroupKind::dihedral:
        return "dihedral(" + join_params(params) + ")";
      case GroupKind::quaternion8:
        return "quaternion8";
      case GroupKind::extraspecial_p3:
        return "extraspecial(" + join_params(params) + ")";
      case GroupKind::frobenius_pq:
        return "frobenius(" + join_params(params) + ")";
      case GroupKind::direct_product: {
        std::string out;
        for (std::size_t i = 0; i < children.size(); ++i) {
          if (i != 0) {
            out += " x ";
          }
          bool const wrap = children[i].kind == GroupKind::direct_product
                            || children[i].kind == GroupKind::semidirect_product;
          out += wrap ? "(" + children[i].to_string() + ")" : children[i].to_string();
        }
        return out;
      }
      case GroupKind::semidirect_product:
        if (params.size() == 1) {
          return "heisext(" + join_params(params) + ")";
        }
        return children.size() == 2
                   ? "(" + children[0].to_string() + ") : (" + children[1].to_string() + ")"
                   : "semidirect";
      case GroupKind::fixture:
        return "fixture:" + fixture_path.value_or("?");
      case GroupKind::subgroup:
        return "subgroup";
      case GroupKind::quotient:
        return "quotient";
    }
    return "?";
  }

  FiniteGroup::FiniteGroup(ElementTable table, std::string name, GroupSpec spec)
      : table_(std::move(table)),
        name_(std::move(name)),
        spec_(std::move(spec)),
        n_(table_.size()),
        right_(n_ * n_),
        left_(n_ * n_),
        inverse_(n_),
        orders_(n_) {
    // Row a is filled in Schreier-tree order: a * h = (a * parent(h)) * s.
    for (std::size_t a = 0; a < n_; ++a) {
      Elem* row = right_.data() + a * n_;
      row[0]    = static_cast<Elem>(a);
      for (Elem h = 1; h < n_; ++h) {
        row[h] = table_.times_generator(row[table_.parent(h)], table_.via(h));
        if (row[h] == 0) {
          inverse_[a] = h;
        }
      }
    }
    constexpr std::size_t block = 64;
    for (std::size_t i0 = 0; i0 < n_; i0 += block) {
      for (std::size_t j0 = 0; j0 < n_; j0 += block) {
        std::size_t const i1 = std::min(n_, i0 + block);
        std::size_t const j1 = std::min(n_, j0 + block);
        for (std::size_t i = i0; i < i1; ++i) {
          for (std::size_t j = j0; j < j1; ++j) {
            left_[j * n_ + i] = right_[i * n_ + j];
          }
        }
      }
    }
    // Element orders are lcms of cycle lengths; walking powers through the
    // table would cost one cache miss per power.
    for (std::size_t a = 0; a < n_; ++a) {
      orders_[a] = static_cast<std::uint32_t>(element_order(table_[static_cast<Elem>(a)]));
    }
    for (std::size_t s = 0; s < table_.generators().size(); ++s) {
      Elem const g = table_.times_generator(0, s);
      if (g != 0 && std::find(gens_.begin(), gens_.end(), g) == gens_.end()) {
        gens_.push_back(g);
      }
    }
  }

  Elem FiniteGroup::pow(Elem x, std::uint64_t k) const noexcept {
    k %= orders_[x];
    Elem result = 0;
    Elem base   = x;
    while (k != 0) {
      if (k & 1U) {
        result = mul(result, base);
      }
      base = mul(base, base);
      k >>= 1U;
    }
    return result;
  }

  bool FiniteGroup::is_abelian() const noexcept {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      for (std::size_t j = i + 1; j < gens_.size(); ++j) {
        if (mul(gens_[i], gens_[j]) != mul(gens_[j], gens_[i])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace csg
