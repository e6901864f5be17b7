#include "csgroups/perm.hpp"

#include <numeric>

#include "csgroups/errors.hpp"
#include "csgroups/kernels.hpp"

namespace csg {

  Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size() || seen[x]) {
        throw InvalidPermutation("image list is not a bijection on {0, ..., "
                                 + std::to_string(images_.size()) + "-1}");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::unchecked(std::vector<std::uint32_t> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  Permutation Permutation::identity(std::size_t deg) {
    Permutation p;
    p.images_.resize(deg);
    std::iota(p.images_.begin(), p.images_.end(), std::uint32_t{0});
    return p;
  }

  Permutation Permutation::from_cycles(std::size_t                                    deg,
                                       std::vector<std::vector<std::uint32_t>> const& cycles) {
    Permutation       p = identity(deg);
    std::vector<bool> used(deg, false);
    for (auto const& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        auto const a = cyc[i];
        if (a >= deg) {
          throw InvalidPermutation("point " + std::to_string(a + 1) + " exceeds degree "
                                   + std::to_string(deg));
        }
        if (used[a]) {
          throw InvalidPermutation("point " + std::to_string(a + 1)
                                   + " appears twice in cycle notation");
        }
        used[a]       = true;
        p.images_[a] = cyc[(i + 1) % cyc.size()];
      }
    }
    return p;
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::string Permutation::to_cycle_string() const {
    std::string       out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) {
        continue;
      }
      out += '(';
      std::size_t j     = i;
      bool        first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) {
          out += ',';
        }
        out += std::to_string(j + 1);
        first = false;
        j     = images_[j];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  Permutation compose(Permutation const& p, Permutation const& q) {
    if (p.degree() != q.degree()) {
      throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(p.degree())
                           + " and " + std::to_string(q.degree()));
    }
    std::vector<std::uint32_t> out(p.degree());
    kernels::active().gather_u32(out.data(), p.images().data(), q.images().data(), out.size());
    return Permutation::unchecked(std::move(out));
  }

  Permutation inverse(Permutation const& p) {
    std::vector<std::uint32_t> out(p.degree());
    for (std::uint32_t i = 0; i < p.degree(); ++i) {
      out[p(i)] = i;
    }
    return Permutation::unchecked(std::move(out));
  }

  std::uint64_t element_order(Permutation const& p) {
    std::uint64_t     ord = 1;
    std::vector<bool> seen(p.degree(), false);
    for (std::uint32_t i = 0; i < p.degree(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::uint64_t len = 0;
      for (std::uint32_t j = i; !seen[j]; j = p(j)) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  std::optional<Elem> ElementTable::find(Permutation const& p) const {
    auto it = lookup_.find(p);
    if (it == lookup_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ElementTable close(std::vector<Permutation> const& generators,
                     std::size_t                     degree,
                     std::size_t                     cap) {
    if (cap == 0) {
      throw ParameterError("order cap must be at least 1");
    }
    if (!generators.empty()) {
      degree = generators.front().degree();
      for (auto const& g : generators) {
        if (g.degree() != degree) {
          throw DegreeMismatch("generators have degrees " + std::to_string(degree) + " and "
                               + std::to_string(g.degree()));
        }
      }
    }

    ElementTable t;
    t.degree_     = degree;
    t.generators_ = generators;
    auto const k  = generators.size();

    auto add = [&t, cap](Permutation p, Elem parent, std::uint32_t via) -> Elem {
      auto const idx = static_cast<Elem>(t.elements_.size());
      if (t.elements_.size() >= cap) {
        throw OrderCapExceeded(cap, t.elements_.size() + 1);
      }
      t.lookup_.emplace(p, idx);
      t.elements_.push_back(std::move(p));
      t.parent_.push_back(parent);
      t.via_.push_back(via);
      return idx;
    };

    add(Permutation::identity(degree), 0, 0);
    std::vector<std::uint32_t> buf(degree);
    auto const&                kern = kernels::active();
    for (std::size_t x = 0; x < t.elements_.size(); ++x) {
      for (std::size_t s = 0; s < k; ++s) {
        kern.gather_u32(buf.data(),
                        t.elements_[x].images().data(),
                        generators[s].images().data(),
                        degree);
        Permutation candidate = Permutation::unchecked(buf);
        Elem idx;
        if (auto it = t.lookup_.find(candidate); it != t.lookup_.end()) {
          idx = it->second;
        } else {
          idx = add(std::move(candidate), static_cast<Elem>(x), static_cast<std::uint32_t>(s));
        }
        t.step_.push_back(idx);
      }
    }
    return t;
  }

}  // namespace csg
