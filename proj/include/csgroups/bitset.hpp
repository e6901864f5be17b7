#pragma once

// Fixed-size bitset over element indices of one group. Subgroups,
// centralizers and classes are all stored this way; the word-level work goes
// through the dispatched kernels.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "csgroups/kernels.hpp"

namespace csg {

  class Bitset {
   public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const noexcept {
      return n_;
    }

    bool test(std::size_t i) const noexcept {
      return (words_[i >> 6] >> (i & 63)) & 1U;
    }
    void set(std::size_t i) noexcept {
      words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) noexcept {
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void set_all() {
      for (auto& w : words_) {
        w = ~std::uint64_t{0};
      }
      trim();
    }

    std::size_t count() const {
      return kernels::active().popcount(words_.data(), words_.size());
    }

    std::size_t count_and(Bitset const& other) const {
      return kernels::active().popcount_and(words_.data(), other.words_.data(), words_.size());
    }

    bool is_subset_of(Bitset const& other) const {
      return kernels::active().is_subset(words_.data(), other.words_.data(), words_.size());
    }

    Bitset& operator&=(Bitset const& other) {
      kernels::active().and_words(words_.data(), words_.data(), other.words_.data(), words_.size());
      return *this;
    }

    Bitset& operator|=(Bitset const& other) {
      kernels::active().or_words(words_.data(), words_.data(), other.words_.data(), words_.size());
      return *this;
    }

    friend Bitset operator&(Bitset a, Bitset const& b) {
      a &= b;
      return a;
    }
    friend Bitset operator|(Bitset a, Bitset const& b) {
      a |= b;
      return a;
    }

    bool operator==(Bitset const&) const = default;

    // Calls f(i) for every set bit, ascending.
    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
          auto const b = static_cast<std::size_t>(std::countr_zero(bits));
          f(w * 64 + b);
          bits &= bits - 1;
        }
      }
    }

    template <typename T = std::uint32_t>
    std::vector<T> indices() const {
      std::vector<T> out;
      out.reserve(count());
      for_each([&out](std::size_t i) { out.push_back(static_cast<T>(i)); });
      return out;
    }

    std::uint64_t* data() noexcept {
      return words_.data();
    }
    std::uint64_t const* data() const noexcept {
      return words_.data();
    }
    std::size_t word_count() const noexcept {
      return words_.size();
    }

    std::size_t hash() const noexcept {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }

   private:
    void trim() {
      if (n_ % 64 != 0 && !words_.empty()) {
        words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
      }
    }

    std::size_t                n_ = 0;
    std::vector<std::uint64_t> words_;
  };

  struct BitsetHash {
    std::size_t operator()(Bitset const& b) const noexcept {
      return b.hash();
    }
  };

}  // namespace csg
