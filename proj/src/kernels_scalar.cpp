#include "csgroups/kernels.hpp"

#include <bit>

namespace csg::kernels {

  namespace {

    void gather_u32(std::uint32_t*       out,
                    std::uint32_t const* src,
                    std::uint32_t const* idx,
                    std::size_t          n) {
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = src[idx[i]];
      }
    }

    void eq_mask_u32(std::uint64_t*       out,
                     std::uint32_t const* a,
                     std::uint32_t const* b,
                     std::size_t          n) {
      std::size_t const words = (n + 63) / 64;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t     bits = 0;
        std::size_t const lo   = w * 64;
        std::size_t const hi   = lo + 64 < n ? lo + 64 : n;
        for (std::size_t i = lo; i < hi; ++i) {
          bits |= static_cast<std::uint64_t>(a[i] == b[i]) << (i - lo);
        }
        out[w] = bits;
      }
    }

    void and_words(std::uint64_t*       dst,
                   std::uint64_t const* a,
                   std::uint64_t const* b,
                   std::size_t          words) {
      for (std::size_t i = 0; i < words; ++i) {
        dst[i] = a[i] & b[i];
      }
    }

    void or_words(std::uint64_t*       dst,
                  std::uint64_t const* a,
                  std::uint64_t const* b,
                  std::size_t          words) {
      for (std::size_t i = 0; i < words; ++i) {
        dst[i] = a[i] | b[i];
      }
    }

    std::size_t popcount(std::uint64_t const* a, std::size_t words) {
      std::size_t c = 0;
      for (std::size_t i = 0; i < words; ++i) {
        c += static_cast<std::size_t>(std::popcount(a[i]));
      }
      return c;
    }

    std::size_t popcount_and(std::uint64_t const* a,
                             std::uint64_t const* b,
                             std::size_t          words) {
      std::size_t c = 0;
      for (std::size_t i = 0; i < words; ++i) {
        c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
      }
      return c;
    }

    bool is_subset(std::uint64_t const* a,
                   std::uint64_t const* b,
                   std::size_t          words) {
      for (std::size_t i = 0; i < words; ++i) {
        if ((a[i] & ~b[i]) != 0) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  Table const& scalar() {
    static Table const t{"scalar",
                         &gather_u32,
                         &eq_mask_u32,
                         &and_words,
                         &or_words,
                         &popcount,
                         &popcount_and,
                         &is_subset};
    return t;
  }

}  // namespace csg::kernels
