// AArch64 only. NEON has no gather, so gather_u32 stays scalar here; the
// comparison and bitset kernels are vectorised.

#include "csgroups/kernels.hpp"

#include <arm_neon.h>

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
      static uint32_t const weights_lo[4] = {1, 2, 4, 8};
      uint32x4_t const      w             = vld1q_u32(weights_lo);
      std::size_t const     words         = (n + 63) / 64;
      std::size_t const     full          = n / 64;
      for (std::size_t wi = 0; wi < full; ++wi) {
        std::uint64_t bits = 0;
        for (unsigned k = 0; k < 16; ++k) {
          std::size_t const i  = wi * 64 + k * 4;
          uint32x4_t        eq = vceqq_u32(vld1q_u32(a + i), vld1q_u32(b + i));
          auto const nib = static_cast<std::uint64_t>(vaddvq_u32(vandq_u32(eq, w)));
          bits |= nib << (k * 4);
        }
        out[wi] = bits;
      }
      if (full < words) {
        std::uint64_t bits = 0;
        for (std::size_t i = full * 64; i < n; ++i) {
          bits |= static_cast<std::uint64_t>(a[i] == b[i]) << (i - full * 64);
        }
        out[full] = bits;
      }
    }

    void and_words(std::uint64_t*       dst,
                   std::uint64_t const* a,
                   std::uint64_t const* b,
                   std::size_t          words) {
      std::size_t i = 0;
      for (; i + 2 <= words; i += 2) {
        vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
      }
      for (; i < words; ++i) {
        dst[i] = a[i] & b[i];
      }
    }

    void or_words(std::uint64_t*       dst,
                  std::uint64_t const* a,
                  std::uint64_t const* b,
                  std::size_t          words) {
      std::size_t i = 0;
      for (; i + 2 <= words; i += 2) {
        vst1q_u64(dst + i, vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
      }
      for (; i < words; ++i) {
        dst[i] = a[i] | b[i];
      }
    }

    std::size_t popcount(std::uint64_t const* a, std::size_t words) {
      std::size_t c = 0;
      std::size_t i = 0;
      for (; i + 2 <= words; i += 2) {
        uint8x16_t v = vreinterpretq_u8_u64(vld1q_u64(a + i));
        c += vaddvq_u8(vcntq_u8(v));
      }
      for (; i < words; ++i) {
        c += static_cast<std::size_t>(__builtin_popcountll(a[i]));
      }
      return c;
    }

    std::size_t popcount_and(std::uint64_t const* a,
                             std::uint64_t const* b,
                             std::size_t          words) {
      std::size_t c = 0;
      std::size_t i = 0;
      for (; i + 2 <= words; i += 2) {
        uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        c += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
      }
      for (; i < words; ++i) {
        c += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
      }
      return c;
    }

    bool is_subset(std::uint64_t const* a,
                   std::uint64_t const* b,
                   std::size_t          words) {
      std::size_t i = 0;
      for (; i + 2 <= words; i += 2) {
        uint64x2_t extra = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        if ((vgetq_lane_u64(extra, 0) | vgetq_lane_u64(extra, 1)) != 0) {
          return false;
        }
      }
      for (; i < words; ++i) {
        if ((a[i] & ~b[i]) != 0) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  Table const& neon_table() {
    static Table const t{"neon",
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
