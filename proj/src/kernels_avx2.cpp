// Compiled with -mavx2. Nothing here may run before avx2() has confirmed CPU
// support.

#include "csgroups/kernels.hpp"

#include <immintrin.h>

namespace csg::kernels {

  namespace {

    void gather_u32(std::uint32_t*       out,
                    std::uint32_t const* src,
                    std::uint32_t const* idx,
                    std::size_t          n) {
      auto const* base = reinterpret_cast<int const*>(src);
      std::size_t i    = 0;
      for (; i + 8 <= n; i += 8) {
        __m256i vi = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(idx + i));
        __m256i v  = _mm256_i32gather_epi32(base, vi, 4);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
      }
      for (; i < n; ++i) {
        out[i] = src[idx[i]];
      }
    }

    void eq_mask_u32(std::uint64_t*       out,
                     std::uint32_t const* a,
                     std::uint32_t const* b,
                     std::size_t          n) {
      std::size_t const words = (n + 63) / 64;
      std::size_t const full  = n / 64;
      for (std::size_t w = 0; w < full; ++w) {
        std::uint64_t bits = 0;
        for (unsigned k = 0; k < 8; ++k) {
          std::size_t const i  = w * 64 + k * 8;
          __m256i           va = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(a + i));
          __m256i           vb = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(b + i));
          __m256i           eq = _mm256_cmpeq_epi32(va, vb);
          auto const m = static_cast<std::uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
          bits |= static_cast<std::uint64_t>(m) << (k * 8);
        }
        out[w] = bits;
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
      for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(va, vb));
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
      for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(va, vb));
      }
      for (; i < words; ++i) {
        dst[i] = a[i] | b[i];
      }
    }

    // Nibble-table popcount (Mula); per-byte counts are summed with SAD.
    inline __m256i popcount_bytes(__m256i v) {
      __m256i const lut  = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                           0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
      __m256i const low  = _mm256_set1_epi8(0x0f);
      __m256i       lo   = _mm256_and_si256(v, low);
      __m256i       hi   = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
      __m256i       cnt  = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                    _mm256_shuffle_epi8(lut, hi));
      return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
    }

    inline std::size_t hsum_epi64(__m256i v) {
      __m128i s = _mm_add_epi64(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
      return static_cast<std::size_t>(_mm_cvtsi128_si64(s))
             + static_cast<std::size_t>(_mm_extract_epi64(s, 1));
    }

    std::size_t popcount(std::uint64_t const* a, std::size_t words) {
      __m256i     acc = _mm256_setzero_si256();
      std::size_t i   = 0;
      for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(a + i));
        acc        = _mm256_add_epi64(acc, popcount_bytes(va));
      }
      std::size_t c = hsum_epi64(acc);
      for (; i < words; ++i) {
        c += static_cast<std::size_t>(__builtin_popcountll(a[i]));
      }
      return c;
    }

    std::size_t popcount_and(std::uint64_t const* a,
                             std::uint64_t const* b,
                             std::size_t          words) {
      __m256i     acc = _mm256_setzero_si256();
      std::size_t i   = 0;
      for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(b + i));
        acc        = _mm256_add_epi64(acc, popcount_bytes(_mm256_and_si256(va, vb)));
      }
      std::size_t c = hsum_epi64(acc);
      for (; i < words; ++i) {
        c += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
      }
      return c;
    }

    bool is_subset(std::uint64_t const* a,
                   std::uint64_t const* b,
                   std::size_t          words) {
      std::size_t i = 0;
      for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<__m256i const*>(b + i));
        // testc(b, a) is 1 iff (~b & a) == 0.
        if (!_mm256_testc_si256(vb, va)) {
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

  Table const& avx2_table() {
    static Table const t{"avx2",
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
