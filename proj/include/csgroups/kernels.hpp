#pragma once

// Data-parallel inner loops used by the group engine.
//
// Every kernel has a scalar reference implementation. Vector variants (AVX2 on
// x86-64, NEON on AArch64) are compiled into separate translation units and
// selected once at runtime from the CPU feature set. All variants must agree
// bit-for-bit with the scalar reference; tests/test_kernels.cpp enforces it.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace csg::kernels {

  struct Table {
    std::string_view name;

    // out[i] = src[idx[i]] for i < n. Permutation composition and Cayley-row
    // lookups are both this operation.
    void (*gather_u32)(std::uint32_t*       out,
                       std::uint32_t const* src,
                       std::uint32_t const* idx,
                       std::size_t          n);

    // Bit i of out is set iff a[i] == b[i]. `out` holds ceil(n / 64) words;
    // bits at positions >= n are cleared.
    void (*eq_mask_u32)(std::uint64_t*       out,
                        std::uint32_t const* a,
                        std::uint32_t const* b,
                        std::size_t          n);

    void (*and_words)(std::uint64_t*       dst,
                      std::uint64_t const* a,
                      std::uint64_t const* b,
                      std::size_t          words);
    void (*or_words)(std::uint64_t*       dst,
                     std::uint64_t const* a,
                     std::uint64_t const* b,
                     std::size_t          words);

    std::size_t (*popcount)(std::uint64_t const* a, std::size_t words);
    std::size_t (*popcount_and)(std::uint64_t const* a,
                                std::uint64_t const* b,
                                std::size_t          words);

    // True iff every bit set in a is also set in b.
    bool (*is_subset)(std::uint64_t const* a,
                      std::uint64_t const* b,
                      std::size_t          words);
  };

  Table const& scalar();

  // nullptr when the variant was not compiled in or the CPU lacks the feature.
  Table const* avx2();
  Table const* neon();

  // The table used by the engine. Chosen on first call: the widest supported
  // variant, unless CSGROUPS_KERNELS=scalar is set in the environment.
  Table const& active();

  // Overrides the active table (benchmarks and equivalence tests).
  void set_active(Table const& t);

}  // namespace csg::kernels
