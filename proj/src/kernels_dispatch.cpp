#include "csgroups/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace csg::kernels {

#if defined(CSG_HAVE_AVX2)
  Table const& avx2_table();
#endif
#if defined(CSG_HAVE_NEON)
  Table const& neon_table();
#endif

  Table const* avx2() {
#if defined(CSG_HAVE_AVX2)
    static bool const ok = [] {
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2") != 0;
    }();
    return ok ? &avx2_table() : nullptr;
#else
    return nullptr;
#endif
  }

  Table const* neon() {
#if defined(CSG_HAVE_NEON)
    // Advanced SIMD is mandatory on AArch64.
    return &neon_table();
#else
    return nullptr;
#endif
  }

  namespace {
    Table const* pick() {
      if (char const* env = std::getenv("CSGROUPS_KERNELS")) {
        if (std::string_view(env) == "scalar") {
          return &scalar();
        }
      }
      if (auto const* t = avx2()) {
        return t;
      }
      if (auto const* t = neon()) {
        return t;
      }
      return &scalar();
    }

    std::atomic<Table const*>& slot() {
      static std::atomic<Table const*> s{pick()};
      return s;
    }
  }  // namespace

  Table const& active() {
    return *slot().load(std::memory_order_acquire);
  }

  void set_active(Table const& t) {
    slot().store(&t, std::memory_order_release);
  }

}  // namespace csg::kernels
