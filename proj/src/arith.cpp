#include "csgroups/arith.hpp"

namespace csg {

  bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  std::set<std::uint64_t> ArithmeticProfile::primes() const {
    std::set<std::uint64_t> out;
    for (auto const& [p, e] : prime_factors) {
      out.insert(p);
    }
    return out;
  }

  ArithmeticProfile arithmetic_profile(std::uint64_t n) {
    ArithmeticProfile prof;
    prof.value      = n;
    std::uint64_t m = n;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      while (m % d == 0) {
        ++prof.prime_factors[d];
        m /= d;
      }
    }
    if (m > 1) {
      ++prof.prime_factors[m];
    }
    unsigned total = 0;
    for (auto const& [p, e] : prof.prime_factors) {
      total += e;
      prof.p_part[p] = ipow(p, e);
    }
    prof.is_composite = total >= 2;
    return prof;
  }

  std::set<std::uint64_t> prime_divisors(std::uint64_t n) {
    return arithmetic_profile(n).primes();
  }

  std::uint64_t p_part(std::uint64_t n, std::uint64_t p) noexcept {
    std::uint64_t r = 1;
    while (n != 0 && n % p == 0) {
      n /= p;
      r *= p;
    }
    return r;
  }

  bool is_prime_power(std::uint64_t n, std::uint64_t* prime, unsigned* exp) {
    if (n < 2) {
      return false;
    }
    auto const prof = arithmetic_profile(n);
    if (prof.prime_factors.size() != 1) {
      return false;
    }
    if (prime != nullptr) {
      *prime = prof.prime_factors.begin()->first;
    }
    if (exp != nullptr) {
      *exp = prof.prime_factors.begin()->second;
    }
    return true;
  }

  bool is_composite(std::uint64_t n) noexcept {
    return n > 3 && !is_prime(n);
  }

  bool is_pi_number(std::uint64_t n, std::set<std::uint64_t> const& primes) {
    for (auto p : prime_divisors(n)) {
      if (!primes.contains(p)) {
        return false;
      }
    }
    return true;
  }

  std::uint64_t ipow(std::uint64_t base, unsigned exp) noexcept {
    std::uint64_t r = 1;
    while (exp-- != 0) {
      r *= base;
    }
    return r;
  }

}  // namespace csg
