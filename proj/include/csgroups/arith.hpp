#pragma once

// Integer arithmetic on class sizes and group orders: factorisation by trial
// division, p-parts, compositeness.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace csg {

  bool is_prime(std::uint64_t n) noexcept;

  struct ArithmeticProfile {
    std::uint64_t value = 1;
    // prime -> exponent, ascending by prime
    std::map<std::uint64_t, unsigned> prime_factors;
    bool                              is_composite = false;
    // prime -> largest power of that prime dividing value
    std::map<std::uint64_t, std::uint64_t> p_part;

    std::set<std::uint64_t> primes() const;
  };

  ArithmeticProfile arithmetic_profile(std::uint64_t n);

  // pi(n): the prime divisors of n.
  std::set<std::uint64_t> prime_divisors(std::uint64_t n);

  // Largest power of p dividing n.
  std::uint64_t p_part(std::uint64_t n, std::uint64_t p) noexcept;

  // n is a power of a single prime (n >= 2); writes the prime and exponent.
  bool is_prime_power(std::uint64_t n, std::uint64_t* prime = nullptr, unsigned* exp = nullptr);

  bool is_composite(std::uint64_t n) noexcept;

  // Every prime divisor of n lies in `primes`.
  bool is_pi_number(std::uint64_t n, std::set<std::uint64_t> const& primes);

  std::uint64_t ipow(std::uint64_t base, unsigned exp) noexcept;

}  // namespace csg
