#pragma once

/**
 * @file ntheory.hpp
 * @brief Integer predicates behind the closed-form chordality criteria.
 *
 * Everything here is a pure function of its integer arguments. Inputs in
 * scope stay below 10^7, so trial division is used throughout.
 */

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace powerchord::ntheory {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower &, const PrimePower &) = default;
};

struct PrimeFactorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors; // primes strictly increasing

  std::size_t distinct_primes() const { return factors.size(); }

  std::vector<std::uint64_t> primes() const {
    std::vector<std::uint64_t> out;
    out.reserve(factors.size());
    for (const auto &f : factors)
      out.push_back(f.prime);
    return out;
  }

  /// Product of prime^exponent; equals n for anything returned by factorize().
  std::uint64_t value() const {
    std::uint64_t v = 1;
    for (const auto &f : factors)
      for (unsigned i = 0; i < f.exponent; ++i)
        v *= f.prime;
    return v;
  }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  if (n < 4)
    return true;
  if (n % 2 == 0 || n % 3 == 0)
    return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6)
    if (n % d == 0 || n % (d + 2) == 0)
      return false;
  return true;
}

inline PrimeFactorization factorize(std::uint64_t n) {
  if (n == 0)
    throw InvalidInput("factorize: n must be positive");
  PrimeFactorization out;
  out.n = n;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e)
      out.factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1)
    out.factors.push_back({n, 1});
  return out;
}

inline std::uint64_t euler_totient(std::uint64_t n) {
  if (n == 0)
    throw InvalidInput("euler_totient: n must be positive");
  std::uint64_t phi = n;
  for (const auto &f : factorize(n).factors)
    phi = phi / f.prime * (f.prime - 1);
  return phi;
}

/// (p, a) with p^a = n and a >= 1. 1 is not a prime power.
inline std::optional<PrimePower> is_prime_power(std::uint64_t n) {
  if (n < 2)
    return std::nullopt;
  auto f = factorize(n);
  if (f.factors.size() != 1)
    return std::nullopt;
  return f.factors.front();
}

/// n = p1^a * p2 with p1 != p2 prime, a >= 1 (covers p1 * p2).
inline bool is_prime_power_times_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  auto f = factorize(n);
  if (f.factors.size() != 2)
    return false;
  return f.factors[0].exponent == 1 || f.factors[1].exponent == 1;
}

/// Orders n for which the power graph of C_n is chordal: 1, p^a, p^a q.
inline bool is_chordal_cyclic_order(std::uint64_t n) {
  if (n == 0)
    throw InvalidInput("is_chordal_cyclic_order: n must be positive");
  return n == 1 || is_prime_power(n).has_value() || is_prime_power_times_prime(n);
}

namespace detail {

inline bool prime_power_or_times_prime(std::uint64_t n) {
  return is_prime_power(n).has_value() || is_prime_power_times_prime(n);
}

inline std::optional<unsigned> odd_power_exponent(std::uint64_t q, std::uint64_t base) {
  auto pp = is_prime_power(q);
  if (!pp || pp->prime != base || pp->exponent % 2 == 0)
    return std::nullopt;
  return pp->exponent;
}

inline std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r;
}

} // namespace detail

/**
 * Chordality of P(PSL(2,q)): for even q both q-1 and q+1, for odd q both
 * (q-1)/2 and (q+1)/2, must be a prime power or of the shape p1^a * p2.
 */
inline bool psl2_criterion(std::uint64_t q) {
  if (q < 4 || !is_prime_power(q))
    throw InvalidInput("psl2_criterion: q must be a prime power >= 4, got " + std::to_string(q));
  if (q % 2 == 0)
    return detail::prime_power_or_times_prime(q - 1) && detail::prime_power_or_times_prime(q + 1);
  return detail::prime_power_or_times_prime((q - 1) / 2) &&
         detail::prime_power_or_times_prime((q + 1) / 2);
}

/// Chordality of P(Sz(q)), q = 2^(2e+1) >= 8, via q-1 and q +- sqrt(2q) + 1.
inline bool suzuki_criterion(std::uint64_t q) {
  if (q < 8 || !detail::odd_power_exponent(q, 2))
    throw InvalidInput("suzuki_criterion: q must be 2^(2e+1) with e >= 1, got " + std::to_string(q));
  const std::uint64_t r = detail::isqrt(2 * q);
  return detail::prime_power_or_times_prime(q - 1) &&
         detail::prime_power_or_times_prime(q + r + 1) &&
         detail::prime_power_or_times_prime(q - r + 1);
}

/**
 * Sufficient condition for a chordal power graph of the Ree group 2G2(q),
 * q = 3^(2e+1) >= 27: each of q-1 and q+1 is 2^a, 2p^r or 4p^k with p an odd
 * prime. One-directional: a false result does not imply non-chordality.
 */
inline bool ree_sufficient(std::uint64_t q) {
  if (q < 27 || !detail::odd_power_exponent(q, 3))
    throw InvalidInput("ree_sufficient: q must be 3^(2e+1) with e >= 1, got " + std::to_string(q));
  auto admissible = [](std::uint64_t m) {
    auto f = factorize(m);
    if (f.factors.empty() || f.factors.front().prime != 2)
      return false;
    const unsigned twos = f.factors.front().exponent;
    if (f.factors.size() == 1)
      return true; // 2^a
    if (f.factors.size() != 2)
      return false;
    return twos == 1 || twos == 2; // 2 p^r or 4 p^k
  };
  return admissible(q - 1) && admissible(q + 1);
}

} // namespace powerchord::ntheory
