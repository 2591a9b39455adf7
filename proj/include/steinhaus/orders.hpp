#pragma once

// Elementary arithmetic functions and the orders alpha(n), beta(n) of 2^n mod n.
//
// Inputs are plain 64-bit integers. Modular products go through a 128-bit
// intermediate, so every function accepts n < 2^63 (kMaxOrderModulus).

#include <cstdint>
#include <utility>
#include <vector>

namespace steinhaus {

inline constexpr std::uint64_t kMaxOrderModulus = std::uint64_t{1} << 63;

/// (prime, exponent) pairs with strictly increasing primes.
struct Factorization {
  std::vector<std::pair<std::uint64_t, unsigned>> factors;

  std::uint64_t value() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

Factorization factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
unsigned omega(std::uint64_t n);
std::uint64_t totient(std::uint64_t n);
/// v_p(n); throws NotPrime when p is not prime.
unsigned padic_valuation(std::uint64_t p, std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) noexcept;

/// Inverse of a mod n by extended Euclid; throws NotInvertible if gcd(a, n) > 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n);

/// Least e >= 1 with a^e = 1 (mod n); throws NotCoprime if gcd(a, n) > 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

/// Multiplicative order of 2^n modulo odd n.
std::uint64_t alpha(std::uint64_t n);
/// Least e >= 1 with 2^{en} = +-1 (mod n), n odd.
std::uint64_t beta(std::uint64_t n);

}  // namespace steinhaus
