#include "steinhaus/orders.hpp"

#include <numeric>
#include <string>
#include <tuple>

#include "steinhaus/errors.hpp"
#include "wide_int.hpp"

namespace steinhaus {

namespace {

void require_modulus(std::uint64_t n) {
  if (n == 0) raise(Errc::InvalidArgument, "n must be >= 1");
  if (n >= kMaxOrderModulus) {
    raise(Errc::InvalidArgument, "n = " + std::to_string(n) + " exceeds the 2^63 bound");
  }
}

void require_odd(std::uint64_t n) {
  require_modulus(n);
  if (n % 2 == 0) raise(Errc::EvenModulus, "n = " + std::to_string(n) + " must be odd");
}

}  // namespace

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (auto [p, e] : factors)
    for (unsigned k = 0; k < e; ++k) v *= p;
  return v;
}

Factorization factorize(std::uint64_t n) {
  require_modulus(n);
  Factorization f;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p <= n / p; ++p)
    if (n % p == 0) return false;
  return true;
}

std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (auto [p, e] : factorize(n).factors) r *= p;
  return r;
}

unsigned omega(std::uint64_t n) { return static_cast<unsigned>(factorize(n).factors.size()); }

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n).factors) phi = phi / p * (p - 1);
  return phi;
}

unsigned padic_valuation(std::uint64_t p, std::uint64_t n) {
  require_modulus(n);
  if (!is_prime(p)) raise(Errc::NotPrime, std::to_string(p) + " is not prime");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) noexcept {
  return static_cast<std::uint64_t>(static_cast<detail::u128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) noexcept {
  std::uint64_t result = 1 % n;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
  require_modulus(n);
  detail::i128 r0 = n, r1 = a % n, s0 = 0, s1 = 1;
  while (r1 != 0) {
    detail::i128 q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1 && n != 1) {
    raise(Errc::NotInvertible,
          std::to_string(a) + " is not invertible modulo " + std::to_string(n));
  }
  detail::i128 inv = s0 % static_cast<detail::i128>(n);
  if (inv < 0) inv += n;
  return static_cast<std::uint64_t>(inv);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  require_modulus(n);
  if (std::gcd(a, n) != 1) {
    raise(Errc::NotCoprime, "gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") > 1");
  }
  if (n == 1) return 1;
  const std::uint64_t bound = totient(n);
  const std::uint64_t base = a % n;
  std::uint64_t x = base;
  for (std::uint64_t e = 1; e <= bound; ++e) {
    if (x == 1) return e;
    x = mul_mod(x, base, n);
  }
  // Unreachable: Euler's theorem gives a^phi(n) = 1.
  raise(Errc::InvalidArgument, "order search exceeded totient bound");
}

std::uint64_t alpha(std::uint64_t n) {
  require_odd(n);
  return multiplicative_order(pow_mod(2, n, n), n);
}

std::uint64_t beta(std::uint64_t n) {
  require_odd(n);
  if (n == 1) return 1;
  const std::uint64_t base = pow_mod(2, n, n);
  const std::uint64_t bound = totient(n);
  std::uint64_t x = base;
  for (std::uint64_t e = 1; e <= bound; ++e) {
    if (x == 1 || x == n - 1) return e;
    x = mul_mod(x, base, n);
  }
  raise(Errc::InvalidArgument, "order search exceeded totient bound");
}

}  // namespace steinhaus
