#include "steinhaus/admissible.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "steinhaus/errors.hpp"
#include "wide_int.hpp"
#include "steinhaus/orders.hpp"

namespace steinhaus {

Congruence crt(std::span<const Congruence> system) {
  Congruence acc{0, 1};
  for (const Congruence& c : system) {
    if (c.modulus == 0) raise(Errc::InvalidArgument, "congruence modulus must be >= 1");
    if (std::gcd(acc.modulus, c.modulus) != 1) {
      raise(Errc::InvalidArgument, "CRT moduli must be pairwise coprime");
    }
    // x = acc.residue + acc.modulus * t with acc.modulus * t = c.residue - acc.residue (mod c).
    const std::uint64_t inv = inverse_mod(acc.modulus % c.modulus, c.modulus);
    const std::uint64_t diff = (c.residue % c.modulus + c.modulus - acc.residue % c.modulus) %
                               c.modulus;
    const std::uint64_t t = mul_mod(diff, inv, c.modulus);
    const detail::u128 x = acc.residue + static_cast<detail::u128>(acc.modulus) * t;
    acc.modulus *= c.modulus;
    acc.residue = static_cast<std::uint64_t>(x % acc.modulus);
  }
  return acc;
}

bool AdmissibleClasses::contains(std::uint64_t m) const {
  return std::binary_search(residues.begin(), residues.end(), m % period);
}

AdmissibleClasses admissible_classes(std::uint64_t n) {
  const Factorization f = factorize(n);
  std::vector<std::uint64_t> moduli;
  for (auto [p, e] : f.factors) {
    std::uint64_t q = (p == 2) ? 2 : 1;
    for (unsigned k = 0; k < e; ++k) q *= p;
    moduli.push_back(q);
  }

  AdmissibleClasses out;
  out.period = (n % 2 == 0) ? 2 * n : n;
  const std::size_t k = moduli.size();
  std::vector<Congruence> system(k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    for (std::size_t i = 0; i < k; ++i) {
      system[i] = {(mask >> i & 1) ? moduli[i] - 1 : 0, moduli[i]};
    }
    out.residues.push_back(crt(system).residue);
  }
  std::sort(out.residues.begin(), out.residues.end());
  return out;
}

bool is_admissible(std::uint64_t n, std::uint64_t m) {
  if (n == 0) raise(Errc::InvalidArgument, "n must be >= 1");
  const detail::u128 twice = static_cast<detail::u128>(m) * (m + 1);
  return twice % (static_cast<detail::u128>(n) * 2) == 0;
}

Fraction coverage_fraction(std::uint64_t n) {
  if (n % 2 == 0) raise(Errc::EvenModulus, "n = " + std::to_string(n) + " must be odd");
  if (n < 3) raise(Errc::InvalidArgument, "coverage is defined for odd n >= 3");
  const unsigned w = omega(n);
  return {1, (std::uint64_t{1} << (w - 1)) * beta(n)};
}

}  // namespace steinhaus
