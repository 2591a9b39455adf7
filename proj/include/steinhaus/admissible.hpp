#pragma once

// Admissible lengths: the m >= 1 for which n divides binomial(m+1, 2).
//
// They form 2^omega(n) residue classes modulo n (n odd) or 2n (n even), one
// per choice of m = 0 or m = -1 modulo each prime-power part of n (the part
// for p = 2 taken one exponent higher).

#include <cstdint>
#include <span>
#include <vector>

namespace steinhaus {

/// x = residue (mod modulus).
struct Congruence {
  std::uint64_t residue;
  std::uint64_t modulus;

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

/// Solves a system with pairwise-coprime moduli; canonical residue in [0, product).
Congruence crt(std::span<const Congruence> system);

struct AdmissibleClasses {
  std::uint64_t period;
  std::vector<std::uint64_t> residues;  // sorted, in [0, period)

  bool contains(std::uint64_t m) const;
};

AdmissibleClasses admissible_classes(std::uint64_t n);

bool is_admissible(std::uint64_t n, std::uint64_t m);

/// Exact non-negative rational in lowest terms.
struct Fraction {
  std::uint64_t numerator;
  std::uint64_t denominator;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// 1 / (2^(omega(n)-1) beta(n)): share of admissible lengths reached by the
/// antisymmetric AP construction, n odd and >= 3.
Fraction coverage_fraction(std::uint64_t n);

}  // namespace steinhaus
