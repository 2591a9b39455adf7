#pragma once

// Arithmetic progressions AP(a, d, m) = (a, a+d, ..., a+(m-1)d) in Z/nZ and the
// balanced sequences built from them for odd n.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "steinhaus/residue.hpp"

namespace steinhaus {

class ArithmeticProgression {
 public:
  ArithmeticProgression(Modulus modulus, std::uint64_t first, std::uint64_t difference,
                        std::size_t length);

  Modulus modulus() const noexcept { return modulus_; }
  residue_t first() const noexcept { return a_; }
  residue_t difference() const noexcept { return d_; }
  std::size_t length() const noexcept { return m_; }

  friend bool operator==(const ArithmeticProgression&, const ArithmeticProgression&) = default;

 private:
  Modulus modulus_;
  residue_t a_;
  residue_t d_;
  std::size_t m_;
};

Sequence ap_sequence(const ArithmeticProgression& ap);

/// i-th derived sequence in closed form:
/// AP(2^i a + i 2^(i-1) d, 2^i d, m - i).
ArithmeticProgression ap_derived_closed(const ArithmeticProgression& ap, std::size_t i);

/// Entry (i, j) of the Steinhaus triangle of ap, 1-based, without building it.
residue_t ap_entry(const ArithmeticProgression& ap, std::size_t i, std::size_t j);

/// The unique AP whose derived sequence is ap (n odd).
ArithmeticProgression ap_primitive(const ArithmeticProgression& ap);

/// The unique antisymmetric AP of difference d and length m (n odd).
ArithmeticProgression antisymmetric_ap(const Residue& d, std::size_t m);

/// 2^{-1} mod odd n, i.e. (n + 1) / 2.
std::uint64_t half_mod(std::uint64_t n);

enum class ConstructionFamily {
  /// Antisymmetric APs, lengths m = 0 or -1 mod beta(n) n.
  Beta,
  /// AP(a, d, m) with any start a, lengths m = 0 or -1 mod alpha(n) n.
  Alpha,
};

struct ConstructionOptions {
  std::uint64_t d = 1;
  ConstructionFamily family = ConstructionFamily::Beta;
  /// Start term, used only by the Alpha family.
  std::uint64_t a = 0;
};

/// The balanced AP guaranteed for (n, m). Throws UnsupportedLength when m lies
/// outside the family's congruence classes; that says nothing about whether a
/// balanced sequence of length m exists.
ArithmeticProgression construct_balanced_ap(std::uint64_t n, std::size_t m,
                                            const ConstructionOptions& options = {});

Sequence construct_balanced(std::uint64_t n, std::size_t m,
                            const ConstructionOptions& options = {});

}  // namespace steinhaus
