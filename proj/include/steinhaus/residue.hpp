#pragma once

/**
 * @file residue.hpp
 * @brief Sequences over Z/nZ, their derived sequences and Steinhaus triangles.
 *
 * The derived sequence of X = (x_1, ..., x_m) is (x_1+x_2, ..., x_{m-1}+x_m).
 * Iterating down to length 1 yields the Steinhaus triangle, a multiset of
 * binomial(m+1, 2) residues. X is balanced when every residue of Z/nZ occurs
 * in its triangle with the same multiplicity.
 *
 * Public triangle coordinates are 1-based: entry(i, j) is the j-th term of
 * row i, and row i is the (i-1)-th derived sequence. Internally row i lives at
 * rows()[i-1] and its j-th term at index j-1.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace steinhaus {

using residue_t = std::uint32_t;

/// Group order n >= 1 of Z/nZ.
class Modulus {
 public:
  explicit Modulus(std::uint64_t n);

  std::uint64_t value() const noexcept { return n_; }

  /// Canonical representative of x in [0, n).
  std::uint64_t reduce(std::int64_t x) const noexcept;

  friend auto operator<=>(const Modulus&, const Modulus&) = default;

 private:
  std::uint64_t n_;
};

/// Largest modulus a Sequence may carry; sums of two residues must fit residue_t.
inline constexpr std::uint64_t kMaxSequenceModulus = std::uint64_t{1} << 31;

class Residue {
 public:
  Residue(Modulus modulus, std::uint64_t value);

  residue_t value() const noexcept { return value_; }
  Modulus modulus() const noexcept { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Modulus modulus_;
  residue_t value_;
};

/// Non-empty ordered list of residues sharing one modulus.
class Sequence {
 public:
  /// Every term must already lie in [0, n).
  Sequence(Modulus modulus, std::vector<residue_t> terms);

  /// Reduces arbitrary integers (negative included) into [0, n).
  static Sequence reduced(Modulus modulus, std::span<const std::int64_t> values);

  Modulus modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const residue_t> terms() const noexcept { return terms_; }

  /// 0-based access to the raw value.
  residue_t operator[](std::size_t k) const noexcept { return terms_[k]; }
  /// 1-based access as a Residue, matching x_j.
  Residue term(std::size_t j) const;

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend std::strong_ordering operator<=>(const Sequence& lhs, const Sequence& rhs);

 private:
  Modulus modulus_;
  std::vector<residue_t> terms_;
};

class Triangle {
 public:
  explicit Triangle(const Sequence& generator);

  Modulus modulus() const noexcept { return rows_.front().modulus(); }
  /// Length m of the generating sequence, which is also the number of rows.
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<Sequence>& rows() const noexcept { return rows_; }

  /// 1-based row i, of length m - i + 1.
  const Sequence& row(std::size_t i) const;
  /// 1-based entry, 1 <= i <= m, 1 <= j <= m - i + 1.
  residue_t entry(std::size_t i, std::size_t j) const;

  std::size_t entry_count() const noexcept;

 private:
  std::vector<Sequence> rows_;
};

/// Multiplicity function of a multiset of Z/nZ; counts[x] occurrences of x.
class MultiplicityVector {
 public:
  explicit MultiplicityVector(Modulus modulus);
  MultiplicityVector(Modulus modulus, std::vector<std::uint64_t> counts);

  Modulus modulus() const noexcept { return modulus_; }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::uint64_t operator[](std::size_t x) const noexcept { return counts_[x]; }
  void add(residue_t x, std::uint64_t times = 1) noexcept { counts_[x] += times; }

  std::uint64_t total() const noexcept;
  bool is_constant() const noexcept;

  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;

 private:
  Modulus modulus_;
  std::vector<std::uint64_t> counts_;
};

/// binomial(m + 1, 2) = m (m + 1) / 2, the number of entries of a length-m triangle.
std::uint64_t triangle_size(std::uint64_t m) noexcept;

/// Row i of Pascal's triangle reduced mod n at every step: C(i, 0..i) mod n.
std::vector<std::uint64_t> binomial_row_mod(std::size_t i, Modulus modulus);

Sequence derive(const Sequence& x);
/// i-th derived sequence via the binomial closed form, 0 <= i <= m - 1.
Sequence derive_n(const Sequence& x, std::size_t i);

Triangle triangle(const Sequence& x);

MultiplicityVector multiplicities(const Triangle& t);
/// Multiplicities of the triangle generated by x without materializing it.
MultiplicityVector multiplicities(const Sequence& x);

bool is_balanced(const Sequence& x);

/// pi_q(X): every term reduced mod q, where q divides n.
Sequence project(const Sequence& x, std::uint64_t q);

bool is_antisymmetric(const Sequence& x);

/**
 * Reusable balance test for many sequences of the same (n, m).
 *
 * Holds the row and counter buffers so the brute-force search does not
 * allocate per candidate. Rows are folded in place and the test stops as soon
 * as any residue count exceeds binomial(m+1,2)/n.
 */
class BalanceChecker {
 public:
  BalanceChecker(Modulus modulus, std::size_t length);

  /// False whenever n does not divide binomial(m+1, 2).
  bool admissible() const noexcept { return admissible_; }
  bool operator()(std::span<const residue_t> terms);

 private:
  residue_t n_;
  std::size_t m_;
  bool admissible_;
  std::uint64_t target_;
  std::vector<residue_t> row_;
  std::vector<std::uint64_t> counts_;
};

/// Parses the comma-separated decimal form, e.g. "0,1,2,-1"; values are reduced mod n.
Sequence parse_sequence(std::string_view text, Modulus modulus);
/// Comma-separated decimal form without spaces.
std::string format_sequence(const Sequence& x);

}  // namespace steinhaus
