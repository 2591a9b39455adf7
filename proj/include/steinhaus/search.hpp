#pragma once

/**
 * @file search.hpp
 * @brief Brute-force oracles for balance claims.
 *
 * Exhaustive enumeration of (Z/nZ)^m is split across workers by fixed prefixes
 * of length ceil(log_n(workers)). Each prefix subtree is walked with an
 * odometer in lexicographic order and the per-prefix results are concatenated
 * in prefix order, so the report does not depend on the worker count.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "steinhaus/ap.hpp"
#include "steinhaus/residue.hpp"

namespace steinhaus {

inline constexpr std::uint64_t kDefaultMaxStates = 100'000'000;

struct SearchBudget {
  std::uint64_t max_states = kDefaultMaxStates;
  unsigned workers = 1;
};

struct SearchReport {
  std::uint64_t n = 0;
  std::size_t m = 0;
  std::vector<Sequence> found;  // lexicographic; empty in count-only mode
  std::uint64_t count = 0;
  std::uint64_t states_examined = 0;
};

/// n^m, saturating at UINT64_MAX.
std::uint64_t state_count(std::uint64_t n, std::size_t m) noexcept;

/// Every balanced sequence of length m over Z/nZ. Throws BudgetExceeded before
/// any allocation when n^m > budget.max_states.
SearchReport brute_force_balanced(std::uint64_t n, std::size_t m, const SearchBudget& budget = {},
                                  bool count_only = false);

/// All balanced AP(a, d, m) over Z/nZ, n even, 1 <= m <= m_max; ordered by
/// (m, expanded sequence).
std::vector<ArithmeticProgression> classify_even_aps(std::uint64_t n, std::size_t m_max = 40);

enum class ProbeMethod { Construction, BruteForce };

std::string_view to_string(ProbeMethod method) noexcept;

struct ProbeResult {
  bool exists = false;
  ProbeMethod method = ProbeMethod::BruteForce;
  std::optional<Sequence> witness;
  std::uint64_t states_examined = 0;
};

/// Does a balanced sequence of admissible length m exist in Z/nZ? Tries the AP
/// constructions first, then exhaustive search within budget. Throws
/// NotAdmissible for inadmissible m and BudgetExceeded when neither path applies.
ProbeResult molluzzo_probe(std::uint64_t n, std::size_t m, const SearchBudget& budget = {});

}  // namespace steinhaus
