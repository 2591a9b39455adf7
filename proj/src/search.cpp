#include "steinhaus/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>

#include "steinhaus/admissible.hpp"
#include "steinhaus/errors.hpp"

namespace steinhaus {

namespace {

struct PrefixResult {
  std::vector<Sequence> found;
  std::uint64_t count = 0;
};

// Walks every sequence whose first prefix_len terms spell `prefix_index` in
// base n, last coordinate fastest.
void enumerate_subtree(Modulus modulus, std::size_t m, std::size_t prefix_len,
                       std::uint64_t prefix_index, bool count_only, BalanceChecker& check,
                       std::vector<residue_t>& terms, PrefixResult& out) {
  const auto n = static_cast<residue_t>(modulus.value());
  for (std::size_t k = prefix_len; k-- > 0;) {
    terms[k] = static_cast<residue_t>(prefix_index % n);
    prefix_index /= n;
  }
  std::fill(terms.begin() + static_cast<std::ptrdiff_t>(prefix_len), terms.end(), 0);
  while (true) {
    if (check(terms)) {
      ++out.count;
      if (!count_only) out.found.emplace_back(modulus, terms);
    }
    bool advanced = false;
    for (std::size_t k = m; k > prefix_len && !advanced;) {
      --k;
      if (++terms[k] < n) {
        advanced = true;
      } else {
        terms[k] = 0;
      }
    }
    if (!advanced) return;
  }
}

}  // namespace

std::uint64_t state_count(std::uint64_t n, std::size_t m) noexcept {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (n != 0 && total > std::numeric_limits<std::uint64_t>::max() / n) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= n;
  }
  return total;
}

SearchReport brute_force_balanced(std::uint64_t n, std::size_t m, const SearchBudget& budget,
                                  bool count_only) {
  const Modulus modulus(n);
  if (m == 0) raise(Errc::InvalidArgument, "length must be >= 1");
  const std::uint64_t states = state_count(n, m);
  if (states > budget.max_states) {
    raise(Errc::BudgetExceeded, std::to_string(n) + "^" + std::to_string(m) +
                                    " states exceed the budget of " +
                                    std::to_string(budget.max_states));
  }

  SearchReport report;
  report.n = n;
  report.m = m;
  // No balanced sequence can exist; nothing to enumerate.
  if (!is_admissible(n, m)) return report;

  const unsigned workers = std::max(1u, budget.workers);
  std::size_t prefix_len = 0;
  while (prefix_len < m && state_count(n, prefix_len) < workers) ++prefix_len;
  const std::uint64_t prefixes = state_count(n, prefix_len);

  std::vector<PrefixResult> results(prefixes);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    BalanceChecker check(modulus, m);
    std::vector<residue_t> terms(m);
    for (std::uint64_t p = next.fetch_add(1); p < prefixes; p = next.fetch_add(1)) {
      enumerate_subtree(modulus, m, prefix_len, p, count_only, check, terms, results[p]);
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  for (auto& r : results) {
    report.count += r.count;
    std::move(r.found.begin(), r.found.end(), std::back_inserter(report.found));
  }
  report.states_examined = states;
  return report;
}

std::vector<ArithmeticProgression> classify_even_aps(std::uint64_t n, std::size_t m_max) {
  if (n % 2 != 0) raise(Errc::InvalidArgument, "classify_even_aps requires even n");
  const Modulus modulus(n);
  std::vector<std::pair<Sequence, ArithmeticProgression>> hits;
  for (std::size_t m = 1; m <= m_max; ++m) {
    BalanceChecker check(modulus, m);
    if (!check.admissible()) continue;
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t d = 0; d < n; ++d) {
        ArithmeticProgression ap(modulus, a, d, m);
        Sequence seq = ap_sequence(ap);
        if (check(seq.terms())) hits.emplace_back(std::move(seq), ap);
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const auto& l, const auto& r) {
    if (l.first.size() != r.first.size()) return l.first.size() < r.first.size();
    return l.first < r.first;
  });
  std::vector<ArithmeticProgression> out;
  out.reserve(hits.size());
  for (auto& h : hits) out.push_back(h.second);
  return out;
}

std::string_view to_string(ProbeMethod method) noexcept {
  return method == ProbeMethod::Construction ? "construction" : "brute-force";
}

ProbeResult molluzzo_probe(std::uint64_t n, std::size_t m, const SearchBudget& budget) {
  if (m == 0 || !is_admissible(n, m)) {
    raise(Errc::NotAdmissible, "n = " + std::to_string(n) + " does not divide binomial(" +
                                   std::to_string(m + 1) + ", 2)");
  }
  ProbeResult result;
  if (n % 2 == 1) {
    for (auto family : {ConstructionFamily::Beta, ConstructionFamily::Alpha}) {
      try {
        Sequence seq = construct_balanced(n, m, {.d = 1, .family = family, .a = 0});
        if (is_balanced(seq)) {
          result.exists = true;
          result.method = ProbeMethod::Construction;
          result.witness = std::move(seq);
          return result;
        }
      } catch (const Error& e) {
        if (e.code() != Errc::UnsupportedLength) throw;
      }
    }
  }

  const std::uint64_t states = state_count(n, m);
  if (states > budget.max_states) {
    raise(Errc::BudgetExceeded, "no construction applies and " + std::to_string(n) + "^" +
                                    std::to_string(m) + " states exceed the budget of " +
                                    std::to_string(budget.max_states));
  }
  // Sequential first-hit scan; existence only, so no merge is needed.
  const Modulus modulus(n);
  BalanceChecker check(modulus, m);
  std::vector<residue_t> terms(m, 0);
  result.method = ProbeMethod::BruteForce;
  for (std::uint64_t s = 0; s < states; ++s) {
    ++result.states_examined;
    if (check(terms)) {
      result.exists = true;
      result.witness = Sequence(modulus, terms);
      return result;
    }
    for (std::size_t k = m; k-- > 0;) {
      if (++terms[k] < n) break;
      terms[k] = 0;
    }
  }
  return result;
}

}  // namespace steinhaus
