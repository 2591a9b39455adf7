// Acceptance runner: one PASS/FAIL line per criterion, each with its runtime
// bound. Exit status is non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "property_suites.hpp"
#include "steinhaus/admissible.hpp"
#include "steinhaus/ap.hpp"
#include "steinhaus/cli.hpp"
#include "steinhaus/errors.hpp"
#include "steinhaus/orders.hpp"
#include "steinhaus/residue.hpp"
#include "steinhaus/search.hpp"

using namespace steinhaus;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_ms;
  // Returns an empty string on success, otherwise what went wrong.
  std::function<std::string()> body;
};

Sequence seq(std::uint64_t n, std::vector<residue_t> terms) {
  return Sequence(Modulus(n), std::move(terms));
}

Sequence digits(std::uint64_t n, const std::string& s) {
  std::vector<residue_t> t;
  for (char c : s) t.push_back(static_cast<residue_t>(c - '0'));
  return seq(n, t);
}

std::string fail_if(bool bad, const std::string& why) { return bad ? why : std::string{}; }

// First values of alpha(n) for odd n: (n, rad(n), alpha(n)).
struct AlphaRow {
  std::uint64_t n, rad, alpha;
};
const std::vector<AlphaRow> kAlphaTable = {
    {1, 1, 1},     {3, 3, 2},     {5, 5, 4},     {7, 7, 3},     {9, 3, 2},     {11, 11, 10},
    {13, 13, 12},  {15, 15, 4},   {17, 17, 8},   {19, 19, 18},  {21, 21, 2},   {23, 23, 11},
    {25, 5, 4},    {27, 3, 2},    {29, 29, 28},  {31, 31, 5},   {33, 33, 10},  {35, 35, 12},
    {37, 37, 36},  {39, 39, 4},   {41, 41, 20},  {43, 43, 14},  {45, 15, 4},   {47, 47, 23},
    {49, 7, 3},    {51, 51, 8},   {53, 53, 52},  {55, 55, 4},   {57, 57, 6},   {59, 59, 58},
    {61, 61, 60},  {63, 21, 2},   {65, 65, 12},  {67, 67, 66},  {69, 69, 22},  {71, 71, 35},
    {73, 73, 9},   {75, 15, 4},   {77, 77, 30},  {79, 79, 39},  {81, 3, 2},    {83, 83, 82},
    {85, 85, 8},   {87, 87, 28},  {89, 89, 11},  {91, 91, 12},  {93, 93, 10},  {95, 95, 36},
    {97, 97, 48},  {99, 33, 10},  {101, 101, 100}, {103, 103, 51},
};

// Rows of the Steinhaus triangle of AP(1, 3, 20) in Z/7Z, top to apex.
const std::vector<std::string> kAp1320Rows = {
    "14036251403625140362", "5432106543210654321", "205316420531642053", "25140362514036251",
    "0654321065432106",     "642053164205316",     "36251403625140",     "2106543210654",
    "316420531642",         "40362514036",         "4321065432",         "053164205",
    "51403625",             "6543210",             "420531",             "62514",
    "1065",                 "164",                 "03",                 "3",
};

std::string criterion_figure1() {
  const Triangle t = triangle(seq(3, {0, 1, 2, 2}));
  const std::vector<Sequence> expected{seq(3, {0, 1, 2, 2}), seq(3, {1, 0, 1}), seq(3, {1, 1}),
                                       seq(3, {2})};
  return fail_if(t.rows() != expected, "triangle rows differ");
}

std::string criterion_figure2() {
  const Sequence x = seq(5, {2, 2, 3, 3});
  if (!is_balanced(x)) return "not balanced";
  return fail_if(multiplicities(x) != MultiplicityVector(Modulus(5), {2, 2, 2, 2, 2}),
                 "multiplicities differ from [2,2,2,2,2]");
}

std::string criterion_alpha_table() {
  if (kAlphaTable.size() != 52) return "table must list 52 values";
  for (const auto& row : kAlphaTable) {
    if (alpha(row.n) != row.alpha)
      return "alpha(" + std::to_string(row.n) + ") = " + std::to_string(alpha(row.n));
    if (radical(row.n) != row.rad)
      return "rad(" + std::to_string(row.n) + ") = " + std::to_string(radical(row.n));
  }
  return {};
}

std::string criterion_admissible_825() {
  const auto c = admissible_classes(825);
  return fail_if(c.period != 825 ||
                     c.residues != std::vector<std::uint64_t>{0, 99, 275, 374, 450, 549, 725, 824},
                 "classes differ");
}

std::string criterion_ap_1_3_20() {
  const ArithmeticProgression ap(Modulus(7), 1, 3, 20);
  const Sequence x = ap_sequence(ap);
  if (!is_balanced(x)) return "AP(1,3,20) mod 7 not balanced";
  if (multiplicities(x) != MultiplicityVector(Modulus(7), std::vector<std::uint64_t>(7, 30)))
    return "multiplicities are not all 30";
  const Triangle t = triangle(x);
  for (std::size_t i = 0; i < kAp1320Rows.size(); ++i)
    if (t.rows()[i] != digits(7, kAp1320Rows[i])) return "row " + std::to_string(i + 1) + " differs";
  const std::string rendered = cli::render_triangle(t);
  const std::string first_line = rendered.substr(0, rendered.find('\n'));
  if (first_line != "1 4 0 3 6 2 5 1 4 0 3 6 2 5 1 4 0 3 6 2") return "rendered first row differs";
  const std::string apex = std::string(19, ' ') + "3\n";
  if (rendered.size() < apex.size() ||
      rendered.compare(rendered.size() - apex.size(), apex.size(), apex) != 0)
    return "rendered apex differs";
  return {};
}

std::string criterion_even_aps() {
  std::set<std::pair<std::uint64_t, std::string>> expected = {
      {2, "0,1,0"}, {2, "1,1,1"}, {2, "0,1,0,1"}, {2, "1,0,1,0"},
      {6, "1,3,5"}, {6, "2,3,4"}, {6, "4,3,2"},   {6, "5,3,1"}};
  std::set<std::pair<std::uint64_t, std::string>> got;
  for (std::uint64_t n : {2, 4, 6, 8, 10, 12})
    for (const auto& ap : classify_even_aps(n, 40)) got.emplace(n, format_sequence(ap_sequence(ap)));
  return fail_if(got != expected, "found " + std::to_string(got.size()) + " balanced APs");
}

std::string criterion_harborth() {
  // Exact counts, computed once and frozen as regression values.
  const std::vector<std::pair<std::size_t, std::uint64_t>> counts = {{3, 4}, {4, 6}, {7, 12}, {8, 40}};
  for (auto [m, expected] : counts) {
    const auto r = brute_force_balanced(2, m);
    if (r.count < 4) return "m=" + std::to_string(m) + " has fewer than four";
    if (r.count != expected) return "m=" + std::to_string(m) + " count " + std::to_string(r.count);
  }
  return {};
}

std::string criterion_powers_of_three() {
  for (std::uint64_t n : {3, 9, 27}) {
    for (std::size_t m = 1; m <= 200; ++m) {
      if (!is_admissible(n, m)) continue;
      try {
        if (!is_balanced(construct_balanced(n, m)))
          return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " not balanced";
      } catch (const Error& e) {
        return "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " + e.what();
      }
    }
  }
  return {};
}

std::string criterion_properties() {
  using namespace steinhaus::testing;
  Gen g;
  const std::vector<std::pair<std::string, Outcome>> suites = {
      {"derive_n closed form", binomial_closed_form(g, 200)},
      {"derived AP closed form", ap_derived_closed_form(g, 200)},
      {"AP entry closed form", ap_entry_closed_form(g, 200)},
      {"primitive round trip", primitive_round_trip(g, 200)},
      {"projection multiset", projection_multiset(g, 200)},
      {"antisymmetry propagation", antisymmetry_propagation(g, 200)},
      {"AP antisymmetry", ap_antisymmetry(g, 200)},
      {"negation symmetry", negation_symmetry(g, 200)},
      {"window permutation", window_permutation(g, 200)},
      {"multiplicity recurrence", multiplicity_recurrence()},
      {"non-invertible difference", non_invertible_difference(45)},
  };
  for (const auto& [name, o] : suites) {
    std::printf("      %-26s %8llu cases, %llu failures\n", name.c_str(),
                static_cast<unsigned long long>(o.cases),
                static_cast<unsigned long long>(o.failures));
    if (!o.ok()) return name + " failed at " + o.first_failure;
    const bool exhaustive = name == "multiplicity recurrence" || name == "non-invertible difference";
    if (!exhaustive && o.cases < 200) return name + " ran fewer than 200 cases";
  }
  return {};
}

std::string criterion_oracle_cross_check() {
  std::size_t checked = 0;
  for (std::uint64_t n = 1; n <= 15; n += 2) {
    for (std::size_t m = 1; state_count(n, m) <= 1'000'000; ++m) {
      if (n == 1 && m > 12) break;
      if (!is_admissible(n, m)) continue;
      std::vector<Sequence> outputs;
      for (std::uint64_t d = 0; d < n; ++d) {
        if (std::gcd(d, n) != 1) continue;
        for (auto family : {ConstructionFamily::Beta, ConstructionFamily::Alpha}) {
          for (std::uint64_t a = 0; a < (family == ConstructionFamily::Alpha ? n : 1); ++a) {
            try {
              outputs.push_back(construct_balanced(n, m, {.d = d, .family = family, .a = a}));
            } catch (const Error& e) {
              if (e.code() != Errc::UnsupportedLength) throw;
            }
          }
        }
      }
      if (outputs.empty()) continue;
      const auto one = brute_force_balanced(n, m, {.workers = 1});
      const auto four = brute_force_balanced(n, m, {.workers = 4});
      if (one.found != four.found) return "worker mismatch at n=" + std::to_string(n);
      for (const Sequence& s : outputs) {
        ++checked;
        if (!std::binary_search(one.found.begin(), one.found.end(), s))
          return "construction " + format_sequence(s) + " missing from brute force";
      }
    }
  }
  // Determinism also on spaces with no construction.
  for (auto [n, m] : std::vector<std::pair<std::uint64_t, std::size_t>>{{2, 12}, {5, 4}, {6, 8}, {4, 7}}) {
    if (brute_force_balanced(n, m, {.workers = 1}).found !=
        brute_force_balanced(n, m, {.workers = 4}).found)
      return "worker mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m);
  }
  std::printf("      %zu construction outputs found in brute-force reports\n", checked);
  return fail_if(checked == 0, "no construction output was cross-checked");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Figure 1 triangle of (0,1,2,2) mod 3", 1.0, criterion_figure1},
      {2, "(2,2,3,3) mod 5 balanced, multiplicities [2,2,2,2,2]", 1.0, criterion_figure2},
      {3, "alpha(n) and rad(n) for the 52 odd n <= 103", 1000.0, criterion_alpha_table},
      {4, "admissible classes of 825", 1.0, criterion_admissible_825},
      {5, "AP(1,3,20) mod 7: each residue 30 times, triangle matches", 10.0, criterion_ap_1_3_20},
      {6, "even n <= 12: exactly 8 balanced APs with m <= 40", 5000.0, criterion_even_aps},
      {7, "binary balanced sequences m in {3,4,7,8}: >= 4 each", 1000.0, criterion_harborth},
      {8, "Z/3^kZ: construction balanced for every admissible m <= 200", 30000.0,
       criterion_powers_of_three},
      {9, "property suites", 120000.0, criterion_properties},
      {10, "construction outputs inside brute-force reports; 1 vs 4 workers", 60000.0,
       criterion_oracle_cross_check},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.body();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && ms >= c.limit_ms) problem = "too slow";
    const bool pass = problem.empty();
    failed += !pass;
    std::printf("[%s] %2d. %s (%.3f ms, limit %.0f ms)%s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), ms, c.limit_ms, pass ? "" : ": ", problem.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
