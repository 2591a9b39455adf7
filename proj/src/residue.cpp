#include "steinhaus/residue.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "steinhaus/errors.hpp"

namespace steinhaus {

namespace {

void require_sequence_modulus(Modulus modulus) {
  if (modulus.value() > kMaxSequenceModulus) {
    raise(Errc::InvalidArgument,
          "modulus " + std::to_string(modulus.value()) + " exceeds 2^31 for sequence storage");
  }
}

// One derivation step in place; the last slot becomes garbage and is dropped.
inline void fold_row(residue_t* row, std::size_t len, residue_t n) noexcept {
  for (std::size_t j = 0; j + 1 < len; ++j) {
    residue_t v = row[j] + row[j + 1];
    row[j] = v >= n ? v - n : v;
  }
}

}  // namespace

Modulus::Modulus(std::uint64_t n) : n_(n) {
  if (n == 0) raise(Errc::InvalidArgument, "modulus must be >= 1");
}

std::uint64_t Modulus::reduce(std::int64_t x) const noexcept {
  if (x >= 0) return static_cast<std::uint64_t>(x) % n_;
  // -(x+1) avoids overflow at INT64_MIN.
  std::uint64_t r = static_cast<std::uint64_t>(-(x + 1)) % n_;
  return n_ - 1 - r;
}

Residue::Residue(Modulus modulus, std::uint64_t value) : modulus_(modulus) {
  require_sequence_modulus(modulus);
  if (value >= modulus.value()) {
    raise(Errc::InvalidArgument, "residue " + std::to_string(value) + " not in [0, " +
                                     std::to_string(modulus.value()) + ")");
  }
  value_ = static_cast<residue_t>(value);
}

Sequence::Sequence(Modulus modulus, std::vector<residue_t> terms)
    : modulus_(modulus), terms_(std::move(terms)) {
  require_sequence_modulus(modulus);
  if (terms_.empty()) raise(Errc::InvalidArgument, "sequence must have length >= 1");
  for (residue_t t : terms_) {
    if (t >= modulus.value()) {
      raise(Errc::InvalidArgument, "term " + std::to_string(t) + " not in [0, " +
                                       std::to_string(modulus.value()) + ")");
    }
  }
}

Sequence Sequence::reduced(Modulus modulus, std::span<const std::int64_t> values) {
  std::vector<residue_t> terms;
  terms.reserve(values.size());
  for (std::int64_t v : values) terms.push_back(static_cast<residue_t>(modulus.reduce(v)));
  return Sequence(modulus, std::move(terms));
}

Residue Sequence::term(std::size_t j) const {
  if (j < 1 || j > terms_.size()) {
    raise(Errc::IndexOutOfRange, "term index " + std::to_string(j) + " outside [1, " +
                                     std::to_string(terms_.size()) + "]");
  }
  return Residue(modulus_, terms_[j - 1]);
}

std::strong_ordering operator<=>(const Sequence& lhs, const Sequence& rhs) {
  if (auto c = lhs.modulus_ <=> rhs.modulus_; c != 0) return c;
  return std::lexicographical_compare_three_way(lhs.terms_.begin(), lhs.terms_.end(),
                                                rhs.terms_.begin(), rhs.terms_.end());
}

Triangle::Triangle(const Sequence& generator) {
  rows_.reserve(generator.size());
  rows_.push_back(generator);
  while (rows_.back().size() > 1) rows_.push_back(derive(rows_.back()));
}

const Sequence& Triangle::row(std::size_t i) const {
  if (i < 1 || i > rows_.size()) {
    raise(Errc::IndexOutOfRange,
          "row " + std::to_string(i) + " outside [1, " + std::to_string(rows_.size()) + "]");
  }
  return rows_[i - 1];
}

residue_t Triangle::entry(std::size_t i, std::size_t j) const {
  const Sequence& r = row(i);
  if (j < 1 || j > r.size()) {
    raise(Errc::IndexOutOfRange, "column " + std::to_string(j) + " outside [1, " +
                                     std::to_string(r.size()) + "] in row " + std::to_string(i));
  }
  return r[j - 1];
}

std::size_t Triangle::entry_count() const noexcept { return triangle_size(rows_.size()); }

MultiplicityVector::MultiplicityVector(Modulus modulus)
    : modulus_(modulus), counts_(modulus.value(), 0) {}

MultiplicityVector::MultiplicityVector(Modulus modulus, std::vector<std::uint64_t> counts)
    : modulus_(modulus), counts_(std::move(counts)) {
  if (counts_.size() != modulus.value()) {
    raise(Errc::InvalidArgument, "multiplicity vector needs exactly n counters");
  }
}

std::uint64_t MultiplicityVector::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

bool MultiplicityVector::is_constant() const noexcept {
  return std::adjacent_find(counts_.begin(), counts_.end(), std::not_equal_to<>{}) ==
         counts_.end();
}

std::uint64_t triangle_size(std::uint64_t m) noexcept {
  return m % 2 == 0 ? (m / 2) * (m + 1) : m * ((m + 1) / 2);
}

std::vector<std::uint64_t> binomial_row_mod(std::size_t i, Modulus modulus) {
  const std::uint64_t n = modulus.value();
  std::vector<std::uint64_t> row(i + 1, 0);
  row[0] = 1 % n;
  for (std::size_t r = 1; r <= i; ++r) {
    // Right to left so row[k-1] still holds the previous row.
    for (std::size_t k = r; k >= 1; --k) {
      std::uint64_t v = row[k] + row[k - 1];
      row[k] = v >= n ? v - n : v;
    }
  }
  return row;
}

Sequence derive(const Sequence& x) {
  if (x.size() < 2) raise(Errc::LengthTooShort, "derivation needs length >= 2");
  std::vector<residue_t> out(x.terms().begin(), x.terms().end());
  fold_row(out.data(), out.size(), static_cast<residue_t>(x.modulus().value()));
  out.pop_back();
  return Sequence(x.modulus(), std::move(out));
}

Sequence derive_n(const Sequence& x, std::size_t i) {
  if (i >= x.size()) {
    raise(Errc::IndexOutOfRange, "derivation order " + std::to_string(i) +
                                     " must be < length " + std::to_string(x.size()));
  }
  const std::uint64_t n = x.modulus().value();
  const auto binom = binomial_row_mod(i, x.modulus());
  std::vector<residue_t> out(x.size() - i);
  for (std::size_t j = 0; j < out.size(); ++j) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k <= i; ++k) acc = (acc + binom[k] * x[j + k]) % n;
    out[j] = static_cast<residue_t>(acc);
  }
  return Sequence(x.modulus(), std::move(out));
}

Triangle triangle(const Sequence& x) { return Triangle(x); }

MultiplicityVector multiplicities(const Triangle& t) {
  MultiplicityVector mv(t.modulus());
  for (const Sequence& row : t.rows())
    for (residue_t v : row.terms()) mv.add(v);
  return mv;
}

MultiplicityVector multiplicities(const Sequence& x) {
  const auto n = static_cast<residue_t>(x.modulus().value());
  MultiplicityVector mv(x.modulus());
  std::vector<residue_t> row(x.terms().begin(), x.terms().end());
  for (std::size_t len = row.size(); len > 0; --len) {
    for (std::size_t j = 0; j < len; ++j) mv.add(row[j]);
    fold_row(row.data(), len, n);
  }
  return mv;
}

bool is_balanced(const Sequence& x) {
  BalanceChecker check(x.modulus(), x.size());
  return check(x.terms());
}

Sequence project(const Sequence& x, std::uint64_t q) {
  if (q == 0 || x.modulus().value() % q != 0) {
    raise(Errc::NotADivisor,
          std::to_string(q) + " does not divide " + std::to_string(x.modulus().value()));
  }
  std::vector<residue_t> out;
  out.reserve(x.size());
  for (residue_t v : x.terms()) out.push_back(static_cast<residue_t>(v % q));
  return Sequence(Modulus(q), std::move(out));
}

bool is_antisymmetric(const Sequence& x) {
  const std::uint64_t n = x.modulus().value();
  const std::size_t m = x.size();
  for (std::size_t i = 0; i < m; ++i) {
    if ((std::uint64_t{x[i]} + x[m - 1 - i]) % n != 0) return false;
  }
  return true;
}

BalanceChecker::BalanceChecker(Modulus modulus, std::size_t length)
    : n_(0), m_(length), admissible_(false), target_(0), row_(length), counts_(modulus.value()) {
  require_sequence_modulus(modulus);
  n_ = static_cast<residue_t>(modulus.value());
  const std::uint64_t total = triangle_size(length);
  admissible_ = length > 0 && total % n_ == 0;
  target_ = total / n_;
}

bool BalanceChecker::operator()(std::span<const residue_t> terms) {
  if (!admissible_ || terms.size() != m_) return false;
  std::fill(counts_.begin(), counts_.end(), 0);
  std::copy(terms.begin(), terms.end(), row_.begin());
  for (std::size_t len = m_; len > 0; --len) {
    for (std::size_t j = 0; j < len; ++j) {
      if (++counts_[row_[j]] > target_) return false;
    }
    fold_row(row_.data(), len, n_);
  }
  // Total is exactly n * target and no count exceeds target, so all are equal.
  return true;
}

Sequence parse_sequence(std::string_view text, Modulus modulus) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.npos
                                                                             : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      raise(Errc::InvalidArgument, "bad sequence term '" + std::string(token) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Sequence::reduced(modulus, values);
}

std::string format_sequence(const Sequence& x) {
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(x[k]);
  }
  return out;
}

}  // namespace steinhaus
