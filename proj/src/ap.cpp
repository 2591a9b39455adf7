#include "steinhaus/ap.hpp"

#include <numeric>
#include <string>

#include "steinhaus/errors.hpp"
#include "steinhaus/orders.hpp"

namespace steinhaus {

namespace {

void require_odd(Modulus modulus, const char* what) {
  if (modulus.value() % 2 == 0) {
    raise(Errc::EvenModulus, std::string(what) + " requires odd n, got " +
                                 std::to_string(modulus.value()));
  }
}

}  // namespace

ArithmeticProgression::ArithmeticProgression(Modulus modulus, std::uint64_t first,
                                             std::uint64_t difference, std::size_t length)
    : modulus_(modulus), a_(0), d_(0), m_(length) {
  if (length == 0) raise(Errc::InvalidArgument, "progression length must be >= 1");
  a_ = Residue(modulus, first).value();
  d_ = Residue(modulus, difference).value();
}

Sequence ap_sequence(const ArithmeticProgression& ap) {
  const std::uint64_t n = ap.modulus().value();
  std::vector<residue_t> terms(ap.length());
  std::uint64_t x = ap.first();
  for (auto& t : terms) {
    t = static_cast<residue_t>(x);
    x = (x + ap.difference()) % n;
  }
  return Sequence(ap.modulus(), std::move(terms));
}

ArithmeticProgression ap_derived_closed(const ArithmeticProgression& ap, std::size_t i) {
  if (i >= ap.length()) {
    raise(Errc::IndexOutOfRange, "derivation order " + std::to_string(i) +
                                     " must be < length " + std::to_string(ap.length()));
  }
  const std::uint64_t n = ap.modulus().value();
  const std::uint64_t p = pow_mod(2, i, n);
  std::uint64_t first = mul_mod(p, ap.first(), n);
  if (i > 0) {
    const std::uint64_t coeff = mul_mod(i % n, pow_mod(2, i - 1, n), n);
    first = (first + mul_mod(coeff, ap.difference(), n)) % n;
  }
  return {ap.modulus(), first, mul_mod(p, ap.difference(), n), ap.length() - i};
}

residue_t ap_entry(const ArithmeticProgression& ap, std::size_t i, std::size_t j) {
  const std::size_t m = ap.length();
  if (i < 1 || i > m || j < 1 || j > m - i + 1) {
    raise(Errc::IndexOutOfRange, "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                     ") outside a triangle of size " + std::to_string(m));
  }
  const std::uint64_t n = ap.modulus().value();
  if (i == 1) return static_cast<residue_t>((ap.first() + mul_mod((j - 1) % n, ap.difference(), n)) % n);
  // 2^(i-1) a + 2^(i-2) (2j + i - 3) d
  const std::uint64_t lead = mul_mod(pow_mod(2, i - 1, n), ap.first(), n);
  const std::uint64_t k = (2 * (j % n) + i % n + 3 * n - 3) % n;
  const std::uint64_t tail = mul_mod(mul_mod(pow_mod(2, i - 2, n), k, n), ap.difference(), n);
  return static_cast<residue_t>((lead + tail) % n);
}

std::uint64_t half_mod(std::uint64_t n) { return ((n + 1) / 2) % n; }

ArithmeticProgression ap_primitive(const ArithmeticProgression& ap) {
  require_odd(ap.modulus(), "ap_primitive");
  const std::uint64_t n = ap.modulus().value();
  const std::uint64_t h = half_mod(n);
  const std::uint64_t q = mul_mod(h, h, n);
  const std::uint64_t first = (mul_mod(h, ap.first(), n) + n - mul_mod(q, ap.difference(), n)) % n;
  return {ap.modulus(), first, mul_mod(h, ap.difference(), n), ap.length() + 1};
}

ArithmeticProgression antisymmetric_ap(const Residue& d, std::size_t m) {
  require_odd(d.modulus(), "antisymmetric_ap");
  const std::uint64_t n = d.modulus().value();
  // 2a + (m-1)d = 0, so a = 2^{-1} (1 - m) d.
  const std::uint64_t one_minus_m = (1 + n - m % n) % n;
  const std::uint64_t first = mul_mod(mul_mod(half_mod(n), one_minus_m, n), d.value(), n);
  return {d.modulus(), first, d.value(), m};
}

ArithmeticProgression construct_balanced_ap(std::uint64_t n, std::size_t m,
                                            const ConstructionOptions& options) {
  const Modulus modulus(n);
  require_odd(modulus, "construct_balanced");
  if (m == 0) raise(Errc::InvalidArgument, "length must be >= 1");
  const std::uint64_t d = options.d % n;
  if (std::gcd(d, n) != 1) {
    raise(Errc::NotInvertible, std::to_string(options.d) + " is not invertible modulo " +
                                   std::to_string(n));
  }
  const bool beta_family = options.family == ConstructionFamily::Beta;
  const std::uint64_t period = (beta_family ? beta(n) : alpha(n)) * n;
  const std::uint64_t r = m % period;
  const bool zero_class = r == 0;
  const bool minus_one_class = r == period - 1;
  if (!zero_class && !minus_one_class) {
    raise(Errc::UnsupportedLength,
          "length " + std::to_string(m) + " is not 0 or -1 modulo " + std::to_string(period) +
              (beta_family ? " (beta(n) n)" : " (alpha(n) n)"));
  }
  if (!beta_family) return {modulus, options.a % n, d, m};
  const std::uint64_t first = zero_class ? mul_mod(half_mod(n), d, n) : d;
  return {modulus, first, d, m};
}

Sequence construct_balanced(std::uint64_t n, std::size_t m, const ConstructionOptions& options) {
  return ap_sequence(construct_balanced_ap(n, m, options));
}

}  // namespace steinhaus
