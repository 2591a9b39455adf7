#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steinhaus {

/// Domain failures raised by the library. The CLI maps every one of these to
/// exit code 2 and prints the name returned by to_string().
enum class Errc {
  LengthTooShort,
  IndexOutOfRange,
  NotADivisor,
  NotPrime,
  NotCoprime,
  EvenModulus,
  NotInvertible,
  UnsupportedLength,
  BudgetExceeded,
  NotAdmissible,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace steinhaus
