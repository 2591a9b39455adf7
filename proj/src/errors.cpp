#include "steinhaus/errors.hpp"

namespace steinhaus {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::LengthTooShort: return "LengthTooShort";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::EvenModulus: return "EvenModulus";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::UnsupportedLength: return "UnsupportedLength";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace steinhaus
