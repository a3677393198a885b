#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sl2cp {

enum class ErrorKind {
  NotAdmissible,
  NotCharPoly,
  NotDivisible,
  BadInput,
  SizeCapExceeded,
  AsymmetricSpectrum,
  IndexOutOfRange,
  NotInAlgebra,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotCharPoly: return "NotCharPoly";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::AsymmetricSpectrum: return "AsymmetricSpectrum";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotInAlgebra: return "NotInAlgebra";
  }
  return "Unknown";
}

/// Domain error carrying a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sl2cp
