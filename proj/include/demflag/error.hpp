#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace demflag {

enum class ErrorKind {
  UnknownType,
  IndexOutOfRange,
  ZeroLevel,
  NotBelow,
  SimplyLaced,
  NotSimplyLaced,
  NotDominant,
  NonIntegralMin,
  NegativeMultiplicity,
  NonDominantLeading,
  DatumMismatch,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnknownType: return "UnknownType";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ZeroLevel: return "ZeroLevel";
    case ErrorKind::NotBelow: return "NotBelow";
    case ErrorKind::SimplyLaced: return "SimplyLaced";
    case ErrorKind::NotSimplyLaced: return "NotSimplyLaced";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::NonIntegralMin: return "NonIntegralMin";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::NonDominantLeading: return "NonDominantLeading";
    case ErrorKind::DatumMismatch: return "DatumMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so that
/// front ends can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace demflag
