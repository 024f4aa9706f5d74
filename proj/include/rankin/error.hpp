#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankin {

enum class Errc {
  NotDominant,
  NotPure,
  DimensionMismatch,
  NegativeSymPower,
  OutOfRange,
  MalformedCharacter,
  BadIndex,
  UnsupportedCase,
  NotHalfOdd,
  AssumptionViolated,
  InfeasibleScale,
  Parse,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotDominant: return "NotDominant";
    case Errc::NotPure: return "NotPure";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NegativeSymPower: return "NegativeSymPower";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::MalformedCharacter: return "MalformedCharacter";
    case Errc::BadIndex: return "BadIndex";
    case Errc::UnsupportedCase: return "UnsupportedCase";
    case Errc::NotHalfOdd: return "NotHalfOdd";
    case Errc::AssumptionViolated: return "AssumptionViolated";
    case Errc::InfeasibleScale: return "InfeasibleScale";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rankin
