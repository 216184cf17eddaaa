#include "weylsys/errors.hpp"

namespace weylsys {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::Divergent: return "Divergent";
    case ErrorKind::EmptyTable: return "EmptyTable";
    case ErrorKind::UnsortedTable: return "UnsortedTable";
    case ErrorKind::OnSpectrum: return "OnSpectrum";
    case ErrorKind::RiccatiBlowup: return "RiccatiBlowup";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::InvalidBase: return "InvalidBase";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DegeneratePoints: return "DegeneratePoints";
    case ErrorKind::NotInverseStieltjes: return "NotInverseStieltjes";
  }
  return "Unknown";
}

}  // namespace weylsys
