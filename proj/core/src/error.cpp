#include "pnc/error.hpp"

namespace pnc {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidLabel: return "InvalidLabel";
    case Errc::TooShort: return "TooShort";
    case Errc::NotClosed: return "NotClosed";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::RepeatedEdge: return "RepeatedEdge";
    case Errc::NotAnIntersection: return "NotAnIntersection";
    case Errc::NotASubCircuit: return "NotASubCircuit";
    case Errc::NotPnc: return "NotPnc";
    case Errc::NotInternalVertex: return "NotInternalVertex";
    case Errc::TrivialPnc: return "TrivialPnc";
    case Errc::InvalidChain: return "InvalidChain";
    case Errc::NotAMember: return "NotAMember";
    case Errc::NotInFamily: return "NotInFamily";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::TooLong: return "TooLong";
    case Errc::BoundMismatch: return "BoundMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(NotPncReason reason) noexcept {
  switch (reason) {
    case NotPncReason::VertexTriple: return "VertexTriple";
    case NotPncReason::StartVertexRepeats: return "StartVertexRepeats";
    case NotPncReason::NotTotallyNested: return "NotTotallyNested";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code) {}

NotPncError::NotPncError(NotPncReason reason, const std::string& detail)
    : Error(Errc::NotPnc, std::string(to_string(reason)) + ": " + detail),
      reason_(reason) {}

}  // namespace pnc
