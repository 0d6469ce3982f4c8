#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pnc {

/// Error codes raised by the library. Every failure surfaces as a pnc::Error
/// carrying one of these.
enum class Errc {
  InvalidLabel,
  TooShort,
  NotClosed,
  SelfLoop,
  RepeatedEdge,
  NotAnIntersection,
  NotASubCircuit,
  NotPnc,
  NotInternalVertex,
  TrivialPnc,
  InvalidChain,
  NotAMember,
  NotInFamily,
  OutOfRange,
  TooLong,
  BoundMismatch,
  DimensionMismatch,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

enum class NotPncReason {
  VertexTriple,
  StartVertexRepeats,
  NotTotallyNested,
};

std::string_view to_string(NotPncReason reason) noexcept;

/// Raised by recognize() when a valid circuit fails the nesting conditions.
class NotPncError : public Error {
 public:
  NotPncError(NotPncReason reason, const std::string& detail);

  NotPncReason reason() const noexcept { return reason_; }

 private:
  NotPncReason reason_;
};

}  // namespace pnc
