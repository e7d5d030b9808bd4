#include "mlat/error.hpp"

namespace mlat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBounds: return "NoBounds";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::IdentityFails: return "IdentityFails";
    case ErrorKind::NotJoinDistributive: return "NotJoinDistributive";
    case ErrorKind::BottomNotAbsorbing: return "BottomNotAbsorbing";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotBoolean: return "NotBoolean";
    case ErrorKind::RadicalMismatch: return "RadicalMismatch";
    case ErrorKind::FrameLawViolation: return "FrameLawViolation";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::UnknownPredicate: return "UnknownPredicate";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     const std::vector<std::uint32_t>& witness) {
  std::string out{to_string(kind)};
  out += ": ";
  out += message;
  if (!witness.empty()) {
    out += " [witness:";
    for (auto w : witness) {
      out += ' ';
      out += std::to_string(w);
    }
    out += ']';
  }
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::vector<std::uint32_t> witness)
    : std::runtime_error(decorate(kind, message, witness)),
      kind_(kind),
      witness_(std::move(witness)) {}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(ErrorKind::ParseError,
            "line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

ValidationError::ValidationError(const Error& cause)
    : Error(ErrorKind::ValidationError, cause.what(), cause.witness()),
      cause_(cause.kind()) {}

}  // namespace mlat
