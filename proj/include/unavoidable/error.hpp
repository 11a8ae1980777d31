#pragma once

#include <stdexcept>
#include <string>

namespace unavoidable {

/// Malformed input file or document (graph6, edge list, certificate JSON).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on input that violates its precondition
/// (for example a graph that is not 2-connected).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Structured failure of a best-effort stage. Never carries a certificate.
struct StageFailure {
  std::string stage;
  std::string reason;
};

}  // namespace unavoidable
