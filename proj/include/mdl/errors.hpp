#pragma once

#include <stdexcept>
#include <string>

namespace mdl {

// Invalid caller input: bad graph data, parameters out of range, malformed files.
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed config / certificate / graph file content.
struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A search exceeded its explicit budget (node cap, size cap).
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// A construction the supporting argument guarantees could not be completed
// and no escape produced a verified certificate.  Carries enough context to
// reproduce the instance.
struct LemmaViolationError : std::runtime_error {
  explicit LemmaViolationError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal consistency check failed: indicates an implementation bug,
// never a property of the input.
struct DiagnosticError : std::logic_error {
  explicit DiagnosticError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace mdl
