#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modsuper {

enum class ErrorKind {
  InvalidField,
  ZeroInverse,
  Singular,
  DimensionMismatch,
  MalformedRow,
  MalformedDatum,
  NotApplicable,
  HeightExceeded,
  Diverged,
  NotUnique,
  Incomplete,
  SyntaxError,
  InhomogeneousSum,
  BadGenerator,
  NotFound,
  CorpusCorrupt,
  ParseError,
};

std::string_view error_name(ErrorKind kind);

// Domain error carrying a machine-checkable kind. The message always starts
// with the kind name so that command-line output names the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace modsuper
