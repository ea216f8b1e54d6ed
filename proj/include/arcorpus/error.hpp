#pragma once

#include <stdexcept>
#include <string>

namespace arcorpus {

enum class ErrorKind {
  EmptyReference,
  DivisionByZero,
  EmptyCorpus,
  LineCountMismatch,
  InsufficientCorpus,
  SchemaMismatch,
  MalformedRecord,
  InvalidConfig,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

// Every data-level failure in the library is reported through this type; the
// CLI maps it to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arcorpus
