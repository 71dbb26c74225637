#pragma once

#include <stdexcept>
#include <string>

namespace simplepaths {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorCode : int {
  Usage = 1,
  Parse = 2,
  Limit = 3,
  Mismatch = 4,
  Capability = 5,
  SelfCheck = 6,
  Cancelled = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorCode::Usage, what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class LimitError : public Error {
 public:
  explicit LimitError(const std::string& what) : Error(ErrorCode::Limit, what) {}
};

/// Operation needs a ring capability (e.g. exact integer division) the ring lacks.
class CapabilityError : public Error {
 public:
  explicit CapabilityError(const std::string& what) : Error(ErrorCode::Capability, what) {}
};

/// An internal identity that must hold exactly did not. Always an engine bug.
class SelfCheckError : public Error {
 public:
  explicit SelfCheckError(const std::string& what) : Error(ErrorCode::SelfCheck, what) {}
};

class MismatchError : public Error {
 public:
  explicit MismatchError(const std::string& what) : Error(ErrorCode::Mismatch, what) {}
};

class CancelledError : public Error {
 public:
  explicit CancelledError(const std::string& what) : Error(ErrorCode::Cancelled, what) {}
};

}  // namespace simplepaths
