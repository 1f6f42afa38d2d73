#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prelie {

enum class ErrorCode {
  DivisionByZero,
  EvalDenZero,
  ParseError,
  UnknownParam,
  DimMismatch,
  MissingMember,
  NotInvertible,
  UnknownFixture,
  GridTooLarge,
  SymbolicTemplate,
  UnknownLaw,
  InvalidInput,
  Io,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &msg)
      : std::runtime_error(msg), code_(code) {}
  Error(ErrorCode code, const std::string &msg, std::size_t pos,
        std::vector<std::string> expected)
      : std::runtime_error(msg), code_(code), pos_(pos),
        expected_(std::move(expected)) {}

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> position() const { return pos_; }
  const std::vector<std::string> &expected() const { return expected_; }

private:
  ErrorCode code_;
  std::optional<std::size_t> pos_;
  std::vector<std::string> expected_;
};

} // namespace prelie
