#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pgca {

enum class ErrorCode {
    DivisionByZero,
    BasisMismatch,
    OutOfWindow,
    WindowTooSmall,
    InfeasibleWitness,
    MissingAnchor,
    NotInSpan,
    TableMismatch,
    ReplayFailed,
    ProbeSetTooSmall,
    ParseError,
    BasisMixError,
    SchemaError,
};

/// Stable taxonomy name, as used in reports ("NotInSpan", ...).
std::string_view error_code_name(ErrorCode code);

/// Base of every error thrown by the library.
///
/// `subject()` carries the offending object in text form when one exists:
/// the failing table point for TableMismatch, the stray basis vector for
/// ReplayFailed, the JSON path for SchemaError.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message, std::string subject = {})
        : std::runtime_error(message), code_(code), subject_(std::move(subject))
    {
    }

    ErrorCode code() const noexcept { return code_; }
    std::string_view code_name() const { return error_code_name(code_); }
    const std::string &subject() const noexcept { return subject_; }

  private:
    ErrorCode code_;
    std::string subject_;
};

/// Positioned error from the element grammar. Also used for BasisMixError.
class ParseError : public Error {
  public:
    ParseError(ErrorCode code, const std::string &message, std::size_t offset,
               std::vector<std::string> expected = {});

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string> &expected() const noexcept { return expected_; }

  private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Document does not match the instance/report schema; `path()` is a JSON pointer.
class SchemaError : public Error {
  public:
    SchemaError(const std::string &path, const std::string &message)
        : Error(ErrorCode::SchemaError, path + ": " + message, path)
    {
    }

    const std::string &path() const noexcept { return subject(); }
};

} // namespace pgca
