#ifndef SAVKIT_ERRORS_HPP
#define SAVKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace savkit {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// An index does not refer to a candidate of the profile.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A committee size outside 1..m, or an empty committee.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Invalid construction parameters (profiles, tie policies, culture specs).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration refused because the instance is too large.
class EnumerationLimitError : public Error {
 public:
  using Error::Error;
};

/// Ballot document syntax or validation failure. Line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, std::string message, std::string token = {})
      : Error(format(line, message, token)),
        line_(line),
        message_(std::move(message)),
        token_(std::move(token)) {}

  int line() const { return line_; }
  const std::string& message() const { return message_; }
  const std::string& token() const { return token_; }

 private:
  static std::string format(int line, const std::string& message,
                            const std::string& token) {
    std::string s = "line " + std::to_string(line) + ": " + message;
    if (!token.empty()) s += " '" + token + "'";
    return s;
  }

  int line_;
  std::string message_;
  std::string token_;
};

}  // namespace savkit

#endif  // SAVKIT_ERRORS_HPP
