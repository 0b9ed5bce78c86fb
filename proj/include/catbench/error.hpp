#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catbench {

/// Base for every error raised by the library. The CLI maps subclasses onto
/// exit codes: InputError -> 2, DomainError -> 3, anything else -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problems with the bytes we were handed: unreadable files, malformed rows,
/// bad numbers, duplicates.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValueError : public InputError {
 public:
  ValueError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateError : public InputError {
 public:
  using InputError::InputError;
};

/// Requests that are well-formed but cannot be answered by the data.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public DomainError {
 public:
  using DomainError::DomainError;
};

class EmptyDataError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two histograms were built on different bin edges.
class IncompatibleSupportError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// q_i == 0 in a bin where p_i > 0; the divergence would be infinite.
class AbsoluteContinuityError : public DomainError {
 public:
  AbsoluteContinuityError(std::size_t bin, const std::string& what)
      : DomainError(what), bin_(bin) {}
  std::size_t bin() const noexcept { return bin_; }

 private:
  std::size_t bin_;
};

}  // namespace catbench
