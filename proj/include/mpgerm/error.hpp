#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mpgerm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or file text. `offset` is a byte offset into the
/// offending string (or a line number for file formats, see `line()`).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : Error(what), offset_(offset), line_(line) {}
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

/// Operands were built over different variable lists.
class VarSetMismatch : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded its configured step budget. This is never a
/// mathematical verdict.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition (bad dimensions, bounds, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Data that should come from an honest group action is inconsistent
/// (non-integral isotypes, failed orthogonality, ...).
class InconsistentData : public Error {
 public:
  using Error::Error;
};

/// The germ is not A-finite, so the requested invariant is undefined.
class NotAFinite : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not. Signals a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace mpgerm
