#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idealis {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checked arithmetic left the 63-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's domain (zero input, non-monic polynomial,
/// mismatched characteristic, division by zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two operands live in different rings.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

/// A predicate was asked about the whole ring.
class NotProperError : public Error {
 public:
  using Error::Error;
};

/// Enumeration was requested over an infinite ring.
class InfiniteRingError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured ideal or element cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Malformed ring, element, ideal or polynomial text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace idealis
