#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chowbg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (group expressions, field descriptors).
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Argument outside an operation's domain: non-prime p, a degree outside
/// the authoritative window, mismatched gradings and so on.
class DomainError : public Error {
public:
  using Error::Error;
};

/// The requested computation is outside what is known to be correct.
/// Never answered with a guess.
class UnsupportedError : public Error {
public:
  explicit UnsupportedError(const std::string& what)
      : Error("unsupported: " + what) {}
};

} // namespace chowbg
