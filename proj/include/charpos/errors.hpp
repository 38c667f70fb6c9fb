#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charpos {

// Base for every error raised by the library. Callers that only care about
// "something went wrong" catch this; the subclasses exist so that the CLI and
// the corpus scanner can tell cap hits apart from genuine failures.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public Error {
public:
  CapExceeded(const std::string& what_cap, std::size_t cap)
      : Error(what_cap + " cap of " + std::to_string(cap) + " exceeded"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

class MalformedPermutation : public Error {
public:
  using Error::Error;
};

class NotInGroup : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// Structured input (JSON certificates, corpus files) with the wrong shape.
class FormatError : public Error {
public:
  using Error::Error;
};

class GroupMismatch : public Error {
public:
  using Error::Error;
};

class NotACharacter : public Error {
public:
  using Error::Error;
};

class PreconditionViolation : public Error {
public:
  using Error::Error;
};

// Raised when an internal consistency check fails (e.g. a computed character
// table does not satisfy orthogonality). Never caught inside the library.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace charpos
