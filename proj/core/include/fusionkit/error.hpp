#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fusionkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closure or enumeration grew beyond its configured element/subgroup cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

/// Malformed group file; `line()` is 1-based, 0 when not attributable.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class PNotPrime : public Error {
 public:
  explicit PNotPrime(unsigned p) : Error(std::to_string(p) + " is not a prime"), p_(p) {}
  unsigned prime() const { return p_; }

 private:
  unsigned p_;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class SylowMismatch : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

class NotPGroup : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

/// A search that is guaranteed to succeed came back empty.
class NotFound : public Error {
 public:
  using Error::Error;
};

class ClaimFailed : public Error {
 public:
  explicit ClaimFailed(const std::string& claim) : Error("claim failed: " + claim), claim_(claim) {}
  const std::string& claim() const { return claim_; }

 private:
  std::string claim_;
};

}  // namespace fusionkit
