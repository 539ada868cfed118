#pragma once

#include <stdexcept>
#include <string>

namespace logcv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IncompatibleTowers : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptyResult : public Error {
 public:
  using Error::Error;
};

class NonPositiveEntry : public Error {
 public:
  using Error::Error;
};

/// Raised by the certificate procedures when the input is not strictly positive.
class NonPositiveInput : public NonPositiveEntry {
 public:
  using NonPositiveEntry::NonPositiveEntry;
};

class SingularStep : public Error {
 public:
  SingularStep(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  [[nodiscard]] std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class OrderOverflow : public Error {
 public:
  using Error::Error;
};

class InsufficientTerms : public Error {
 public:
  using Error::Error;
};

class DegreeTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace logcv
