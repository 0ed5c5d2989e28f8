#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace whq {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& what, std::size_t expected, std::size_t actual)
      : Error(what + ": dimension mismatch (expected " + std::to_string(expected) +
              ", got " + std::to_string(actual) + ")"),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// A displayed identity failed. `label()` carries the identity's tag, e.g. "(a4-5)".
class LawFailure : public Error {
 public:
  LawFailure(std::string label, const std::string& detail)
      : Error(label + " failed: " + detail), label_(std::move(label)) {}

  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class AxiomViolation : public LawFailure {
 public:
  using LawFailure::LawFailure;
};

class NotStrong : public LawFailure {
 public:
  explicit NotStrong(const std::string& detail) : LawFailure("(c1)", detail) {}
};

class NotMorphism : public LawFailure {
 public:
  using LawFailure::LawFailure;
};

class NotEquivariant : public LawFailure {
 public:
  using LawFailure::LawFailure;
};

/// Two objects that must live over the same weak Hopf quasigroup do not.
class MismatchedBase : public Error {
 public:
  using Error::Error;
};

class NotAssociative : public Error {
 public:
  using Error::Error;
};

class NoInverse : public Error {
 public:
  using Error::Error;
};

class NotIPLoop : public Error {
 public:
  using Error::Error;
};

class InvalidGroupoid : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace whq
