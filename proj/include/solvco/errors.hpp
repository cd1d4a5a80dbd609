#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace solvco {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition failed or a verification did not hold.
class MathError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text or unknown names; maps to a usage failure in the CLI.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public MathError {
 public:
  using MathError::MathError;
};

class SingularMatrix : public MathError {
 public:
  using MathError::MathError;
};

class NotSemisimple : public MathError {
 public:
  using MathError::MathError;
};

class NotRationallySplittable : public MathError {
 public:
  using MathError::MathError;
};

class NotUnipotent : public MathError {
 public:
  using MathError::MathError;
};

class JacobiViolation : public MathError {
 public:
  using MathError::MathError;
};

class AntisymmetryViolation : public MathError {
 public:
  using MathError::MathError;
};

class NotSolvable : public MathError {
 public:
  using MathError::MathError;
};

class NotNilpotent : public MathError {
 public:
  using MathError::MathError;
};

class DimensionTooLarge : public MathError {
 public:
  using MathError::MathError;
};

/// One of the clauses (a)-(e) of a V + n decomposition failed.
class DecompositionInvalid : public MathError {
 public:
  DecompositionInvalid(char clause, const std::string& what)
      : MathError(what), clause_(clause) {}
  char clause() const noexcept { return clause_; }

 private:
  char clause_;
};

class NonCommutingTorus : public MathError {
 public:
  using MathError::MathError;
};

class NotQuasiUnipotent : public MathError {
 public:
  using MathError::MathError;
};

class NotFiniteOrder : public MathError {
 public:
  using MathError::MathError;
};

class InvalidHolonomy : public MathError {
 public:
  using MathError::MathError;
};

/// An internal consistency check on a constructed object failed.
class VerificationFailed : public MathError {
 public:
  using MathError::MathError;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownName : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace solvco
