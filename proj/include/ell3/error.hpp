#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ell3 {

/// Base class for every error the library reports. Callers that only need a
/// message can catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateLabel : public Error {
 public:
  using Error::Error;
};

class DuplicatePoint : public Error {
 public:
  using Error::Error;
};

class UnknownDataset : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

class SeedConflict : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class CertificateError : public Error {
 public:
  CertificateError(std::size_t line, const std::string& what)
      : Error("certificate line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Chain checking.

class StepNotForced : public Error {
 public:
  StepNotForced(std::size_t step, const std::string& diagnostic)
      : Error("step " + std::to_string(step) + " is not forced\n" + diagnostic), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

class PrematureContradiction : public Error {
 public:
  PrematureContradiction(std::size_t step, const std::string& what)
      : Error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

class NoContradiction : public Error {
 public:
  using Error::Error;
};

class OutOfOrderWitness : public Error {
 public:
  using Error::Error;
};

// Grid.

class NoCompletion : public Error {
 public:
  using Error::Error;
};

class CenterTooCloseToBoundary : public Error {
 public:
  using Error::Error;
};

}  // namespace ell3
