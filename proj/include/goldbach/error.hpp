#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace goldbach {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// A residue class (q, a) with gcd(a, q) != 1.
class InvalidResidue : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Evaluation at a pole. `pole()` names the offending point when it is an integer.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, std::int64_t pole) : Error(what), pole_(pole) {}
  std::int64_t pole() const noexcept { return pole_; }

 private:
  std::int64_t pole_;
};

class KernelSingularity : public Error {
 public:
  using Error::Error;
};

/// Zero counts from sign changes and from the argument principle disagree.
class CertificationFailure : public Error {
 public:
  using Error::Error;
};

/// An unconditional theorem was contradicted; always a numerical bug.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class IngestionError : public Error {
 public:
  IngestionError(const std::string& what, std::size_t line) : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

class TableTooSmall : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace goldbach
