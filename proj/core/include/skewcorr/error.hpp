#pragma once

#include <stdexcept>
#include <string>

namespace skewcorr {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input failed a named structural check ("square", "hermitian",
// "trace", "dimensions", ...).
class ValidationError : public Error {
 public:
  ValidationError(std::string check, const std::string& detail)
      : Error(check + ": " + detail), check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

// An eigenvalue below the clamping window was found.
class NotPositiveSemidefiniteError : public ValidationError {
 public:
  explicit NotPositiveSemidefiniteError(double eigenvalue);

  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

// The closed forms only cover a qubit on subsystem A.
class UnsupportedDimensionError : public Error {
 public:
  UnsupportedDimensionError(int dim_a, const std::string& operation);
};

class PurityError : public Error {
 public:
  explicit PurityError(double purity);

  double purity() const noexcept { return purity_; }

 private:
  double purity_;
};

// A measure value fell outside its admissible range by more than the
// rounding window.
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace skewcorr
