#ifndef SEMORIENT_ERRORS_H_
#define SEMORIENT_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semorient {

// Base of every error raised by the library. The CLI maps IoError (and its
// subclasses) to exit code 3 and every other Error to exit code 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

class CacheIoError : public IoError {
 public:
  using IoError::IoError;
};

// Input data violates a documented format. Carries the 1-based line number
// when the input is line oriented (0 when unknown).
class FormatError : public Error {
 public:
  FormatError(const std::string& what, size_t line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  size_t line() const { return line_; }

 private:
  size_t line_;
};

class MalformedPretagged : public FormatError {
 public:
  using FormatError::FormatError;
};

class MalformedReview : public FormatError {
 public:
  using FormatError::FormatError;
};

class IndexFormatError : public FormatError {
 public:
  using FormatError::FormatError;
};

class DuplicateDocId : public Error {
 public:
  using Error::Error;
};

class InvalidQuery : public Error {
 public:
  using Error::Error;
};

// A hit backend could not answer a query.
class BackendUnavailable : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Both reference-word totals are zero, so the log-odds ratio carries no
// information about the phrase.
class DegenerateReference : public Error {
 public:
  using Error::Error;
};

class EmptyEvaluation : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class ZeroVariance : public Error {
 public:
  using Error::Error;
};

}  // namespace semorient

#endif  // SEMORIENT_ERRORS_H_
