#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crflag {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Cartan data does not describe a finite-type Dynkin diagram we support.
class MalformedGraph : public Error {
 public:
  using Error::Error;
};

/// Arrows do not extend to an involutive automorphism of the Dynkin graph.
class InvalidArrows : public Error {
 public:
  using Error::Error;
};

/// The induced conjugation fails one of the real-form invariants.
class NotASatakeDiagram : public Error {
 public:
  using Error::Error;
};

class UnknownForm : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class PsiNotSubset : public Error {
 public:
  using Error::Error;
};

class NotFundamental : public Error {
 public:
  using Error::Error;
};

/// Two incomparable minimal node sets both give subalgebras inside q + q̄.
class AmbiguousLargest : public Error {
 public:
  using Error::Error;
};

/// Catalog table entry failed validation at load time.
class DataIntegrityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& expected,
             const std::string& found)
      : Error("parse error at column " + std::to_string(position + 1) +
              ": expected " + expected + ", found " + found),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace crflag
