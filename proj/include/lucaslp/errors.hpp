#pragma once

#include <stdexcept>
#include <string>

namespace lucaslp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class NonInvertible : public Error {
 public:
  using Error::Error;
};

/// A period or rank-of-apparition scan ran past its step limit.
class ScanExhausted : public Error {
 public:
  using Error::Error;
};

/// Index arguments violate the ordering an identity requires (e.g. r > n).
class IndexOrder : public Error {
 public:
  using Error::Error;
};

class TableTooShort : public Error {
 public:
  using Error::Error;
};

class NotFoundWithinBound : public Error {
 public:
  using Error::Error;
};

class CsvUnrepresentable : public Error {
 public:
  using Error::Error;
};

}  // namespace lucaslp
