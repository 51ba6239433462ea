#pragma once

#include <stdexcept>
#include <string>

namespace properlie {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input: bad rank, bad Satake data, catalog mismatch.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class DataFileError : public Error {
 public:
  using Error::Error;
};

}  // namespace properlie
