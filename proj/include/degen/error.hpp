#pragma once

#include <stdexcept>
#include <string>

namespace degen {

/// Base of every error thrown by the library. The CLI maps all of them to
/// the "input error" exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or ambient dimensions that do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Fibre descriptor is missing a required block or is malformed.
class DescriptorError : public Error {
 public:
  using Error::Error;
};

/// A requested tri-degree or window lies outside the declared support.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Input data violates a mathematical identity it is required to satisfy.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Precondition of an operation violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Instance file could not be read. The message carries the line or field.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace degen
