#pragma once

#include <stdexcept>
#include <string>

namespace dhtgb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index range with lo > hi, or a negative guard width.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Non-finite samples, malformed waveform specs, bad guard lists.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Two signals that should share origin and width do not.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// The zero-guard reconstruction is exact, so error ratios are undefined.
class DegenerateBaseline : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dhtgb
