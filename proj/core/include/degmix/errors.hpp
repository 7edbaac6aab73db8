#pragma once

#include <stdexcept>
#include <string>

namespace degmix {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: negative degrees, mismatched lengths, out-of-range indices.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotGraphical : public Error {
 public:
  using Error::Error;
};

class InvalidSplit : public Error {
 public:
  using Error::Error;
};

class ForbiddenSetNotMatching : public Error {
 public:
  using Error::Error;
};

/// The instance exceeds the configured enumeration cap.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// The realization graph has more than one connected component.
class Disconnected : public Error {
 public:
  using Error::Error;
};

class ProductMismatch : public Error {
 public:
  using Error::Error;
};

class InconsistentMatrix : public Error {
 public:
  using Error::Error;
};

class DivisibilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace degmix
