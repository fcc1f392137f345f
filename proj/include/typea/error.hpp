#pragma once

#include <stdexcept>
#include <string>

namespace typea {

/// Base class for every domain error raised by the engine. The CLI maps
/// these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A part list that is not a partition (zero or negative entries).
class InvalidPartition : public Error {
 public:
  using Error::Error;
};

/// Sizes that must agree do not (label vs class, orbit vs group, p+q vs n_h+n_0).
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// A module key or operand whose product shape disagrees with the module.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A group kind the requested operation does not support.
class UnsupportedKind : public Error {
 public:
  using Error::Error;
};

/// Group parameters inconsistent with the group kind.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// An oracle asked to enumerate past its configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace typea
