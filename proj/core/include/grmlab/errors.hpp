#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grmlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Some path of length >= N does not reduce to zero modulo the relations.
class AdmissibilityViolation : public Error {
 public:
  using Error::Error;
};

class MalformedRelation : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

class NotSubmodule : public Error {
 public:
  using Error::Error;
};

/// An enumeration or randomized search hit its configured cap.
class SearchCapExceeded : public Error {
 public:
  using Error::Error;
};

class LatticeCapExceeded : public Error {
 public:
  LatticeCapExceeded(const std::string& what, std::size_t partial)
      : Error(what), partial_count_(partial) {}
  std::size_t partial_count() const { return partial_count_; }

 private:
  std::size_t partial_count_;
};

/// The endomorphism algebra contains an element that is neither nilpotent nor
/// invertible.
class NotLocal : public Error {
 public:
  using Error::Error;
};

/// An internal verification of a computed object failed.
class CheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace grmlab
