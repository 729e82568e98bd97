#pragma once

#include <stdexcept>
#include <string>

namespace polyhahn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A denominator Pochhammer symbol vanished inside the summation range.
class DenominatorPole : public Error {
 public:
  using Error::Error;
};

/// Some l_i + l_j < N. Indices are 1-based.
class Inadmissible : public Error {
 public:
  Inadmissible(int i, int j, const std::string& what) : Error(what), i_(i), j_(j) {}
  int first() const noexcept { return i_; }
  int second() const noexcept { return j_; }

 private:
  int i_;
  int j_;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class PointOutsideDomain : public Error {
 public:
  using Error::Error;
};

class IndexOutsideH : public Error {
 public:
  using Error::Error;
};

class WrongDimension : public Error {
 public:
  using Error::Error;
};

class NeedsDimension : public Error {
 public:
  using Error::Error;
};

class UnsupportedPair : public Error {
 public:
  using Error::Error;
};

class RepresentationMismatch : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed, e.g. a lattice operator shifting out of its
/// domain with a nonzero coefficient.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyhahn
