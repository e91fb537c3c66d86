#pragma once

#include <stdexcept>
#include <string>

namespace hahnosc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A denominator parameter of a terminating series vanishes before termination.
class PoleInRange : public Error {
 public:
  PoleInRange(const std::string& what, std::string parameter)
      : Error(what), parameter_(std::move(parameter)) {}
  explicit PoleInRange(const std::string& what) : Error(what) {}
  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Saalschütz balance condition violated.
class BalanceError : public Error {
 public:
  using Error::Error;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

}  // namespace hahnosc
