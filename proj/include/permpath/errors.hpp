#pragma once

#include <stdexcept>
#include <string>

namespace permpath {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: duplicate letters, bad text, out-of-range arguments.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but lies outside a bijection's or operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A constraint or family the closed forms do not cover.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An exhaustive scan was asked to go past its size cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace permpath
