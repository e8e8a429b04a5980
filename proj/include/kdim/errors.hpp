#pragma once

#include <stdexcept>
#include <string>

namespace kdim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: out-of-range vertices, self-loops, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list or graph6 text.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Raised by operations that are only defined on connected graphs.
class NotConnected : public Error {
 public:
  using Error::Error;
};

}  // namespace kdim
