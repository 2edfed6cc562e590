// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace chlat {

/// Malformed input text (point files, rationals, flags).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard of an exponential search was exceeded.
class GuardExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace chlat
