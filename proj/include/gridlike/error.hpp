#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gridlike {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad vertex index, self-loop, duplicate edge).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A serialized artifact could not be parsed.
class FormatError : public InputError {
 public:
  using InputError::InputError;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The bramble is too small for the requested segmentation.
class InsufficientOrder : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An exact computation was asked for beyond its size limit.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// A randomized or budgeted search gave up; retrying with a new seed or a
/// larger budget may succeed.
class RetryableError : public Error {
 public:
  using Error::Error;
};

/// A state the underlying combinatorics rules out. Seeing one means a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Outcome of a certificate check. Empty reason means valid.
struct Verdict {
  bool ok = true;
  std::string reason;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace gridlike
