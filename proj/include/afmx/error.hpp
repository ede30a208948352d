#pragma once

#include <stdexcept>
#include <string>

namespace afmx {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A label sequence that is not a bijection on 1..n.
class MalformedPermutation : public Error {
public:
  using Error::Error;
};

/// Argument identifier or matrix position outside 1..n.
class IndexError : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionViolation : public Error {
public:
  using Error::Error;
};

/// Malformed framework text (TGF / APX).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Bad flag, unknown tag or unknown question.
class UsageError : public Error {
public:
  using Error::Error;
};

/// A result contradicts a property the theory guarantees (e.g. two grounded extensions).
class InvariantFailure : public Error {
public:
  using Error::Error;
};

} // namespace afmx
