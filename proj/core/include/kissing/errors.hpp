#pragma once

#include <stdexcept>
#include <string>

namespace kissing {

// Common base so callers can catch every library failure in one handler.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A linear solve was requested for a matrix with zero determinant.
class SingularMatrixError : public Error {
public:
  using Error::Error;
};

// A canonical row could not be matched to any generating tuple.
class NoExactRealizationError : public Error {
public:
  using Error::Error;
};

// The search was asked to enumerate from a row list that admits no subset.
class EmptySearchError : public Error {
public:
  using Error::Error;
};

// An enumeration finished without a single positive candidate value.
class NoCandidateError : public Error {
public:
  using Error::Error;
};

// A request was refused because it would exceed a built-in size guard.
class ResourceGuardError : public Error {
public:
  using Error::Error;
};

// Malformed input file or string.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace kissing
