#pragma once

#include <stdexcept>
#include <string>

namespace nvl {

/// Input violates the documented precondition of an operation. The CLI maps
/// this to exit code 1.
class PreconditionError : public std::invalid_argument {
public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal consistency check failed. Reaching one of these on valid input
/// is a bug. The CLI maps this to exit code 2.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Randomized search for an invertible intertwiner ran out of candidates.
class SearchExhausted : public InternalError {
public:
  explicit SearchExhausted(const std::string& what) : InternalError(what) {}
};

/// Generic resampling hit its retry cap.
class ResampleExhausted : public InternalError {
public:
  explicit ResampleExhausted(const std::string& what) : InternalError(what) {}
};

} // namespace nvl
