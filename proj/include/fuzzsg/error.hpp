#pragma once

#include <stdexcept>
#include <string>

namespace fuzzsg {

  /// Base class of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// A structural invariant of the library itself failed.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace fuzzsg

// Checked in every build type; these guard the algebraic invariants the
// rest of the library relies on.
#define FUZZSG_ASSERT(cond)                                               \
  do {                                                                    \
    if (!(cond))                                                          \
      throw ::fuzzsg::InternalError(std::string("invariant failed: ")     \
                                    + #cond + " (" + __FILE__ + ":"       \
                                    + std::to_string(__LINE__) + ")");    \
  } while (false)
