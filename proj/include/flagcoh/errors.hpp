#ifndef FLAGCOH_ERRORS_HPP
#define FLAGCOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flagcoh {

// Malformed input: a value that does not name a valid object (bad flag,
// non-dominant weight, mismatched lengths).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// The caller broke a documented precondition of an otherwise valid call.
class PreconditionViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// An enumeration guard was exceeded.
class ResourceLimit : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Valid input outside what an operation supports (e.g. a multi-step flag
// passed to a Grassmannian-only routine).
class UnsupportedInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace flagcoh

#endif // FLAGCOH_ERRORS_HPP
