#pragma once

#include <stdexcept>
#include <string>

namespace edgebetti {

// Malformed or out-of-range input: bad vertex labels, loops, duplicate
// edges, unparsable files, invalid generator parameters.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured size cap (vertex cap, oracle cap) or a 64-bit count limit
// was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Census request for a pattern outside the supported set.
class UnsupportedPattern : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Two routes that must agree did not. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace edgebetti
