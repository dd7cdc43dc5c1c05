#pragma once

#include <stdexcept>
#include <string>

namespace weylchar {

// Error taxonomy shared with the CLI exit codes:
//   ConfigError -> 2, CapabilityError -> 3, BoundError -> 4, CheckError -> 5.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested operation is not supported for this datum (e.g. fundamental
// coweights on a simply connected datum whose center is not connected).
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configurable enumeration cap was exceeded.
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal consistency assertion failed.
struct CheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace weylchar
