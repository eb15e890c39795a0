#pragma once

#include <stdexcept>

namespace erdoslab {

// Requested data lies outside what the given PrimeTable (or other
// precomputed structure) covers. Results are never silently truncated.
struct coverage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured memory or size budget would be exceeded.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No prime was found in (n, 2n). Firing means a bug in the table or the
// search -- treated as a logic error, and its firing is itself a test failure.
struct postulate_violation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace erdoslab
