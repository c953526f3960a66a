#pragma once

#include <stdexcept>
#include <string>

namespace rzeta {

// Error taxonomy mirrors the CLI exit codes:
//   UsageError -> 2, DomainError -> 3, UnsupportedError -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: digit specs, parameter strings, inconsistent options.
struct UsageError : Error {
    using Error::Error;
};

// Parameter outside the domain where the series converges (sigma at or
// below the abscissa log_b N, oracle called at its pole, ...).
struct DomainError : Error {
    using Error::Error;
};

// Structurally valid request the implementation deliberately rejects
// (semi-convergent level-1 configuration, term cap exceeded).
struct UnsupportedError : Error {
    using Error::Error;
};

}  // namespace rzeta
