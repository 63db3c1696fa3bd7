#pragma once

#include <stdexcept>

namespace evotrans {

// Bad command-line input: unknown subcommand, unknown scheme, malformed or
// missing flags. The CLI maps this to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration or input data discovered after parsing: mismatched
// image dimensions, alpha-channel inputs, out-of-range parameters. Exit
// code 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem and codec failures: unreadable, truncated or unsupported files,
// unwritable output locations. Exit code 3.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace evotrans
