#pragma once

#include <stdexcept>
#include <string>

namespace echoview {

// Exit-code contract for the CLI: validation failures map to 1,
// numerical failures to 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// NaN/Inf during computation, divergence, corrupted gradients.
struct NumericError : Error {
    using Error::Error;
};

}  // namespace echoview
