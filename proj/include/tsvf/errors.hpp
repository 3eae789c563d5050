#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsvf {

// Base class for everything thrown by this library. Subcommands of the CLI
// map these to exit code 3.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct ZeroVector : Error {
    using Error::Error;
};
struct NotUnitary : Error {
    using Error::Error;
};
struct NotHermitian : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct InvalidOperator : Error {
    using Error::Error;
};
struct BadN : Error {
    using Error::Error;
};
struct BadTriplet : Error {
    using Error::Error;
};
struct OrthogonalSelection : Error {
    using Error::Error;
};
struct IncompleteSet : Error {
    using Error::Error;
};
struct NotProjector : Error {
    using Error::Error;
};
struct ZeroDenominator : Error {
    using Error::Error;
};
struct PostSelectionImpossible : Error {
    using Error::Error;
};
struct GridTooSmall : Error {
    using Error::Error;
};

// Parser errors carry the byte offset of the offending token.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};
struct DuplicateSite : Error {
    using Error::Error;
};
struct SiteOutOfRange : Error {
    using Error::Error;
};

struct UnknownScenario : Error {
    using Error::Error;
};
struct BadParams : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace tsvf
