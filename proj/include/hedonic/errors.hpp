#pragma once

#include <stdexcept>
#include <string>

namespace hedonic {

// Input file (graph / partition / campaign config) could not be parsed.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A combinatorial guard was exceeded (instance too large for exhaustive work).
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver exhausted its iteration budget without terminating.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A partition failed validation against a graph or size cap.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hedonic
