#pragma once

#include <stdexcept>
#include <string>

namespace vck {

// Bad caller input: weights, shapes, kinds, out-of-range parameters.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem or parse trouble.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A solver produced witnesses that fail their own consistency check.
struct CertificateError : std::runtime_error {
    explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace vck
