#pragma once

#include <stdexcept>
#include <string>

namespace kcgh {

// Base for all library errors. Each subclass maps to one CLI exit code so
// scripted callers can tell failure categories apart without parsing text.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual int exit_code() const noexcept { return 10; }
};

// Field/mask shape disagreement between operands.
class DimensionError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 8; }
};

// Invalid optical configuration (non-physical pitch, depth beyond the
// aliasing bound, empty wavelength list, ...).
class ConfigError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

// Argument value outside its documented domain (negative amplitude,
// zero layer count, tilt beyond the Nyquist bound, ...).
class DomainError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 9; }
};

// Scene content unusable (no valid pixels, object count over capacity).
class SceneError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 7; }
};

// Object in the wrong state for the requested operation
// (hologram not at plane z = 0, mismatched channel counts, ...).
class StateError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 9; }
};

// Malformed file content (bad magic, truncated payload, unknown kind).
class FormatError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 6; }
};

// Data fails a validation contract (non-finite samples, values outside
// a normalized range, duplicate manifest ids).
class ValidationError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

// Invalid synthesis or run parameters.
class ParamsError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 4; }
};

// Filesystem failure: missing input, unwritable output.
class IoError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 5; }
};

} // namespace kcgh
