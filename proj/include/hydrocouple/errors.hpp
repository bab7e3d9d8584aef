#pragma once

#include <stdexcept>
#include <string>

namespace hydrocouple {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Physically meaningless input (negative depth, zero width, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class MeshError : public Error {
public:
    using Error::Error;
};

/// An explicit update produced a negative depth or area; the time step was too large.
class StabilityError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace hydrocouple
