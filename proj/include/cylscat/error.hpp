#pragma once

#include <stdexcept>
#include <string>

namespace cylscat {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// kappa_1^2 or kappa_2^2 is not positive: the interior field would not propagate.
class NonPropagatingError : public Error {
public:
    using Error::Error;
};

class InvalidMaterialError : public Error {
public:
    using Error::Error;
};

// Argument outside the domain of a function (e.g. Y_0 at x <= 0).
class DomainError : public Error {
public:
    using Error::Error;
};

class GeometryError : public Error {
public:
    using Error::Error;
};

class SingularSystemError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace cylscat
