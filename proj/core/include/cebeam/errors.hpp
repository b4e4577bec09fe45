#pragma once

#include <stdexcept>
#include <string>

namespace cebeam {

/// Construction argument violates a precondition (counts, extents, waists, ...).
class InvalidParameterError : public std::invalid_argument {
public:
    explicit InvalidParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two sampled fields do not share the same grid.
class IncompatibleGridError : public std::invalid_argument {
public:
    explicit IncompatibleGridError(const std::string& what) : std::invalid_argument(what) {}
};

/// Beam geometry is inconsistent (e.g. overlapping rect spots without the override).
class InvalidGeometryError : public std::invalid_argument {
public:
    explicit InvalidGeometryError(const std::string& what) : std::invalid_argument(what) {}
};

/// Beam cannot be expressed in the requested truncated basis.
class NotRepresentableError : public std::invalid_argument {
public:
    explicit NotRepresentableError(const std::string& what) : std::invalid_argument(what) {}
};

/// Beam (or matrix) carries no intensity, so the requested quantity is undefined.
class DegenerateBeamError : public std::invalid_argument {
public:
    explicit DegenerateBeamError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical routine produced an out-of-contract result (e.g. indefinite Gram).
class NumericalFailureError : public std::runtime_error {
public:
    explicit NumericalFailureError(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cebeam
