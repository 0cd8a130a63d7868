#pragma once

#include <stdexcept>
#include <string>

namespace sab {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation (x <= 0, k <= 0, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Parameter pair lies outside the admissible region R_ab.
class RegionError : public Error {
public:
    explicit RegionError(const std::string& what) : Error(what) {}
};

// alpha == beta (or kappa1 == kappa2): the normalized family is undefined there.
class NondegenerateParamError : public Error {
public:
    explicit NondegenerateParamError(const std::string& what) : Error(what) {}
};

// A map required to be strictly monotone fails the monotonicity gate.
class MonotonicityError : public Error {
public:
    explicit MonotonicityError(const std::string& what) : Error(what) {}
};

// Requested value is outside the attainable range of an inverted map.
class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error(what) {}
};

// Iterative solver exhausted its budget.
class NoConvergenceError : public Error {
public:
    explicit NoConvergenceError(const std::string& what) : Error(what) {}
};

// Directional scan along slope 1: alpha - beta vanishes identically.
class DegenerateDirectionError : public Error {
public:
    explicit DegenerateDirectionError(const std::string& what) : Error(what) {}
};

} // namespace sab
