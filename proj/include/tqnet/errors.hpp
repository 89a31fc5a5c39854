#pragma once

#include <stdexcept>
#include <string>

namespace tqnet {

struct InvalidValueError : std::runtime_error {
    explicit InvalidValueError(const std::string& msg) : std::runtime_error("invalid-value: " + msg) {}
};

struct UnsupportedClosureError : std::runtime_error {
    explicit UnsupportedClosureError(const std::string& msg)
        : std::runtime_error("unsupported-closure: " + msg) {}
};

struct ArithmeticOverflowError : std::runtime_error {
    explicit ArithmeticOverflowError(const std::string& msg)
        : std::runtime_error("arithmetic-overflow: " + msg) {}
};

struct MalformedQuantityError : std::runtime_error {
    explicit MalformedQuantityError(const std::string& msg)
        : std::runtime_error("malformed-quantity: " + msg) {}
};

struct DivisionByZeroError : std::runtime_error {
    explicit DivisionByZeroError(const std::string& msg)
        : std::runtime_error("division-by-zero: " + msg) {}
};

struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& msg) : std::runtime_error("dimension-mismatch: " + msg) {}
};

struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& msg) : std::runtime_error("unsupported: " + msg) {}
};

struct InvalidInputError : std::runtime_error {
    explicit InvalidInputError(const std::string& msg) : std::runtime_error("invalid-input: " + msg) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error("parse: " + msg) {}
};

struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& msg) : std::runtime_error("consistency: " + msg) {}
};

}  // namespace tqnet
