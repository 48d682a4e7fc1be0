#pragma once
#include <stdexcept>
#include <string>

namespace tca {

// Base error. CLI maps ConfigError -> exit 1, DataError -> exit 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad configuration / invalid arguments / precondition violations.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Malformed or inconsistent input data.
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

} // namespace tca
