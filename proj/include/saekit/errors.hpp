#pragma once

#include <stdexcept>
#include <string>

namespace saekit {

// Base for everything thrown by this library. CLI maps ConfigError to
// exit 1, the rest to exit 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Non-finite values, degenerate columns, degenerate variance.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Bad magic bytes.
class FormatError : public IoError {
public:
    explicit FormatError(const std::string& msg) : IoError(msg) {}
};

// Unsupported file version.
class VersionError : public IoError {
public:
    explicit VersionError(const std::string& msg) : IoError(msg) {}
};

// File ends before the payload does.
class TruncationError : public IoError {
public:
    explicit TruncationError(const std::string& msg) : IoError(msg) {}
};

} // namespace saekit
