#pragma once

#include <stdexcept>
#include <string>

namespace modlat {

// Requested coefficient/index lies beyond the tracked precision of a series.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration or solve exceeded its configured resource cap.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: dimension mismatch, bad Gram file, invalid invocation.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace modlat
