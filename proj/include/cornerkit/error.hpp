#pragma once

#include <stdexcept>
#include <string>

namespace cornerkit {

/// Base error for malformed inputs and violated preconditions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an exhaustive search would exceed its configured bound.
class SearchTooLarge : public Error {
public:
    explicit SearchTooLarge(const std::string& what) : Error(what) {}
};

} // namespace cornerkit
