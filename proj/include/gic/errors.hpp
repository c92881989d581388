#pragma once

#include <stdexcept>
#include <string>

namespace gic {

// Input text that cannot be turned into a graph.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap (oracle size, time budget) was exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gic
