#pragma once

#include <stdexcept>
#include <string>

namespace codim {

// Malformed input document (edge list, co-tree expression, hitting-set file).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input outside the supported domain
// (e.g. a co-graph that is not strongly connected, or a brute-force guard hit).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace codim
