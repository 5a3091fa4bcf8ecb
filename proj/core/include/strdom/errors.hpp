#pragma once

#include <stdexcept>
#include <string>

namespace strdom {

// Rejected input: a parameter or structure outside an operation's domain.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (edge lists, labelings, CNF files, family specs).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace strdom
