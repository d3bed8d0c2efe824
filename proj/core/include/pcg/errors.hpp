#pragma once

#include <stdexcept>
#include <string>

namespace pcg {

// Violation of an operation's documented domain (bad set, foreign vertex,
// non-cyclically-minimal input, ...). The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text: graph files, words, subgroup JSON. Messages carry
// line numbers where the source has lines.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pcg
