#pragma once

#include <stdexcept>
#include <string>

namespace antipower {

// Raised when an operation would materialize more letters than the
// configured cap allows. Mapped to its own process exit code by the CLI.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed input text (morphism DSL, cache files).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace antipower
