#pragma once

#include <stdexcept>
#include <string>

namespace ardvae {

// Invalid user input: bad config, bad file contents, precondition violations
// on public entry points. Maps to exit code 2 at the CLI boundary.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Anything that goes wrong after inputs were accepted (I/O mid-run,
// non-finite numerics). Maps to exit code 1 at the CLI boundary.
class RuntimeError : public std::runtime_error {
public:
    explicit RuntimeError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ardvae
