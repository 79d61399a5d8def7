#pragma once

#include <stdexcept>
#include <string>

namespace ddrc {

// Bad configuration input: malformed JSON, missing files, invalid parameters.
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Bad or insufficient recorded data: CSV parse failures, dimension mismatches,
// persistency-of-excitation failures. The CLI maps this to exit code 3.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ddrc
