#pragma once

#include <stdexcept>
#include <string>

namespace scholnet {

// Anything wrong with input data or parameters: malformed files, broken
// invariants, unsatisfiable preconditions. The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace scholnet
