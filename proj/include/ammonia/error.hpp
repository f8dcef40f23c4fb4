#pragma once

#include <stdexcept>
#include <string>

namespace ammonia {

/// Bad user input: malformed files, out-of-range arguments, unit mismatches.
/// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The LP solver could not finish (pivot budget exhausted).
/// The CLI maps this to exit code 3.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message)
{
    if (!condition) throw InputError(message);
}

} // namespace detail
} // namespace ammonia
