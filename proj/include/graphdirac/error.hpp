#pragma once

#include <stdexcept>
#include <string>

namespace graphdirac {

/// Domain error: invalid input, violated precondition, unsupported case.
/// Internal invariant failures throw std::logic_error instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace graphdirac
