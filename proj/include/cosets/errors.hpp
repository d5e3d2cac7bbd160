#pragma once

#include <stdexcept>
#include <string>

namespace cosets {

// Thrown when a mathematically asserted inequality or identity fails at
// runtime. The CLI maps this to exit code 1 so CI can tell "the math is
// violated" apart from usage errors (exit 2).
class verification_error : public std::runtime_error {
public:
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cosets
