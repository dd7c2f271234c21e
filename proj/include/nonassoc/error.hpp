#pragma once

#include <stdexcept>
#include <string>

namespace nonassoc {

/// Domain-level failure (algebra mismatch, missing involution, degree cap,
/// unassigned generator, ...). The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nonassoc
