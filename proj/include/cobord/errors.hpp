#pragma once

#include <stdexcept>
#include <string>

namespace cobord {

/// Violation of an invariant the underlying theorems guarantee; seeing one
/// means the implementation (not the input) is wrong.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cobord
