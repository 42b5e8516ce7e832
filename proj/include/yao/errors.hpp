#pragma once

#include <stdexcept>
#include <string>

namespace yao {

// Precondition or resource-guard violation (bad k, exhaustive search too large, ...).
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A promised bound could not be established or was refuted.
struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace yao
