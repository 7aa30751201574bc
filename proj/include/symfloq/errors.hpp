#pragma once

#include <stdexcept>
#include <string>

namespace symfloq {

// Raised when a computed object breaks an exact structural property
// (parity leakage, negative two-qubit eigenvalues, non-normalized state).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact-period averaging requested on a series without a detected period.
struct period_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace symfloq
