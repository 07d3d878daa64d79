#pragma once

#include <cmath>

#include "cl2/errors.hpp"

namespace cl2 {

/// Relative thresholds used throughout the library.
///
/// `tau_class` decides when the quadratic forms I and V count as zero for
/// classification purposes; the test is always |I| <= tau_class * |a|^2 so
/// that it is invariant under rescaling of the element.  `tau_verify` is the
/// looser threshold used when re-multiplying a candidate root to check it
/// against the radicand.
struct Tolerances {
    double tau_class = 1e-10;
    double tau_verify = 1e-8;

    void validate() const {
        if (!(std::isfinite(tau_class) && tau_class > 0.0) ||
            !(std::isfinite(tau_verify) && tau_verify > 0.0)) {
            throw InvalidValueError("tolerances must be finite and strictly positive");
        }
    }
};

}  // namespace cl2
