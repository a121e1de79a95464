#pragma once

#include <stdexcept>
#include <string>

namespace hzk {

// Argument outside the range a routine accepts (pole hit, bad index, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A result too large for double, or an intermediate that cannot be carried.
struct overflow_error : std::range_error {
    using std::range_error::range_error;
};

// A series or adaptive rule ran out of budget before reaching its tolerance.
// best_estimate carries whatever partial answer was reached; err_estimate the
// bound it was known to satisfy at that point (both may be zero when the
// failing computation has no single meaningful scalar).
struct convergence_error : std::runtime_error {
    double best_estimate;
    double err_estimate;
    explicit convergence_error(const std::string& what,
                               double best = 0.0, double err = 0.0)
        : std::runtime_error(what), best_estimate(best), err_estimate(err) {}
};

}  // namespace hzk
