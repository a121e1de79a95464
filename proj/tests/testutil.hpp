#pragma once

#include <algorithm>
#include <cmath>

// mixed absolute/relative comparison used throughout the tests:
// |a - b| <= tol * (1 + max(|a|, |b|))
inline bool close(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * (1.0 + std::max(std::fabs(a), std::fabs(b)));
}

#define CHECK_CLOSE(a, b, tol)                                          \
    do {                                                                \
        const double va_ = (a), vb_ = (b);                              \
        CHECK_MESSAGE(close(va_, vb_, tol), #a " = " << va_ << " vs " #b \
                                               " = " << vb_);          \
    } while (0)
