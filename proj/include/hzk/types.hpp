#pragma once

namespace hzk {

// Value plus an a-posteriori absolute error estimate. The estimate is a
// best-effort bound on rounding plus truncation, not a certified interval.
struct EvalResult {
    double value = 0.0;
    double err_estimate = 0.0;
};

// A closed-form evaluation that consumed a finite number of additive terms.
struct ClosedFormValue {
    double value = 0.0;
    int terms_used = 0;
    double err_estimate = 0.0;
};

// Truncation control for series evaluation. The default cap suits Fourier-type
// sums with power-law decay; factorially convergent expansions use
// factorial_series_cap instead.
struct SeriesControl {
    double tol = 1e-14;
    long max_terms = 1000000;
};

inline constexpr int factorial_series_cap = 200;

}  // namespace hzk
