#pragma once

#include <functional>

namespace hzk {

// One definite integral. tol is the absolute target and must be >= 1e-14;
// the singular_* flags route the problem to a double-exponential rule that
// never samples the flagged endpoints (integrable log/power singularities).
struct QuadratureProblem {
    std::function<double(double)> integrand;
    double lo = 0.0;
    double hi = 1.0;
    double tol = 1e-10;
    bool singular_lo = false;
    bool singular_hi = false;
};

struct QuadratureResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long evaluations = 0;
};

// Adaptive Gauss-Kronrod 15-point bisection for smooth problems; tanh-sinh
// for flagged endpoints. The evaluation budget defaults to 200000 samples and
// can be overridden with the HZK_MAX_EVALS environment variable; exhausting
// it raises convergence_error, a non-finite sample raises domain_error.
QuadratureResult integrate(const QuadratureProblem& p);

// Central difference with one Richardson extrapolation level, order 1 or 2.
// Error decays like h^4 until rounding takes over near h ~ 1e-3.
double finite_diff(const std::function<double(double)>& f, double q,
                   int order, double h);

}  // namespace hzk
