#pragma once

#include "hzk/types.hpp"

namespace hzk {

// One Euler-Maclaurin evaluation of zeta(z, q) together with the z-derivatives
// up to the requested order. err_* are absolute error estimates; escalated
// reports that the 80-bit pass could not certify ~1e-14 mixed accuracy and the
// sum was redone in binary128.
struct ZetaEval {
    double value = 0.0;
    double dz = 0.0;
    double d2z = 0.0;
    double err_value = 0.0;
    double err_dz = 0.0;
    double err_d2z = 0.0;
    int n_direct = 0;
    int j_tail = 0;
    bool escalated = false;
};

// Core evaluator. Requires q > 0, z != 1, order in {0, 1, 2}.
// Designed accuracy: |error| <= max(err, 1e-13 |value|) for z in [-30, 30] and
// moderate q; outside that band err_estimate degrades honestly and results
// whose intermediates exceed double range raise overflow_error.
ZetaEval hurwitz_zeta_eval(double z, double q, int order);

EvalResult hurwitz_zeta(double z, double q);
EvalResult hurwitz_zeta_dz(double z, double q);     // d/dz zeta(z, q)
EvalResult hurwitz_zeta_d2z(double z, double q);    // d^2/dz^2 zeta(z, q)

// d/dq zeta(z, q) = -z zeta(z+1, q); the z = 0 limit is exactly -1.
EvalResult hurwitz_zeta_dq(double z, double q);

// Riemann specializations, q = 1.
EvalResult riemann_zeta(double z);
EvalResult riemann_zeta_dz(double z);
EvalResult riemann_zeta_d2z(double z);

// zeta(-r) = (-1)^r B_{r+1} / (r+1), exact rationals rounded once. r >= 0.
double zeta_neg_int(int r);

// zeta'(-2n) = (-1)^n (2n)! zeta(2n+1) / (2 (2pi)^{2n}), n >= 1.
double zeta_prime_neg_even(int n);

// (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1. n >= 0.
double pochhammer(double x, int n);

}  // namespace hzk
