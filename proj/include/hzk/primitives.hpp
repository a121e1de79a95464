#pragma once

#include "hzk/types.hpp"

namespace hzk {

// Shared parameter block for the antiderivative (prim_*) evaluators.
// n, m are moment / weight orders; a, b shift and scale the transcendental
// argument (a + b q); c, d do the same for a Bernoulli weight when present;
// q is the evaluation point of the antiderivative. Each evaluator checks the
// subset it uses: n <= 20, m <= 30, b != 0, transcendental arguments positive,
// and z at least 1e-6 away from any integer that would zero a Pochhammer
// denominator.
struct PrimitiveParams {
    int n = 0;
    int m = 1;
    double z = 0.0;
    double a = 0.0;
    double b = 1.0;
    double c = 0.0;
    double d = 1.0;
    double q = 1.0;
};

// ---- antiderivatives: d/dq of each returns the named integrand ----------

// integrand q^n zeta(z, a + b q):
//   n! sum_{j=0}^{n} (-1)^j q^{n-j} zeta(z-j-1, a+bq)
//                    / (b^{j+1} (1-z)_{j+1} (n-j)!)
ClosedFormValue prim_zeta_moment(const PrimitiveParams& p);

// integrand B_m(c + d q) zeta(z, a + b q); same ladder with the Bernoulli
// weight differentiated instead of the power.
ClosedFormValue prim_zeta_bernoulli_weight(const PrimitiveParams& p);

// integrand q^n B_m(a + b q), finite Bernoulli ladder (any real q).
ClosedFormValue prim_bernoulli_moment(const PrimitiveParams& p);

// integrand zeta(z - n, q) zeta(z, q) for odd n >= 1:
//   (1/2) sum_{k=1}^{n} (z-n)_{k-1} / (1-z)_k zeta(z-k, q) zeta(z-n+k-1, q).
ClosedFormValue prim_zeta_selfproduct_odd(int n, double z, double q);

// Same antiderivative regrouped around the central square term
// (r = (n+1)/2); must agree with the plain form to rounding.
ClosedFormValue prim_zeta_selfproduct_odd_centered(int n, double z, double q);

// integrand e^q zeta(z, a + b q), infinite ladder truncated when two
// consecutive terms fall below ctrl.tol (default cap factorial_series_cap).
// The expansion is exercised by the suite for z < 1 only; z > 1 is accepted
// but unvalidated.
ClosedFormValue prim_exp_zeta(const PrimitiveParams& p, const SeriesControl& ctrl = {});

// integrand e^q B_m(a + b q), finite ladder:
//   m! e^q (-1)^m sum_{j=0}^{m} (-1)^j b^{m-j} B_j(a+bq) / j!
ClosedFormValue prim_exp_bernoulli(const PrimitiveParams& p);

// integrand q^n psi^(m)(a + b q), m >= 1. Orders walk down through digamma
// into the balanced negapolygammas as j grows.
ClosedFormValue prim_polygamma_moment(const PrimitiveParams& p);

// integrand q^n psi(a + b q).
ClosedFormValue prim_digamma_moment(const PrimitiveParams& p);

// integrand q^n psi^(-m)(a + b q), m >= 1 (balanced negapolygamma).
ClosedFormValue prim_negapolygamma_moment(const PrimitiveParams& p);

// integrand q^n a_m(a + b q); equals
// m! prim_negapolygamma_moment + H_{m-1} prim_bernoulli_moment term-by-term.
ClosedFormValue prim_ak_moment(const PrimitiveParams& p);

// integrand q^n log Gamma(a + b q):
//   log sqrt(2 pi) q^{n+1}/(n+1)
//   + n! sum_{j=0}^{n} (-1)^j q^{n-j} psi^(-2-j)(a+bq) / (b^{j+1} (n-j)!)
ClosedFormValue prim_loggamma_moment(const PrimitiveParams& p);

// integrand q^n log sin(pi q) on [0, 1]; endpoint values are the continuous
// limits (the a_k(0) convention makes them finite).
ClosedFormValue prim_logsine_moment(int n, double q);

// integrand e^q log sin(pi q), q in (0, 1):  -e^q [log 2 + S(q)] with
// S(q) = sum_j ((-1)^j a_{j+2}(q) - a_{j+2}(1-q)) / (j+2)!.
ClosedFormValue prim_exp_logsine(double q, const SeriesControl& ctrl = {});

// integrand e^q cot(pi q), q in (0, 1):
//   (e^q / pi) [log sin(pi q) + log 2 + S(q)].
ClosedFormValue prim_exp_cot(double q, const SeriesControl& ctrl = {});

// ---- definite integrals over [0, 1] unless stated -----------------------

// integral_0^1 q^n zeta(z, a + b q) dq, a > 0, a + b > 0.
ClosedFormValue def_zeta_moment(int n, double z, double a, double b);

// integral_0^1 q^n zeta(z - n - 1 < 0 case, q) dq with a = 0, b = 1; the
// boundary evaluations cancel and only Riemann values remain (0 for n = 0).
ClosedFormValue def_zeta_moment_unit(int n, double z);

// integral_0^1 q^n log sin(pi q) dq:
//   -log 2/(n+1) + n! sum_{k=1}^{floor(n/2)} (-1)^k zeta(2k+1)
//                       / ((2 pi)^{2k} (n+1-2k)!)
ClosedFormValue def_logsine_moment(int n);

// integral_0^{1/2} q^n log sin(pi q) dq; picks up zeta'(-n-1) for odd n.
ClosedFormValue def_logsine_moment_half(int n);

// integral_0^1 psi^(-k)(q) psi^(-k2)(q) dq. Zero exactly for odd k - k2
// (the parity factor cos((k-k2) pi/2) is taken exactly); otherwise a
// zeta / zeta' / zeta'' combination at k + k2.
ClosedFormValue def_negapoly_product(int k, int k2);

// integral_0^1 zeta(z, q) zeta(z2, q) dq for z, z2 <= 0:
//   2 Gamma(1-z) Gamma(1-z2) (2 pi)^{z+z2-2} zeta(2-z-z2) cos(pi (z-z2)/2).
ClosedFormValue def_zeta_product(double z, double z2);

// integral_0^1 (log Gamma(q))^2 dq, assembled from gamma, log sqrt(2 pi),
// zeta'(2) and zeta''(2).
ClosedFormValue def_loggamma_sq();

}  // namespace hzk
