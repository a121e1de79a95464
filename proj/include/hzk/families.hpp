#pragma once

#include "hzk/types.hpp"

namespace hzk {

// psi(q), q > 0: argument lifted above 10 by the recurrence, then the
// asymptotic Bernoulli series.
EvalResult digamma(double q);

// psi^(m)(q) = (-1)^{m+1} m! zeta(m+1, q) for m >= 1; m = 0 is digamma.
EvalResult polygamma(int m, double q);

// log Gamma(q), q > 0. Equals d/dz zeta(z,q)|_{z=0} + log sqrt(2 pi).
EvalResult loggamma(double q);

// a_k(q) = k * d/dz zeta(z, q)|_{z = 1-k}, the derivative family the moment
// integrals reduce to. k in [1, 40]. q = 0 is accepted for k >= 2 and means
// the continuous limit, which equals the value at q = 1; k = 1 diverges there.
EvalResult a_k(int k, double q);

// Same function through its conditionally convergent Fourier side: Bernoulli
// polynomial front plus log-weighted sine/cosine series. k in [2, 40],
// q in [0, 1]. Exists as an independent cross-check of a_k; note the k = 2, 3
// series need a relaxed ctrl.tol (~1e-9) to stop within the term cap.
EvalResult a_k_fourier(int k, double q, const SeriesControl& ctrl = {});

// a_k for q > 1 via the shift a_k(q+1) = a_k(q) + k q^{k-1} log q, reducing
// into (0, 1] and then calling a_k. Exercises the recurrence end to end.
EvalResult a_k_shifted(int k, double q);

// Balanced negapolygamma psi^(-k)(q) = [a_k(q) - H_{k-1} B_k(q)] / k!,
// the k-th antiderivative of log Gamma picked zero-mean on (0, 1).
// k in [1, 40]; q = 0 allowed for k >= 2 (limit value).
EvalResult negapolygamma(int k, double q);

// Same values from the rotated Fourier series (independent route). k = 1
// converges too slowly for tight tolerances; see a_k_fourier's note.
EvalResult negapolygamma_fourier(int k, double q, const SeriesControl& ctrl = {});

// Same values arranged as [zeta'(1-k, q) + (psi(k) + gamma) zeta(1-k, q)]
// / (k-1)!; evaluates psi(k) numerically, so it exercises different code.
EvalResult negapolygamma_alt(int k, double q);

// Iterated antiderivative of log Gamma normalized to vanish at q = 0:
// 1/(k-2)! * integral_0^q (q-t)^{k-2} log Gamma(t) dt, k >= 2, by quadrature.
// Differs from negapolygamma(k, q) by a polynomial with glaisher_log
// coefficients; negapolygamma_via_gosper adds that polynomial back.
EvalResult gosper_negapolygamma(int k, double q, double tol = 1e-10);

EvalResult negapolygamma_via_gosper(int k, double q, double tol = 1e-10);

// zeta'(-r) + H_r zeta(-r) for r in [0, 20]; the constant adjusting the
// quadrature antiderivative to the balanced one (equals -log A at r = 1 up
// to the 1/12 shift; r = 0 gives -log sqrt(2 pi)).
double glaisher_log(int r);

// Cl_n(x): sum sin(k x)/k^n for even n, sum cos(k x)/k^n for odd n. n >= 2.
EvalResult clausen(int n, double x, const SeriesControl& ctrl = {});

// C(z, q) = sum cos(2 pi n q)/n^z and S(z, q) = sum sin(2 pi n q)/n^z for
// real z > 1, q in [0, 1]. At integer z these are Bernoulli polynomials or
// Clausen values; the verification suite pins those identifications.
struct FourierKernels {
    EvalResult c;
    EvalResult s;
};
FourierKernels fourier_kernels(double z, double q, const SeriesControl& ctrl = {});

}  // namespace hzk
