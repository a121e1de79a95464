#pragma once

namespace hzk {

// B_k, exact rational rounded once to double. k in [0, 60]; B_1 = -1/2.
double bernoulli_number(int k);

// B_m(x) by Horner over cached coefficients C(m,j) B_j. m in [0, 60].
double bernoulli_poly(int m, double x);

// H_n = sum_{i<=n} 1/i, H_0 = 0.
double harmonic(int n);

// C(n, k) built exactly in integers, rounded once. Zero outside 0 <= k <= n.
double binomial(int n, int k);

// n! for n in [0, 170]; larger overflows double.
double factorial(int n);

// sum_{r=0}^{p} (-1)^r C(p+1, r+1) q^{p-r} B_{r+1}(a + b q) / b^{r+1}.
// Telescopes to q^{p+1} + (-1)^p B_{p+1}(a) / b^{p+1}; the reduction the
// Bernoulli-moment formulas rest on, asserted by the verification suite.
double bernoulli_alternating_sum(int p, double a, double b, double q);

}  // namespace hzk
