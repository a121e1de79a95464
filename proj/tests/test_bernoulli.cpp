#include <doctest.h>

#include "hzk/bernoulli.hpp"
#include "hzk/errors.hpp"
#include "testutil.hpp"

#include <vector>

using namespace hzk;

TEST_CASE("bernoulli numbers match exact rationals") {
    CHECK(bernoulli_number(0) == 1.0);
    CHECK(bernoulli_number(1) == -0.5);
    CHECK_CLOSE(bernoulli_number(2), 1.0 / 6.0, 1e-16);
    CHECK(bernoulli_number(3) == 0.0);
    CHECK_CLOSE(bernoulli_number(4), -1.0 / 30.0, 1e-16);
    CHECK_CLOSE(bernoulli_number(12), -691.0 / 2730.0, 1e-16);
    CHECK_CLOSE(bernoulli_number(20), -174611.0 / 330.0, 1e-16);
    for (int k = 3; k <= 59; k += 2) CHECK(bernoulli_number(k) == 0.0);
    CHECK_THROWS_AS(bernoulli_number(-1), domain_error);
    CHECK_THROWS_AS(bernoulli_number(61), domain_error);
}

// Independent oracle: solve t e^{qt} = (e^t - 1) sum c_m t^m for the c_m by
// forward substitution; then B_m(q) = m! c_m. Exercises none of the library's
// recurrence or Horner code.
static double bernoulli_poly_oracle(int m, double q) {
    std::vector<long double> c(m + 1, 0.0L);
    std::vector<long double> inv_fact(m + 2, 1.0L);
    for (int i = 1; i <= m + 1; ++i) inv_fact[i] = inv_fact[i - 1] / i;
    long double qpow = 1.0L;  // q^{s-1} / (s-1)! accumulated below
    for (int s = 1; s <= m + 1; ++s) {
        long double rhs = qpow * inv_fact[s - 1];
        for (int r = 2; r <= s; ++r) rhs -= c[s - r] * inv_fact[r];
        c[s - 1] = rhs;  // coefficient equation at t^s, divided by 1/1!
        qpow *= q;
    }
    long double fact = 1.0L;
    for (int i = 2; i <= m; ++i) fact *= i;
    return static_cast<double>(fact * c[m]);
}

TEST_CASE("bernoulli polynomials match the generating function oracle") {
    for (int m = 0; m <= 8; ++m)
        for (double q : {0.0, 0.3, 0.5, 1.0, 1.7, -0.4})
            CHECK_CLOSE(bernoulli_poly(m, q), bernoulli_poly_oracle(m, q), 1e-14);
    CHECK_CLOSE(bernoulli_poly(5, 1.3), 0.01768, 1e-15);  // exact rational value
    CHECK(bernoulli_poly(0, 2.5) == 1.0);
    CHECK_THROWS_AS(bernoulli_poly(-1, 0.5), domain_error);
}

TEST_CASE("harmonic, binomial, factorial") {
    CHECK(harmonic(0) == 0.0);
    CHECK_CLOSE(harmonic(5), 137.0 / 60.0, 1e-16);
    CHECK_CLOSE(harmonic(40), 4.278543038936376, 1e-13);
    CHECK(binomial(52, 5) == 2598960.0);
    CHECK(binomial(10, 0) == 1.0);
    CHECK(binomial(10, 10) == 1.0);
    CHECK(binomial(60, 30) == doctest::Approx(1.18264581564861424e17).epsilon(1e-12));
    CHECK(factorial(0) == 1.0);
    CHECK(factorial(5) == 120.0);
    CHECK(factorial(170) == doctest::Approx(7.257415615307994e306).epsilon(1e-12));
    CHECK_THROWS_AS(factorial(171), domain_error);
    CHECK_THROWS_AS(factorial(-1), domain_error);
    CHECK_THROWS_AS(harmonic(-1), domain_error);
}

TEST_CASE("alternating binomial Bernoulli sum collapses") {
    // p = 0 collapses to q + B_1(a)/b = q + (a - 1/2)/b
    CHECK_CLOSE(bernoulli_alternating_sum(0, 0.7, 2.0, 0.4),
                0.4 + (0.7 - 0.5) / 2.0, 1e-14);
    // p = 2: q^3 + B_3(a)/b^3
    const double a = 1.2, b = 0.8, q = 0.9;
    const double b3 = bernoulli_poly(3, a);
    CHECK_CLOSE(bernoulli_alternating_sum(2, a, b, q),
                q * q * q + b3 / (b * b * b), 1e-14);
    CHECK_THROWS_AS(bernoulli_alternating_sum(2, a, 0.0, q), domain_error);
}
