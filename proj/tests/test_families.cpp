#include <doctest.h>

#include "hzk/constants.hpp"
#include "hzk/errors.hpp"
#include "hzk/families.hpp"
#include "hzk/hurwitz.hpp"
#include "testutil.hpp"

#include <cmath>

using namespace hzk;

TEST_CASE("digamma and polygamma classical values") {
    CHECK_CLOSE(digamma(1.0).value, -euler_gamma, 1e-14);
    CHECK_CLOSE(digamma(0.5).value, -euler_gamma - 2.0 * ln2, 1e-14);
    CHECK_CLOSE(digamma(2.0).value, 1.0 - euler_gamma, 1e-14);
    CHECK_CLOSE(polygamma(1, 1.0).value, pi * pi / 6.0, 1e-14);
    CHECK_CLOSE(polygamma(1, 0.5).value, pi * pi / 2.0, 1e-14);
    CHECK_CLOSE(polygamma(2, 1.0).value, -2.0 * 1.2020569031595942854, 1e-13);
    CHECK_THROWS_AS(digamma(0.0), domain_error);
    CHECK_THROWS_AS(digamma(-1.0), domain_error);
    CHECK_THROWS_AS(polygamma(-1, 1.0), domain_error);
    CHECK(polygamma(0, 2.3).value == digamma(2.3).value);
}

TEST_CASE("loggamma matches lgamma and the zeta bridge") {
    CHECK_CLOSE(loggamma(3.7).value, std::lgamma(3.7), 1e-15);
    CHECK(loggamma(1.0).value == 0.0);
    CHECK_THROWS_AS(loggamma(0.0), domain_error);
}

TEST_CASE("a_k special values from pinned constants") {
    // a_1(q) = log Gamma(q) - log sqrt(2 pi)
    CHECK_CLOSE(a_k(1, 0.3).value, std::lgamma(0.3) - log_sqrt_2pi, 1e-13);
    CHECK_CLOSE(a_k(2, 1.0).value, 2.0 * zeta_prime_minus1, 1e-14);
    CHECK_CLOSE(a_k(2, 0.5).value, -zeta_prime_minus1 - ln2 / 12.0, 1e-14);
    CHECK_CLOSE(a_k(2, 0.25).value, -0.25 * zeta_prime_minus1 + catalan / (2.0 * pi),
                1e-14);
    // q = 0 convention equals the value at 1 for k >= 2
    CHECK(a_k(3, 0.0).value == a_k(3, 1.0).value);
    CHECK_CLOSE(a_k(4, 1e-8).value, a_k(4, 1.0).value, 1e-6);
    CHECK_THROWS_AS(a_k(1, 0.0), domain_error);
    CHECK_THROWS_AS(a_k(0, 0.5), domain_error);
    CHECK_THROWS_AS(a_k(41, 0.5), domain_error);
    CHECK_THROWS_AS(a_k(2, -0.5), domain_error);
}

TEST_CASE("a_k_shifted reduces q > 1 through the recurrence") {
    CHECK_CLOSE(a_k_shifted(2, 2.0).value, 2.0 * zeta_prime_minus1, 1e-14);
    CHECK_CLOSE(a_k_shifted(2, 3.0).value, 2.0 * zeta_prime_minus1 + 4.0 * ln2,
                1e-14);
    CHECK_CLOSE(a_k_shifted(2, 1.5).value, -zeta_prime_minus1 - 13.0 / 12.0 * ln2,
                1e-14);
    CHECK_THROWS_AS(a_k_shifted(3, 0.4), domain_error);
}

TEST_CASE("fourier route needs a relaxed tolerance at low k and then agrees") {
    CHECK_THROWS_AS(a_k_fourier(2, 0.5), convergence_error);  // default 1e-14
    SeriesControl ctrl{1e-9, 1000000};
    CHECK_CLOSE(a_k_fourier(2, 0.5, ctrl).value, a_k(2, 0.5).value, 1e-8);
    CHECK_CLOSE(a_k_fourier(5, 0.3, ctrl).value, a_k(5, 0.3).value, 1e-9);
    CHECK_THROWS_AS(a_k_fourier(1, 0.5, ctrl), domain_error);
    CHECK_THROWS_AS(a_k_fourier(2, 1.5, ctrl), domain_error);
}

TEST_CASE("balanced negapolygamma values and guards") {
    CHECK_CLOSE(negapolygamma(1, 0.9).value, std::lgamma(0.9) - log_sqrt_2pi,
                1e-14);
    // psi^(-2)(1) = zeta'(-1) - 1/12
    CHECK_CLOSE(negapolygamma(2, 1.0).value, zeta_prime_minus1 - 1.0 / 12.0,
                1e-14);
    CHECK_CLOSE(negapolygamma(2, 0.0).value, negapolygamma(2, 1.0).value, 1e-15);
    CHECK_THROWS_AS(negapolygamma(1, 0.0), domain_error);
    CHECK_THROWS_AS(negapolygamma(0, 0.5), domain_error);
    CHECK_CLOSE(negapolygamma_alt(3, 0.6).value, negapolygamma(3, 0.6).value,
                1e-12);
    SeriesControl ctrl{1e-9, 1000000};
    CHECK_CLOSE(negapolygamma_fourier(3, 0.6, ctrl).value,
                negapolygamma(3, 0.6).value, 1e-9);
}

TEST_CASE("gosper antiderivatives: Raabe value and glaisher offset") {
    // integral of log Gamma over [0,1] is log sqrt(2 pi)
    CHECK_CLOSE(gosper_negapolygamma(2, 1.0).value, log_sqrt_2pi, 1e-9);
    CHECK_CLOSE(gosper_negapolygamma(2, 0.5).value, 0.80371984962968171015,
                1e-9);
    CHECK_CLOSE(negapolygamma_via_gosper(2, 1.0).value,
                negapolygamma(2, 1.0).value, 1e-9);
    CHECK_THROWS_AS(gosper_negapolygamma(1, 0.5), domain_error);
}

TEST_CASE("glaisher_log pinned values") {
    CHECK_CLOSE(glaisher_log(0), -log_sqrt_2pi, 1e-14);
    CHECK_CLOSE(glaisher_log(1), zeta_prime_minus1 - 1.0 / 12.0, 1e-14);
    // 1/12 - zeta'(-1), the classical log Glaisher constant, via r = 1
    CHECK_CLOSE(-glaisher_log(1), 0.24875447703378426255, 1e-14);
    CHECK_THROWS_AS(glaisher_log(-1), domain_error);
    CHECK_THROWS_AS(glaisher_log(21), domain_error);
}

TEST_CASE("clausen series values and argument reduction") {
    SeriesControl ctrl{1e-11, 1000000};
    CHECK_CLOSE(clausen(2, 0.5 * pi, ctrl).value, catalan, 1e-10);
    CHECK_CLOSE(clausen(3, pi, ctrl).value, -0.75 * 1.2020569031595942854, 1e-11);
    CHECK_CLOSE(clausen(2, 0.5 * pi + 2.0 * pi, ctrl).value,
                clausen(2, 0.5 * pi, ctrl).value, 1e-12);
    CHECK(clausen(2, 0.0, ctrl).value == 0.0);
    // odd-index series at 0 collapses to the Riemann value
    CHECK_CLOSE(clausen(3, 0.0, ctrl).value, 1.2020569031595942854, 1e-13);
    CHECK_THROWS_AS(clausen(1, 1.0, ctrl), domain_error);
}

TEST_CASE("fourier kernels at non-integer exponent match the defining series") {
    SeriesControl ctrl{1e-10, 1000000};
    const FourierKernels fk = fourier_kernels(3.5, 0.3, ctrl);
    long double c = 0, s = 0;
    for (int n = 2000; n >= 1; --n) {
        c += std::cos(2.0 * pi * n * 0.3) / std::pow(n, 3.5);
        s += std::sin(2.0 * pi * n * 0.3) / std::pow(n, 3.5);
    }
    CHECK_CLOSE(fk.c.value, static_cast<double>(c), 1e-8);
    CHECK_CLOSE(fk.s.value, static_cast<double>(s), 1e-8);
    CHECK_THROWS_AS(fourier_kernels(1.0, 0.3, ctrl), domain_error);
    CHECK_THROWS_AS(fourier_kernels(2.0, -0.1, ctrl), domain_error);
}
