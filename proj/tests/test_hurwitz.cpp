#include <doctest.h>

#include "hzk/bernoulli.hpp"
#include "hzk/constants.hpp"
#include "hzk/errors.hpp"
#include "hzk/hurwitz.hpp"
#include "testutil.hpp"

#include <cmath>

using namespace hzk;

// Independent convergent-region oracle: brute-force partial sum plus the
// integral-and-half correction, no Bernoulli tail at all. Truncation error
// is O(z X^{-z-1} / 12), far below 1e-15 at M = 2e5 for z >= 2.
static double slow_zeta(double z, double q) {
    const int m_terms = 200000;
    long double s = 0.0L;
    for (int n = m_terms - 1; n >= 0; --n)
        s += powl(static_cast<long double>(n) + q, -static_cast<long double>(z));
    const long double x = static_cast<long double>(m_terms) + q;
    s += powl(x, 1.0L - static_cast<long double>(z)) / (z - 1.0L);
    s += 0.5L * powl(x, -static_cast<long double>(z));
    return static_cast<double>(s);
}

// Same idea for the second z-derivative at z = 2: sum of log^2(n)/n^2 with
// the integral tail (log^2 N + 2 log N + 2)/N plus trapezoid and slope
// corrections.
static double slow_zeta_d2_at2() {
    const int m_terms = 1000000;
    long double s = 0.0L;
    for (int n = m_terms; n >= 2; --n) {
        const long double ln = logl(static_cast<long double>(n));
        s += ln * ln / (static_cast<long double>(n) * n);
    }
    const long double nn = m_terms;
    const long double ln = logl(nn);
    s += (ln * ln + 2.0L * ln + 2.0L) / nn;       // integral over [N, inf)
    s -= 0.5L * ln * ln / (nn * nn);              // minus half the N term
    s -= (2.0L * ln - 2.0L * ln * ln) / (nn * nn * nn) / 12.0L;
    return static_cast<double>(s);
}

TEST_CASE("kernel agrees with the brute-force oracle in the convergent region") {
    CHECK_CLOSE(hurwitz_zeta(2.5, 1.25).value, slow_zeta(2.5, 1.25), 1e-13);
    CHECK_CLOSE(hurwitz_zeta(2.5, 1.25).value, 0.8474519546976858627, 1e-14);
    CHECK_CLOSE(hurwitz_zeta(4.0, 0.3).value, slow_zeta(4.0, 0.3), 1e-13);
    CHECK_CLOSE(hurwitz_zeta(7.5, 2.0).value, slow_zeta(7.5, 2.0), 1e-13);
}

TEST_CASE("continuation region: frozen references and exact rational points") {
    CHECK_CLOSE(hurwitz_zeta(-2.5, 1.25).value, -0.03928809608200384347, 1e-14);
    CHECK_CLOSE(riemann_zeta(0.5).value, -1.4603545088095868129, 1e-14);
    CHECK_CLOSE(riemann_zeta(0.0).value, -0.5, 1e-15);
    // zeta(1-m, q) = -B_m(q)/m at a deep index exercises the escalated path
    CHECK_CLOSE(hurwitz_zeta(-30.0, 0.2).value,
                -bernoulli_poly(31, 0.2) / 31.0, 1e-12);
}

TEST_CASE("precision escalation engages at large negative z and stays exact") {
    // zeta(-19, 1/2) = (2^{-19} - 1) zeta(-19), zeta(-19) = 174611/6600
    const double expect = (std::pow(2.0, -19.0) - 1.0) * (174611.0 / 6600.0);
    const ZetaEval e = hurwitz_zeta_eval(-19.0, 0.5, 0);
    CHECK(e.escalated);
    CHECK_CLOSE(e.value, expect, 1e-13);
    CHECK(std::fabs(e.value - expect) <= e.err_value + 1e-14 * (1 + std::fabs(expect)));
    // convergent region needs no escalation
    CHECK_FALSE(hurwitz_zeta_eval(2.5, 1.25, 0).escalated);
}

TEST_CASE("z-derivatives against frozen high-precision values") {
    CHECK_CLOSE(hurwitz_zeta_dz(-1.0, 1.0).value, zeta_prime_minus1, 1e-14);
    CHECK_CLOSE(riemann_zeta_dz(2.0).value, -0.93754825431584375370, 1e-14);
    CHECK_CLOSE(riemann_zeta_d2z(2.0).value, 1.98928023429890102342, 1e-13);
    CHECK_CLOSE(riemann_zeta_d2z(2.0).value, slow_zeta_d2_at2(), 5e-13);
    CHECK_CLOSE(hurwitz_zeta_dz(0.0, 1.0).value, -log_sqrt_2pi, 1e-14);
    // batch evaluation returns the same derivatives as the single calls
    const ZetaEval e = hurwitz_zeta_eval(-1.5, 0.7, 2);
    CHECK_CLOSE(e.dz, hurwitz_zeta_dz(-1.5, 0.7).value, 1e-15);
    CHECK_CLOSE(e.d2z, hurwitz_zeta_d2z(-1.5, 0.7).value, 1e-15);
}

TEST_CASE("q-derivative") {
    CHECK(hurwitz_zeta_dq(0.0, 0.8).value == -1.0);  // exact limit value
    CHECK_CLOSE(hurwitz_zeta_dq(2.5, 1.3).value,
                -2.5 * hurwitz_zeta(3.5, 1.3).value, 1e-15);
}

TEST_CASE("exact negative-integer values") {
    CHECK(zeta_neg_int(0) == -0.5);
    CHECK_CLOSE(zeta_neg_int(1), -1.0 / 12.0, 1e-16);
    CHECK_CLOSE(zeta_neg_int(3), 1.0 / 120.0, 1e-16);
    CHECK(zeta_neg_int(2) == 0.0);
    CHECK_CLOSE(zeta_prime_neg_even(1), -0.03044845705839327078, 1e-13);
    CHECK_THROWS_AS(zeta_neg_int(-1), domain_error);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(3.0, 4) == 360.0);
    CHECK(pochhammer(2.5, 0) == 1.0);
    CHECK(pochhammer(-2.0, 4) == 0.0);  // hits zero factor
    CHECK_CLOSE(pochhammer(0.5, 3), 0.5 * 1.5 * 2.5, 1e-16);
}

TEST_CASE("domain and overflow guards") {
    CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), domain_error);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), domain_error);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, -1.0), domain_error);
    CHECK_THROWS_AS(hurwitz_zeta_eval(2.0, 1.0, 3), domain_error);
    CHECK_THROWS_AS(hurwitz_zeta(std::nan(""), 1.0), domain_error);
    CHECK_THROWS_AS(hurwitz_zeta(-30.0, 1e12), overflow_error);
}

TEST_CASE("error estimates are positive and honest at spot checks") {
    const EvalResult r = hurwitz_zeta(2.5, 1.25);
    CHECK(r.err_estimate > 0.0);
    CHECK(std::fabs(r.value - 0.84745195469768586272) <= r.err_estimate + 1e-15);
    const EvalResult d = hurwitz_zeta_dz(-1.0, 1.0);
    CHECK(std::fabs(d.value - zeta_prime_minus1) <= d.err_estimate + 1e-15);
}
