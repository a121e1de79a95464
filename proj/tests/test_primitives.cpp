#include <doctest.h>

#include "hzk/bernoulli.hpp"
#include "hzk/constants.hpp"
#include "hzk/errors.hpp"
#include "hzk/families.hpp"
#include "hzk/hurwitz.hpp"
#include "hzk/primitives.hpp"
#include "hzk/quadrature.hpp"
#include "testutil.hpp"

#include <cmath>

using namespace hzk;

namespace {
constexpr double zeta3 = 1.2020569031595942854;
constexpr double zeta5 = 1.0369277551433699263;

double quad(std::function<double(double)> f, double lo, double hi, double tol,
            bool slo = false, bool shi = false) {
    QuadratureProblem p;
    p.integrand = std::move(f);
    p.lo = lo;
    p.hi = hi;
    p.tol = tol;
    p.singular_lo = slo;
    p.singular_hi = shi;
    return integrate(p).value;
}
}  // namespace

TEST_CASE("half-interval log-sine moments hit the printed closed forms") {
    CHECK_CLOSE(def_logsine_moment_half(1).value,
                -ln2 / 8.0 + 7.0 * zeta3 / (16.0 * pi * pi), 1e-14);
    CHECK_CLOSE(def_logsine_moment_half(2).value,
                -ln2 / 24.0 + 3.0 * zeta3 / (16.0 * pi * pi), 1e-14);
    CHECK_CLOSE(def_logsine_moment_half(3).value,
                -ln2 / 64.0 + 9.0 * zeta3 / (64.0 * pi * pi) -
                    93.0 * zeta5 / (128.0 * pi * pi * pi * pi),
                1e-14);
    CHECK_CLOSE(def_logsine_moment_half(0).value, -0.5 * ln2, 1e-14);
    CHECK_THROWS_AS(def_logsine_moment_half(-1), domain_error);
}

TEST_CASE("full-interval log-sine moments: symmetry forces n = 0, 1 values") {
    CHECK_CLOSE(def_logsine_moment(0).value, -ln2, 1e-14);
    // reflection q -> 1-q halves the first moment
    CHECK_CLOSE(def_logsine_moment(1).value, -0.5 * ln2, 1e-14);
    CHECK_CLOSE(def_logsine_moment(2).value,
                quad([](double q) { return q * q * std::log(std::sin(pi * q)); },
                     0.0, 1.0, 1e-12, true, true),
                1e-10);
}

TEST_CASE("log-gamma moment antiderivative reproduces shifted-integrand values") {
    // F(q) - F(0) for integrand log Gamma(1 + t), i.e. n = 0, a = 1, b = 1
    PrimitiveParams p;
    p.n = 0;
    p.a = 1.0;
    p.b = 1.0;
    auto F = [&p](double q) {
        PrimitiveParams pp = p;
        pp.q = q;
        return prim_loggamma_moment(pp).value;
    };
    const double zp = hurwitz_zeta_dz(-1.0, 1.0).value;
    const double at_half =
        -3.0 / 8.0 - 13.0 / 24.0 * ln2 + 0.5 * log_sqrt_2pi - 1.5 * zp;
    const double at_quarter = -5.0 / 32.0 - 0.5 * ln2 + 0.25 * log_sqrt_2pi -
                              9.0 / 8.0 * zp + catalan / (4.0 * pi);
    CHECK_CLOSE(F(0.5) - F(0.0), at_half, 1e-12);
    CHECK_CLOSE(F(0.25) - F(0.0), at_quarter, 1e-12);
}

TEST_CASE("zeta moment antiderivative differentiates back to its integrand") {
    PrimitiveParams p;
    p.n = 2;
    p.z = -1.7;
    p.a = 0.6;
    p.b = 0.9;
    auto F = [&p](double q) {
        PrimitiveParams pp = p;
        pp.q = q;
        return prim_zeta_moment(pp).value;
    };
    const double q0 = 0.8;
    const double expect =
        q0 * q0 * hurwitz_zeta(p.z, p.a + p.b * q0).value;
    CHECK_CLOSE(finite_diff(F, q0, 1, 1e-3), expect, 1e-8);
}

TEST_CASE("pochhammer pole guard rejects z near positive integers") {
    PrimitiveParams p;
    p.n = 1;
    p.z = 2.0000000001;  // within 1e-6 of 2, inside [1, n + 2]
    p.a = 0.5;
    p.b = 1.0;
    p.q = 0.5;
    CHECK_THROWS_AS(prim_zeta_moment(p), domain_error);
    p.z = 2.1;  // clear of the guard band
    CHECK(std::isfinite(prim_zeta_moment(p).value));
    p.z = 7.0;  // integer but above n + 2, the denominators never vanish
    CHECK(std::isfinite(prim_zeta_moment(p).value));
}

TEST_CASE("parameter validation across the table") {
    PrimitiveParams p;
    p.n = 21;
    CHECK_THROWS_AS(prim_zeta_moment(p), domain_error);
    p.n = 2;
    p.b = 0.0;
    CHECK_THROWS_AS(prim_zeta_moment(p), domain_error);
    p.b = 1.0;
    p.m = 31;
    CHECK_THROWS_AS(prim_zeta_bernoulli_weight(p), domain_error);
    CHECK_THROWS_AS(prim_zeta_selfproduct_odd(2, -0.5, 1.0), domain_error);
    CHECK_THROWS_AS(prim_zeta_selfproduct_odd(21, -0.5, 1.0), domain_error);
    CHECK_THROWS_AS(prim_logsine_moment(2, 1.5), domain_error);
    CHECK_THROWS_AS(def_logsine_moment(-1), domain_error);
    CHECK_THROWS_AS(def_negapoly_product(0, 2), domain_error);
    CHECK_THROWS_AS(def_zeta_product(0.5, -1.0), domain_error);  // needs z <= 0
    CHECK_THROWS_AS(def_zeta_moment(1, -0.5, -1.0, 0.5), domain_error);
}

TEST_CASE("exp-weighted series antiderivatives") {
    // e^q B_m: exact finite sum; spot check by differentiation
    PrimitiveParams p;
    p.m = 3;
    p.a = 0.2;
    p.b = 1.1;
    auto F = [&p](double q) {
        PrimitiveParams pp = p;
        pp.q = q;
        return prim_exp_bernoulli(pp).value;
    };
    CHECK_CLOSE(finite_diff(F, 0.7, 1, 1e-3),
                std::exp(0.7) * bernoulli_poly(3, 0.2 + 1.1 * 0.7), 1e-8);

    // e^q zeta: series form, validated for z < 1
    PrimitiveParams pz;
    pz.z = -0.8;
    pz.a = 0.9;
    pz.b = 0.7;
    SeriesControl ctrl{1e-13, 1000000};
    auto G = [&pz, &ctrl](double q) {
        PrimitiveParams pp = pz;
        pp.q = q;
        return prim_exp_zeta(pp, ctrl).value;
    };
    CHECK_CLOSE(finite_diff(G, 0.6, 1, 1e-3),
                std::exp(0.6) * hurwitz_zeta(-0.8, 0.9 + 0.7 * 0.6).value, 1e-8);
    pz.z = 3.0000000002;  // guarded: integer z makes the ladder denominators vanish
    CHECK_THROWS_AS(prim_exp_zeta(pz, ctrl), domain_error);
}

TEST_CASE("log-sine antiderivative endpoints take the continuous limits") {
    CHECK(std::isfinite(prim_logsine_moment(2, 0.0).value));
    CHECK(std::isfinite(prim_logsine_moment(2, 1.0).value));
    // F(1) - F(0) equals the full definite moment
    CHECK_CLOSE(prim_logsine_moment(2, 1.0).value -
                    prim_logsine_moment(2, 0.0).value,
                def_logsine_moment(2).value, 1e-12);
}

TEST_CASE("exp log-sine and exp cotangent antiderivatives differentiate back") {
    SeriesControl ctrl{1e-13, 1000000};
    auto F = [&ctrl](double q) { return prim_exp_logsine(q, ctrl).value; };
    CHECK_CLOSE(finite_diff(F, 0.35, 1, 1e-3),
                std::exp(0.35) * std::log(std::sin(pi * 0.35)), 1e-8);
    auto G = [&ctrl](double q) { return prim_exp_cot(q, ctrl).value; };
    CHECK_CLOSE(finite_diff(G, 0.35, 1, 1e-3),
                std::exp(0.35) / std::tan(pi * 0.35), 1e-8);
}

TEST_CASE("negapolygamma product table: closed form, parity zeros, square case") {
    // k = k2 = 1 is the squared log Gamma integral
    CHECK_CLOSE(def_negapoly_product(1, 1).value,
                def_loggamma_sq().value - 2.0 * log_sqrt_2pi * log_sqrt_2pi +
                    log_sqrt_2pi * log_sqrt_2pi,
                1e-12);
    for (int k = 1; k <= 5; ++k)
        for (int k2 = 1; k2 <= 5; ++k2)
            if ((k - k2) % 2 != 0) CHECK(def_negapoly_product(k, k2).value == 0.0);
    // numerically confirm one even-gap value
    const double i = quad(
        [](double q) {
            return negapolygamma(2, q).value * negapolygamma(4, q).value;
        },
        0.0, 1.0, 1e-12);
    CHECK_CLOSE(def_negapoly_product(2, 4).value, i, 1e-10);
}

TEST_CASE("squared log gamma integral against the frozen reference") {
    CHECK_CLOSE(def_loggamma_sq().value, 1.8663170837935621, 1e-12);
}

TEST_CASE("zeta product closed form: rational point and symmetry") {
    CHECK_CLOSE(def_zeta_product(0.0, 0.0).value, 1.0 / 12.0, 1e-14);
    CHECK_CLOSE(def_zeta_product(-1.5, -0.5).value,
                def_zeta_product(-0.5, -1.5).value, 1e-15);
}

TEST_CASE("self-product forms stay within 1e-12 of each other") {
    for (int n : {1, 3, 5}) {
        const double a = prim_zeta_selfproduct_odd(n, -1.3, 0.8).value;
        const double b = prim_zeta_selfproduct_odd_centered(n, -1.3, 0.8).value;
        CHECK_CLOSE(a, b, 1e-12);
    }
}
