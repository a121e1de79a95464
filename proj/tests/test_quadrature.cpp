#include <doctest.h>

#include "hzk/errors.hpp"
#include "hzk/hurwitz.hpp"
#include "hzk/quadrature.hpp"
#include "testutil.hpp"

#include <cmath>
#include <cstdlib>

using namespace hzk;

static QuadratureResult run(std::function<double(double)> f, double lo,
                            double hi, double tol, bool slo = false,
                            bool shi = false) {
    QuadratureProblem p;
    p.integrand = std::move(f);
    p.lo = lo;
    p.hi = hi;
    p.tol = tol;
    p.singular_lo = slo;
    p.singular_hi = shi;
    return integrate(p);
}

TEST_CASE("smooth integrands") {
    CHECK_CLOSE(run([](double x) { return x * x * x * x; }, 0, 1, 1e-12).value,
                0.2, 1e-14);
    CHECK_CLOSE(run([](double x) { return std::sin(x); }, 0, 3.14159265358979324,
                    1e-12).value,
                2.0, 1e-13);
    CHECK_CLOSE(run([](double x) { return std::exp(-x * x); }, -6, 6, 1e-12).value,
                1.7724538509055160273, 1e-13);  // sqrt(pi)
}

TEST_CASE("endpoint singularities through the double-exponential path") {
    CHECK_CLOSE(run([](double x) { return std::log(x); }, 0, 1, 1e-12, true).value,
                -1.0, 1e-12);
    CHECK_CLOSE(run([](double x) { return 1.0 / std::sqrt(x); }, 0, 1, 1e-12,
                    true).value,
                2.0, 1e-12);
    CHECK_CLOSE(run([](double x) { return std::log(1.0 - x); }, 0, 1, 1e-12,
                    false, true).value,
                -1.0, 1e-12);
    // integrable singularities at both ends
    CHECK_CLOSE(
        run([](double x) { return std::log(x) + std::log(1.0 - x); }, 0, 1,
            1e-12, true, true)
            .value,
        -2.0, 1e-12);
}

// Cross-method oracle: composite Simpson on a fine fixed grid, entirely
// independent of the adaptive machinery.
static double simpson(const std::function<double(double)>& f, double lo,
                      double hi, int panels) {
    const double h = (hi - lo) / (2 * panels);
    long double s = f(lo) + f(hi);
    for (int i = 1; i < 2 * panels; ++i)
        s += f(lo + i * h) * ((i % 2) ? 4.0 : 2.0);
    return static_cast<double>(s * h / 3.0L);
}

TEST_CASE("adaptive result matches composite Simpson on a kernel integrand") {
    auto f = [](double q) { return q * hurwitz_zeta(-1.5, q).value; };
    const double adaptive = run(f, 0.5, 2.0, 1e-12).value;
    CHECK_CLOSE(adaptive, simpson(f, 0.5, 2.0, 10000), 1e-10);
    CHECK_CLOSE(adaptive, -0.6784687031573637, 1e-12);  // frozen reference
}

TEST_CASE("error estimate bounds the actual error on known values") {
    const QuadratureResult r = run([](double x) { return std::log(x); }, 0, 1,
                                   1e-11, true);
    CHECK(std::fabs(r.value + 1.0) <= std::max(r.err_estimate, 1e-13));
    CHECK(r.evaluations > 0);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(run([](double) { return 1.0; }, 0, 1, 1e-15), domain_error);
    CHECK_THROWS_AS(run([](double) { return 1.0; }, 1, 0, 1e-10), domain_error);
    CHECK_THROWS_AS(run([](double) { return 1.0; }, 0, 0, 1e-10), domain_error);
    QuadratureProblem p;
    p.lo = 0;
    p.hi = 1;
    CHECK_THROWS_AS(integrate(p), domain_error);  // missing integrand
}

TEST_CASE("non-finite samples are rejected") {
    CHECK_THROWS_AS(run([](double) { return std::nan(""); }, 0, 1, 1e-10),
                    domain_error);
}

TEST_CASE("evaluation budget is enforced and env-overridable") {
    // nowhere near convergent at this tolerance within 60 evaluations
    setenv("HZK_MAX_EVALS", "60", 1);
    CHECK_THROWS_AS(
        run([](double x) { return std::sin(200.0 * x) / (1e-4 + x * x); }, 0, 4,
            1e-12),
        convergence_error);
    unsetenv("HZK_MAX_EVALS");
    const QuadratureResult ok = run(
        [](double x) { return std::sin(200.0 * x) / (1e-4 + x * x); }, 0, 4,
        1e-9);
    CHECK(ok.evaluations > 60);
}

TEST_CASE("convergence_error carries the best estimate so far") {
    setenv("HZK_MAX_EVALS", "200", 1);
    try {
        run([](double x) { return std::cos(50.0 * x); }, 0, 10, 1e-13);
        CHECK(false);
    } catch (const convergence_error& e) {
        CHECK(std::isfinite(e.best_estimate));
        CHECK(e.err_estimate >= 0.0);
    }
    unsetenv("HZK_MAX_EVALS");
}

TEST_CASE("finite differences with one Richardson level") {
    CHECK_CLOSE(finite_diff([](double x) { return std::sin(x); }, 0.3, 1, 1e-3),
                std::cos(0.3), 1e-10);
    CHECK_CLOSE(finite_diff([](double x) { return std::sin(x); }, 0.3, 2, 1e-3),
                -std::sin(0.3), 1e-8);
    CHECK_CLOSE(finite_diff([](double x) { return x * x * x; }, 2.0, 1, 1e-4),
                12.0, 1e-10);
    CHECK_THROWS_AS(finite_diff([](double x) { return x; }, 0.0, 3, 1e-3),
                    domain_error);
    CHECK_THROWS_AS(finite_diff([](double x) { return x; }, 0.0, 1, 0.0),
                    domain_error);
}
