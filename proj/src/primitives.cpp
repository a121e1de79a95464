#include "hzk/primitives.hpp"

#include "hzk/bernoulli.hpp"
#include "hzk/constants.hpp"
#include "hzk/errors.hpp"
#include "hzk/families.hpp"
#include "hzk/hurwitz.hpp"

#include <cmath>
#include <string>

namespace hzk {
namespace {

// z must keep 1e-6 clear of every integer in [1, top]: those are the zeros of
// the (1-z)_{j+1} denominators and the pole positions of the shifted zetas.
void require_z_clear(double z, int top, const char* who) {
    const double r = std::round(z);
    if (r >= 1.0 && r <= top && std::fabs(z - r) < 1e-6)
        throw domain_error(std::string(who) +
                           ": z within 1e-6 of a Pochhammer zero or zeta pole");
}

void require_moment_order(int n, const char* who) {
    if (n < 0 || n > 20)
        throw domain_error(std::string(who) + ": moment order n must be in [0, 20]");
}

void require_weight_order(int m, const char* who) {
    if (m < 0 || m > 30)
        throw domain_error(std::string(who) + ": weight order m must be in [0, 30]");
}

void require_scale(double b, const char* who) {
    if (b == 0.0 || !std::isfinite(b))
        throw domain_error(std::string(who) + ": b must be finite and nonzero");
}

void require_positive_arg(double x, const char* who) {
    if (!(x > 0.0))
        throw domain_error(std::string(who) +
                           ": transcendental argument a + b q must be positive");
}

// psi of any order: >= 1 polygamma, 0 digamma, < 0 the balanced negapolygamma.
EvalResult psi_any(int order, double x) {
    if (order >= 1) return polygamma(order, x);
    if (order == 0) return digamma(x);
    return negapolygamma(-order, x);
}

struct Accum {
    long double value = 0;
    double err = 0;
    int terms = 0;
    void add(double term, double term_err) {
        value += term;
        err += term_err + 1e-16 * std::fabs(term);
        ++terms;
    }
    ClosedFormValue done() const {
        return {static_cast<double>(value), terms, err};
    }
};

// sum_j ((-1)^j a_{j+2}(q) - a_{j+2}(1-q)) / (j+2)!   (log-sine series core;
// terms decay like (2 pi)^{-j}, truncated on two consecutive small terms)
struct SrLog {
    double value = 0.0;
    double err = 0.0;
    int terms = 0;
};

SrLog srlog(double q, const SeriesControl& ctrl) {
    SrLog out;
    long double acc = 0;
    int small_run = 0;
    for (int j = 0; j <= factorial_series_cap; ++j) {
        const int k = j + 2;
        if (k > 40) break;  // a_k index cap; terms are ~1e-31 by then
        const auto t1 = a_k(k, q);
        const auto t2 = a_k(k, 1.0 - q);
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        const double term = (sign * t1.value - t2.value) / factorial(k);
        acc += term;
        out.err += (t1.err_estimate + t2.err_estimate) / factorial(k) +
                   1e-16 * std::fabs(term);
        ++out.terms;
        small_run = (std::fabs(term) < ctrl.tol) ? small_run + 1 : 0;
        if (small_run >= 2) break;
    }
    out.value = static_cast<double>(acc);
    return out;
}

}  // namespace

ClosedFormValue prim_zeta_moment(const PrimitiveParams& p) {
    require_moment_order(p.n, "prim_zeta_moment");
    require_scale(p.b, "prim_zeta_moment");
    require_z_clear(p.z, p.n + 2, "prim_zeta_moment");
    const double x = p.a + p.b * p.q;
    require_positive_arg(x, "prim_zeta_moment");
    Accum acc;
    double sign = 1.0;
    for (int j = 0; j <= p.n; ++j) {
        const auto zr = hurwitz_zeta(p.z - j - 1, x);
        const double coef = factorial(p.n) * sign * std::pow(p.q, p.n - j) /
                            (std::pow(p.b, j + 1) * pochhammer(1.0 - p.z, j + 1) *
                             factorial(p.n - j));
        acc.add(coef * zr.value, std::fabs(coef) * zr.err_estimate);
        sign = -sign;
    }
    return acc.done();
}

ClosedFormValue prim_zeta_bernoulli_weight(const PrimitiveParams& p) {
    require_weight_order(p.m, "prim_zeta_bernoulli_weight");
    require_scale(p.b, "prim_zeta_bernoulli_weight");
    require_z_clear(p.z, p.m + 2, "prim_zeta_bernoulli_weight");
    const double x = p.a + p.b * p.q;
    require_positive_arg(x, "prim_zeta_bernoulli_weight");
    const double w = p.c + p.d * p.q;
    Accum acc;
    double sign = 1.0;
    for (int j = 0; j <= p.m; ++j) {
        const auto zr = hurwitz_zeta(p.z - j - 1, x);
        const double coef = factorial(p.m) * sign * std::pow(p.d, j) *
                            bernoulli_poly(p.m - j, w) /
                            (std::pow(p.b, j + 1) * pochhammer(1.0 - p.z, j + 1) *
                             factorial(p.m - j));
        acc.add(coef * zr.value, std::fabs(coef) * zr.err_estimate);
        sign = -sign;
    }
    return acc.done();
}

ClosedFormValue prim_bernoulli_moment(const PrimitiveParams& p) {
    require_moment_order(p.n, "prim_bernoulli_moment");
    require_weight_order(p.m, "prim_bernoulli_moment");
    require_scale(p.b, "prim_bernoulli_moment");
    const double x = p.a + p.b * p.q;
    const double front =
        factorial(p.n) * factorial(p.m) / factorial(p.n + p.m + 1);
    Accum acc;
    double sign = 1.0;
    for (int j = 0; j <= p.n; ++j) {
        const double term = front * sign * std::pow(p.q, p.n - j) *
                            binomial(p.m + p.n + 1, p.n - j) *
                            bernoulli_poly(p.m + j + 1, x) / std::pow(p.b, j + 1);
        acc.add(term, 0.0);
        sign = -sign;
    }
    return acc.done();
}

ClosedFormValue prim_zeta_selfproduct_odd(int n, double z, double q) {
    if (n < 1 || n > 19 || n % 2 == 0)
        throw domain_error("prim_zeta_selfproduct_odd: n must be odd, in [1, 19]");
    if (!(q > 0.0)) throw domain_error("prim_zeta_selfproduct_odd: requires q > 0");
    require_z_clear(z, n + 1, "prim_zeta_selfproduct_odd");
    Accum acc;
    for (int k = 1; k <= n; ++k) {
        const double coef =
            0.5 * pochhammer(z - n, k - 1) / pochhammer(1.0 - z, k);
        const auto za = hurwitz_zeta(z - k, q);
        const auto zb = hurwitz_zeta(z - n + k - 1, q);
        acc.add(coef * za.value * zb.value,
                std::fabs(coef) * (std::fabs(za.value) * zb.err_estimate +
                                   std::fabs(zb.value) * za.err_estimate));
    }
    return acc.done();
}

ClosedFormValue prim_zeta_selfproduct_odd_centered(int n, double z, double q) {
    if (n < 1 || n > 19 || n % 2 == 0)
        throw domain_error(
            "prim_zeta_selfproduct_odd_centered: n must be odd, in [1, 19]");
    if (!(q > 0.0))
        throw domain_error("prim_zeta_selfproduct_odd_centered: requires q > 0");
    require_z_clear(z, n + 1, "prim_zeta_selfproduct_odd_centered");
    const int r = (n + 1) / 2;
    Accum acc;
    const auto zc = hurwitz_zeta(z - r, q);
    const double ccoef =
        pochhammer(z - 2 * r + 1, r - 1) / (2.0 * pochhammer(1.0 - z, r));
    acc.add(ccoef * zc.value * zc.value,
            2.0 * std::fabs(ccoef * zc.value) * zc.err_estimate);
    for (int k = 1; k <= r - 1; ++k) {
        const double coef =
            pochhammer(z - 2 * r + 1, k - 1) / pochhammer(1.0 - z, k);
        const auto za = hurwitz_zeta(z - k, q);
        const auto zb = hurwitz_zeta(z - (2 * r - k), q);
        acc.add(coef * za.value * zb.value,
                std::fabs(coef) * (std::fabs(za.value) * zb.err_estimate +
                                   std::fabs(zb.value) * za.err_estimate));
    }
    return acc.done();
}

ClosedFormValue prim_exp_zeta(const PrimitiveParams& p, const SeriesControl& ctrl) {
    require_scale(p.b, "prim_exp_zeta");
    const double x = p.a + p.b * p.q;
    require_positive_arg(x, "prim_exp_zeta");
    // every (1-z)_{j+1} and every shifted zeta must stay clear of z = integer >= 1
    const double r = std::round(p.z);
    if (r >= 1.0 && std::fabs(p.z - r) < 1e-6)
        throw domain_error("prim_exp_zeta: z within 1e-6 of an integer >= 1");
    const double eq = std::exp(p.q);
    Accum acc;
    double sign = 1.0;
    int small_run = 0;
    for (int j = 0; j < factorial_series_cap; ++j) {
        const auto zr = hurwitz_zeta(p.z - 1 - j, x);
        const double coef =
            eq * sign / (std::pow(p.b, j + 1) * pochhammer(1.0 - p.z, j + 1));
        const double term = coef * zr.value;
        acc.add(term, std::fabs(coef) * zr.err_estimate);
        sign = -sign;
        small_run = (std::fabs(term) < ctrl.tol) ? small_run + 1 : 0;
        if (small_run >= 2) return acc.done();
    }
    throw convergence_error(
        "prim_exp_zeta: ladder did not shrink below tol within the term cap",
        static_cast<double>(acc.value), acc.err);
}

ClosedFormValue prim_exp_bernoulli(const PrimitiveParams& p) {
    require_weight_order(p.m, "prim_exp_bernoulli");
    require_scale(p.b, "prim_exp_bernoulli");
    const double x = p.a + p.b * p.q;
    const double eq = std::exp(p.q);
    const double front = factorial(p.m) * eq * ((p.m % 2 == 0) ? 1.0 : -1.0);
    Accum acc;
    double sign = 1.0;
    for (int j = 0; j <= p.m; ++j) {
        acc.add(front * sign * std::pow(p.b, p.m - j) * bernoulli_poly(j, x) /
                    factorial(j),
                0.0);
        sign = -sign;
    }
    return acc.done();
}

ClosedFormValue prim_polygamma_moment(const PrimitiveParams& p) {
    require_moment_order(p.n, "prim_polygamma_moment");
    if (p.m < 1 || p.m > 30)
        throw domain_error("prim_polygamma_moment: m must be in [1, 30]");
    require_scale(p.b, "prim_polygamma_moment");
    const double x = p.a + p.b * p.q;
    require_positive_arg(x, "prim_polygamma_moment");
    Accum acc;
    double sign = 1.0;
    for (int j = 0; j <= p.n; ++j) {
        const auto f = psi_any(p.m - j - 1, x);
        const double coef = factorial(p.n) * sign * std::pow(p.q, p.n - j) /
                            (std::pow(p.b, j + 1) * factorial(p.n - j));
        acc.add(coef * f.value, std::fabs(coef) * f.err_estimate);
        sign = -sign;
    }
    return acc.done();
}

ClosedFormValue prim_digamma_moment(const PrimitiveParams& p) {
    require_moment_order(p.n, "prim_digamma_moment");
    require_scale(p.b, "prim_digamma_moment");
    const double x = p.a + p.b * p.q;
    require_positive_arg(x, "prim_digamma_moment");
    Accum acc;
    double sign = 1.0;
    for (int j = 0; j <= p.n; ++j) {
        const auto f = negapolygamma(j + 1, x);
        const double coef = factorial(p.n) * sign * std::pow(p.q, p.n - j) /
                            (std::pow(p.b, j + 1) * factorial(p.n - j));
        acc.add(coef * f.value, std::fabs(coef) * f.err_estimate);
        sign = -sign;
    }
    return acc.done();
}

ClosedFormValue prim_negapolygamma_moment(const PrimitiveParams& p) {
    require_moment_order(p.n, "prim_negapolygamma_moment");
    if (p.m < 1 || p.m + p.n + 1 > 40)
        throw domain_error(
            "prim_negapolygamma_moment: need m >= 1 and m + n + 1 <= 40");
    require_scale(p.b, "prim_negapolygamma_moment");
    const double x = p.a + p.b * p.q;
    require_positive_arg(x, "prim_negapolygamma_moment");
    Accum acc;
    double sign = 1.0;
    for (int j = 0; j <= p.n; ++j) {
        const auto f = negapolygamma(p.m + j + 1, x);
        const double coef = factorial(p.n) * sign * std::pow(p.q, p.n - j) /
                            (std::pow(p.b, j + 1) * factorial(p.n - j));
        acc.add(coef * f.value, std::fabs(coef) * f.err_estimate);
        sign = -sign;
    }
    return acc.done();
}

ClosedFormValue prim_ak_moment(const PrimitiveParams& p) {
    require_moment_order(p.n, "prim_ak_moment");
    if (p.m < 1 || p.m + p.n + 1 > 40)
        throw domain_error("prim_ak_moment: need m >= 1 and m + n + 1 <= 40");
    require_scale(p.b, "prim_ak_moment");
    const double x = p.a + p.b * p.q;
    require_positive_arg(x, "prim_ak_moment");
    const double hm1 = harmonic(p.m - 1);
    Accum acc;
    double sign = 1.0;
    for (int j = 0; j <= p.n; ++j) {
        const int k = p.m + j + 1;
        const auto f = a_k(k, x);
        const double bern = (harmonic(k - 1) - hm1) * bernoulli_poly(k, x);
        const double coef = factorial(p.m) * factorial(p.n) * sign *
                            std::pow(p.q, p.n - j) /
                            (std::pow(p.b, j + 1) * factorial(p.n - j) *
                             factorial(k));
        acc.add(coef * (f.value - bern),
                std::fabs(coef) * (f.err_estimate + 4e-16 * std::fabs(bern)));
        sign = -sign;
    }
    return acc.done();
}

ClosedFormValue prim_loggamma_moment(const PrimitiveParams& p) {
    require_moment_order(p.n, "prim_loggamma_moment");
    require_scale(p.b, "prim_loggamma_moment");
    const double x = p.a + p.b * p.q;
    require_positive_arg(x, "prim_loggamma_moment");
    Accum acc;
    acc.add(log_sqrt_2pi * std::pow(p.q, p.n + 1) / (p.n + 1), 0.0);
    double sign = 1.0;
    for (int j = 0; j <= p.n; ++j) {
        const auto f = negapolygamma(2 + j, x);
        const double coef = factorial(p.n) * sign * std::pow(p.q, p.n - j) /
                            (std::pow(p.b, j + 1) * factorial(p.n - j));
        acc.add(coef * f.value, std::fabs(coef) * f.err_estimate);
        sign = -sign;
    }
    return acc.done();
}

ClosedFormValue prim_logsine_moment(int n, double q) {
    require_moment_order(n, "prim_logsine_moment");
    if (!(q >= 0.0 && q <= 1.0))
        throw domain_error("prim_logsine_moment: q must lie in [0, 1]");
    // endpoint values are the continuous limits; a_k's q = 0 convention
    // supplies them without special-casing
    Accum acc;
    acc.add(-std::pow(q, n + 1) * ln2 / (n + 1), 0.0);
    for (int j = 0; j <= n; ++j) {
        const int k = j + 2;
        const auto t1 = a_k(k, q);
        const auto t2 = a_k(k, 1.0 - q);
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        const double coef =
            -factorial(n) * std::pow(q, n - j) / (factorial(k) * factorial(n - j));
        acc.add(coef * (sign * t1.value - t2.value),
                std::fabs(coef) * (t1.err_estimate + t2.err_estimate));
    }
    return acc.done();
}

ClosedFormValue prim_exp_logsine(double q, const SeriesControl& ctrl) {
    if (!(q > 0.0 && q < 1.0))
        throw domain_error("prim_exp_logsine: q must lie in (0, 1)");
    const auto s = srlog(q, ctrl);
    const double eq = std::exp(q);
    const double v = -eq * (ln2 + s.value);
    return {v, s.terms + 1, eq * (s.err + ctrl.tol) + 1e-16 * std::fabs(v)};
}

ClosedFormValue prim_exp_cot(double q, const SeriesControl& ctrl) {
    if (!(q > 0.0 && q < 1.0))
        throw domain_error("prim_exp_cot: q must lie in (0, 1)");
    const auto s = srlog(q, ctrl);
    const double eq = std::exp(q);
    const double v = (eq / pi) * (std::log(std::sin(pi * q)) + ln2 + s.value);
    return {v, s.terms + 1,
            (eq / pi) * (s.err + ctrl.tol) + 1e-15 * (1.0 + std::fabs(v))};
}

ClosedFormValue def_zeta_moment(int n, double z, double a, double b) {
    require_moment_order(n, "def_zeta_moment");
    require_scale(b, "def_zeta_moment");
    if (!(a > 0.0) || !(a + b > 0.0))
        throw domain_error("def_zeta_moment: requires a > 0 and a + b > 0");
    require_z_clear(z, n + 2, "def_zeta_moment");
    Accum acc;
    double sign = 1.0;
    for (int j = 0; j <= n - 1; ++j) {
        const auto zr = hurwitz_zeta(z - j - 1, a + b);
        const double coef = factorial(n) * sign /
                            (std::pow(b, j + 1) * pochhammer(1.0 - z, j + 1) *
                             factorial(n - j));
        acc.add(coef * zr.value, std::fabs(coef) * zr.err_estimate);
        sign = -sign;
    }
    const auto z1 = hurwitz_zeta(z - n - 1, a + b);
    const auto z0 = hurwitz_zeta(z - n - 1, a);
    const double coef = factorial(n) * ((n % 2 == 0) ? 1.0 : -1.0) /
                        (std::pow(b, n + 1) * pochhammer(1.0 - z, n + 1));
    acc.add(coef * (z1.value - z0.value),
            std::fabs(coef) * (z1.err_estimate + z0.err_estimate));
    return acc.done();
}

ClosedFormValue def_zeta_moment_unit(int n, double z) {
    require_moment_order(n, "def_zeta_moment_unit");
    if (!(z - n - 1 < 0.0))
        throw domain_error("def_zeta_moment_unit: requires z < n + 1");
    require_z_clear(z, n + 1, "def_zeta_moment_unit");
    Accum acc;
    if (n == 0) return {0.0, 0, 0.0};
    double sign = 1.0;
    for (int j = 0; j <= n - 1; ++j) {
        const auto zr = riemann_zeta(z - j - 1);
        const double coef = factorial(n) * sign /
                            (pochhammer(1.0 - z, j + 1) * factorial(n - j));
        acc.add(coef * zr.value, std::fabs(coef) * zr.err_estimate);
        sign = -sign;
    }
    return acc.done();
}

ClosedFormValue def_logsine_moment(int n) {
    require_moment_order(n, "def_logsine_moment");
    Accum acc;
    acc.add(-ln2 / (n + 1), 0.0);
    double sign = -1.0;  // (-1)^k starting at k = 1
    for (int k = 1; k <= n / 2; ++k) {
        const auto zr = riemann_zeta(2.0 * k + 1.0);
        const double coef = factorial(n) * sign /
                            (std::pow(2.0 * pi, 2 * k) * factorial(n + 1 - 2 * k));
        acc.add(coef * zr.value, std::fabs(coef) * zr.err_estimate);
        sign = -sign;
    }
    return acc.done();
}

ClosedFormValue def_logsine_moment_half(int n) {
    require_moment_order(n, "def_logsine_moment_half");
    const double half_pow = std::pow(2.0, -(n + 1.0));
    Accum acc;
    acc.add(-half_pow * ln2 / (n + 1), 0.0);
    double sign = -1.0;  // carries (-1)^k
    for (int k = 1; k <= (n + 1) / 2; ++k) {
        const auto zr = riemann_zeta(2.0 * k + 1.0);
        const double coef = -half_pow * factorial(n) * sign *
                            (std::pow(2.0, 2 * k) - 1.0) /
                            (std::pow(2.0 * pi, 2 * k) * factorial(n + 1 - 2 * k));
        acc.add(coef * zr.value, std::fabs(coef) * zr.err_estimate);
        sign = -sign;
    }
    if (n % 2 == 1) {
        const auto d = hurwitz_zeta_dz(-(n + 1.0), 1.0);
        acc.add(-2.0 * d.value / (n + 1), 2.0 * d.err_estimate / (n + 1));
    }
    return acc.done();
}

ClosedFormValue def_negapoly_product(int k, int k2) {
    if (k < 1 || k > 40 || k2 < 1 || k2 > 40)
        throw domain_error("def_negapoly_product: indices must be in [1, 40]");
    if ((k - k2) % 2 != 0) return {0.0, 1, 0.0};  // parity cosine vanishes exactly
    const double parity = (((k - k2) / 2) % 2 == 0) ? 1.0 : -1.0;
    const int s = k + k2;
    const auto e = hurwitz_zeta_eval(static_cast<double>(s), 1.0, 2);
    const double g = euler_gamma + ln_2pi;
    const double bracket =
        e.d2z - 2.0 * g * e.dz + (g * g + 0.25 * pi * pi) * e.value;
    const double coef = 2.0 * parity / std::pow(2.0 * pi, s);
    const double v = coef * bracket;
    const double err = std::fabs(coef) *
                       (e.err_d2z + 2.0 * g * e.err_dz +
                        (g * g + 0.25 * pi * pi) * e.err_value) +
                       1e-16 * std::fabs(v);
    return {v, 3, err};
}

ClosedFormValue def_zeta_product(double z, double z2) {
    if (!(z <= 0.0 && z2 <= 0.0))
        throw domain_error("def_zeta_product: requires z <= 0 and z2 <= 0");
    const auto zr = riemann_zeta(2.0 - z - z2);
    const double v = 2.0 * std::tgamma(1.0 - z) * std::tgamma(1.0 - z2) *
                     std::pow(2.0 * pi, z + z2 - 2.0) * zr.value *
                     std::cos(0.5 * pi * (z - z2));
    return {v, 1, std::fabs(v) * 1e-14 + 2.0 * zr.err_estimate};
}

ClosedFormValue def_loggamma_sq() {
    const auto e = hurwitz_zeta_eval(2.0, 1.0, 2);
    const double L = log_sqrt_2pi;
    const double g = euler_gamma;
    const double v = g * g / 12.0 + pi * pi / 48.0 + g * L / 3.0 +
                     (4.0 / 3.0) * L * L - (g + 2.0 * L) * e.dz / (pi * pi) +
                     e.d2z / (2.0 * pi * pi);
    const double err = (g + 2.0 * L) * e.err_dz / (pi * pi) +
                       e.err_d2z / (2.0 * pi * pi) + 1e-15 * std::fabs(v);
    return {v, 6, err};
}

}  // namespace hzk
