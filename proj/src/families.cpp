#include "hzk/families.hpp"

#include "hzk/bernoulli.hpp"
#include "hzk/constants.hpp"
#include "hzk/errors.hpp"
#include "hzk/hurwitz.hpp"
#include "hzk/quadrature.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

namespace hzk {
namespace {

void check_family_index(int k, const char* who) {
    if (k < 1 || k > 40)
        throw domain_error(std::string(who) + ": k must be in [1, 40]");
}

// Shared engine for sum_m w(m) trig(2 pi m q) / m^s, s > 1 real (s = 1 is
// accepted but only ever stops through the Abel bound). Accumulates the four
// combinations cos/sin x {1, log m} in one pass; log-weighted sums are only
// requested by the derivative families.
struct TrigSums {
    double c = 0.0, s = 0.0, logc = 0.0, logs = 0.0;
    long terms = 0;
    double tail_bound = 0.0;
};

TrigSums trig_sums(double sexp, double q, bool want_log, const SeriesControl& ctrl) {
    if (!(sexp >= 1.0))
        throw domain_error("trig series: exponent must be >= 1");
    const double qr = q - std::floor(q);
    TrigSums out;
    const double sp = std::fabs(std::sin(pi * qr));  // |sin(pi q)|: Abel denominator
    if (sp < 1e-15) {
        // integer q: sines vanish, cosine sums are Riemann values
        out.c = riemann_zeta(sexp).value;
        if (want_log) out.logc = -riemann_zeta_dz(sexp).value;
        out.tail_bound = 1e-15;
        return out;
    }
    long double c = 0, s = 0, lc = 0, ls = 0;
    for (long m = 1; m <= ctrl.max_terms; ++m) {
        const double lm = std::log(static_cast<double>(m));
        const double am = std::pow(static_cast<double>(m), -sexp);
        // envelope of every accumulated coefficient; monotone once m >= 3
        const double env = want_log ? std::max(am, lm * am) : am;
        if (m >= 3) {
            double bound = env / sp;  // Abel: |tail from m| <= a_m sup|partial e^{i theta n}|
            if (sexp > 1.0 + 1e-12) {
                const double s1 = sexp - 1.0;
                const double integral =
                    want_log ? am * m * (lm / s1 + 1.0 / (s1 * s1))
                             : am * m / s1;  // comparison with the integral
                bound = std::min(bound, integral);
            }
            if (bound < ctrl.tol) {
                out.tail_bound = bound;
                out.c = static_cast<double>(c);
                out.s = static_cast<double>(s);
                out.logc = static_cast<double>(lc);
                out.logs = static_cast<double>(ls);
                return out;
            }
        }
        double frac = m * qr;
        frac -= std::floor(frac);
        const double ang = 2.0 * pi * frac;
        const double cs = std::cos(ang), sn = std::sin(ang);
        c += am * cs;
        s += am * sn;
        if (want_log) {
            lc += am * lm * cs;
            ls += am * lm * sn;
        }
        out.terms = m;
    }
    throw convergence_error(
        "trig series: term cap reached before tolerance (exponent " +
            std::to_string(sexp) + ")",
        static_cast<double>(c));
}

// cos(k pi / 2), sin(k pi / 2) from k mod 4, exactly.
void quarter_turn(int k, double& ck, double& sk) {
    switch (((k % 4) + 4) % 4) {
        case 0: ck = 1.0; sk = 0.0; break;
        case 1: ck = 0.0; sk = 1.0; break;
        case 2: ck = -1.0; sk = 0.0; break;
        default: ck = 0.0; sk = -1.0; break;
    }
}

}  // namespace

EvalResult digamma(double q) {
    if (!(q > 0.0) || !std::isfinite(q))
        throw domain_error("digamma: requires q > 0");
    // recurrence psi(x) = psi(x+1) - 1/x until x >= 10, then the asymptotic
    // log x - 1/(2x) - sum B_{2j}/(2j x^{2j})
    long double shift = 0;
    double x = q;
    while (x < 10.0) {
        shift -= 1.0L / x;
        x += 1.0;
    }
    static const double asy[7] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                                  1.0 / 132, -691.0 / 32760, 1.0 / 12};
    const double ix2 = 1.0 / (x * x);
    double tail = 0.0;
    for (int i = 6; i >= 0; --i) tail = (tail + asy[i]) * ix2;
    const double v = static_cast<double>(shift) + std::log(x) - 0.5 / x - tail;
    return {v, 1e-16 * (1.0 + std::fabs(v)) + 4e-17};
}

EvalResult polygamma(int m, double q) {
    if (m < 0 || m > 60) throw domain_error("polygamma: m must be in [0, 60]");
    if (m == 0) return digamma(q);
    const auto z = hurwitz_zeta(m + 1.0, q);
    const double mf = factorial(m);
    const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
    return {sign * mf * z.value, mf * z.err_estimate};
}

EvalResult loggamma(double q) {
    if (!(q > 0.0) || !std::isfinite(q))
        throw domain_error("loggamma: requires q > 0");
    const double v = std::lgamma(q);
    return {v, 4 * DBL_EPSILON * (1.0 + std::fabs(v))};
}

EvalResult a_k(int k, double q) {
    check_family_index(k, "a_k");
    if (!(q >= 0.0) || !std::isfinite(q))
        throw domain_error("a_k: requires q >= 0");
    if (q == 0.0) {
        if (k == 1) throw domain_error("a_k: q = 0 diverges for k = 1");
        q = 1.0;  // continuity: the q -> 0 limit equals the value at q = 1
    }
    const auto d = hurwitz_zeta_dz(1.0 - k, q);
    return {k * d.value, k * d.err_estimate};
}

EvalResult a_k_fourier(int k, double q, const SeriesControl& ctrl) {
    if (k < 2 || k > 40)
        throw domain_error("a_k_fourier: k must be in [2, 40]");
    if (!(q >= 0.0 && q <= 1.0))
        throw domain_error("a_k_fourier: q must lie in [0, 1]");
    const auto t = trig_sums(k, q, true, ctrl);
    const double front = harmonic(k - 1) - euler_gamma - ln_2pi;
    const double scale = 2.0 * factorial(k) / std::pow(2.0 * pi, k);
    double series;
    if (k % 2 == 1) {
        const int m = (k - 1) / 2;
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;  // (-1)^m
        series = sign * (t.logs + 0.5 * pi * t.c);
    } else {
        const int m = (k - 2) / 2;
        const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
        series = sign * (t.logc - 0.5 * pi * t.s);
    }
    const double v = front * bernoulli_poly(k, q) + scale * series;
    const double err = scale * (1.0 + 0.5 * pi) * t.tail_bound +
                       1e-15 * (1.0 + std::fabs(v));
    return {v, err};
}

EvalResult a_k_shifted(int k, double q) {
    check_family_index(k, "a_k_shifted");
    if (!(q > 1.0) || !std::isfinite(q))
        throw domain_error("a_k_shifted: requires q > 1");
    long double shift = 0;
    double steps = 0;
    while (q > 1.0) {
        q -= 1.0;
        shift += k * std::pow(q, k - 1) * std::log(q);
        steps += 1;
    }
    const auto base = a_k(k, q);
    const double v = base.value + static_cast<double>(shift);
    return {v, base.err_estimate +
                   (steps + 1) * DBL_EPSILON * (std::fabs(v) + std::fabs(static_cast<double>(shift)))};
}

EvalResult negapolygamma(int k, double q) {
    check_family_index(k, "negapolygamma");
    const auto a = a_k(k, q);  // validates q; accepts q = 0 for k >= 2
    const double bk = bernoulli_poly(k, q);
    const double kf = factorial(k);
    const double v = (a.value - harmonic(k - 1) * bk) / kf;
    return {v, (a.err_estimate + 4e-16 * std::fabs(harmonic(k - 1) * bk)) / kf};
}

EvalResult negapolygamma_fourier(int k, double q, const SeriesControl& ctrl) {
    check_family_index(k, "negapolygamma_fourier");
    if (!(q >= 0.0 && q <= 1.0))
        throw domain_error("negapolygamma_fourier: q must lie in [0, 1]");
    if (k == 1 && (q == 0.0 || q == 1.0))
        throw domain_error("negapolygamma_fourier: k = 1 diverges at the endpoints");
    const auto t = trig_sums(k, q, true, ctrl);
    double ck, sk;
    quarter_turn(k, ck, sk);
    const double bracket = (ln_2pi + euler_gamma) * (ck * t.c + sk * t.s) +
                           ck * t.logc + sk * t.logs -
                           0.5 * pi * (ck * t.s - sk * t.c);
    const double scale = 2.0 / std::pow(2.0 * pi, k);
    const double v = scale * bracket;
    const double err = scale * (ln_2pi + euler_gamma + 1.0 + 0.5 * pi) * t.tail_bound +
                       1e-15 * (1.0 + std::fabs(v));
    return {v, err};
}

EvalResult negapolygamma_alt(int k, double q) {
    check_family_index(k, "negapolygamma_alt");
    if (!(q > 0.0)) throw domain_error("negapolygamma_alt: requires q > 0");
    const auto e = hurwitz_zeta_eval(1.0 - k, q, 1);
    const double w = digamma(k).value + euler_gamma;  // = H_{k-1}, reached numerically
    const double kf = factorial(k - 1);
    const double v = (e.dz + w * e.value) / kf;
    return {v, (e.err_dz + std::fabs(w) * e.err_value +
                1e-15 * std::fabs(w * e.value)) / kf};
}

EvalResult gosper_negapolygamma(int k, double q, double tol) {
    if (k < 2 || k > 40)
        throw domain_error("gosper_negapolygamma: k must be in [2, 40]");
    if (!(q > 0.0)) throw domain_error("gosper_negapolygamma: requires q > 0");
    QuadratureProblem p;
    const int pow_ord = k - 2;
    p.integrand = [pow_ord, q](double t) {
        return std::pow(q - t, pow_ord) * std::lgamma(t);
    };
    p.lo = 0.0;
    p.hi = q;
    p.tol = tol;
    p.singular_lo = true;  // log Gamma blows up logarithmically at t = 0
    const auto r = integrate(p);
    const double kf = factorial(k - 2);
    return {r.value / kf, r.err_estimate / kf};
}

EvalResult negapolygamma_via_gosper(int k, double q, double tol) {
    const auto g = gosper_negapolygamma(k, q, tol);
    // the two antiderivative ladders differ by the polynomial fixed by the
    // balanced family's values at 0
    long double offset = 0;
    for (int r = 0; r <= k - 1; ++r)
        offset += std::pow(q, k - 1 - r) * glaisher_log(r) /
                  (factorial(r) * factorial(k - 1 - r));
    const double v = g.value + static_cast<double>(offset);
    return {v, g.err_estimate + 4e-16 * std::fabs(static_cast<double>(offset))};
}

double glaisher_log(int r) {
    if (r < 0 || r > 20) throw domain_error("glaisher_log: r must be in [0, 20]");
    return hurwitz_zeta_dz(-static_cast<double>(r), 1.0).value +
           harmonic(r) * zeta_neg_int(r);
}

EvalResult clausen(int n, double x, const SeriesControl& ctrl) {
    if (n < 2 || n > 60) throw domain_error("clausen: n must be in [2, 60]");
    if (!std::isfinite(x)) throw domain_error("clausen: x must be finite");
    const double q = x / (2.0 * pi);
    const auto t = trig_sums(n, q - std::floor(q), false, ctrl);
    return {(n % 2 == 0) ? t.s : t.c, t.tail_bound + 1e-16};
}

FourierKernels fourier_kernels(double z, double q, const SeriesControl& ctrl) {
    if (!(z > 1.0)) throw domain_error("fourier_kernels: requires z > 1");
    if (!(q >= 0.0 && q <= 1.0))
        throw domain_error("fourier_kernels: q must lie in [0, 1]");
    const auto t = trig_sums(z, q, false, ctrl);
    return {{t.c, t.tail_bound + 1e-16}, {t.s, t.tail_bound + 1e-16}};
}

}  // namespace hzk
