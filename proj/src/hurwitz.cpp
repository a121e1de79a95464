#include "hzk/hurwitz.hpp"

#include "hzk/bernoulli.hpp"
#include "hzk/constants.hpp"
#include "hzk/detail/bernoulli_exact.hpp"
#include "hzk/errors.hpp"

#include <quadmath.h>

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>

namespace hzk {
namespace {

template <class R> struct fp;
template <> struct fp<long double> {
    static long double pow(long double x, long double y) { return powl(x, y); }
    static long double log(long double x) { return logl(x); }
    static long double fabs(long double x) { return fabsl(x); }
    static constexpr long double eps = LDBL_EPSILON;
};
template <> struct fp<__float128> {
    static __float128 pow(__float128 x, __float128 y) { return powq(x, y); }
    static __float128 log(__float128 x) { return logq(x); }
    static __float128 fabs(__float128 x) { return fabsq(x); }
    static constexpr __float128 eps = FLT128_EPSILON;
};

constexpr int tail_cap = 30;       // Bernoulli corrections available before the
                                   // asymptotic series starts diverging
constexpr double x_target = 7.0;   // direct-sum cutoff N + q ~ 7: far enough for
                                   // the tail to die, small enough to bound the
                                   // x^{1-z} cancellation blow-up when z < 0
constexpr double escalate_tol = 2e-14;  // rerun in binary128 when the 80-bit
                                        // pass cannot certify this much

// B_{2j} / (2j)! rounded once into R.
template <class R>
const std::array<R, tail_cap + 1>& tail_coeffs() {
    static const std::array<R, tail_cap + 1> table = [] {
        std::array<R, tail_cap + 1> t{};
        for (int j = 1; j <= tail_cap; ++j) {
            detail::cpp_rational c = detail::bernoulli_rational(2 * j);
            for (int i = 2; i <= 2 * j; ++i) c /= i;
            t[j] = detail::rational_to<R>(c);
        }
        return t;
    }();
    return table;
}

template <class R>
struct Pass {
    R v[3] = {R(0), R(0), R(0)};  // partial sums: value, d/dz, d2/dz2
    R mag = R(0);                 // largest term magnitude folded in; the
                                  // cancellation scale the rounding bound uses
    double omitted = 0.0;         // first neglected tail term (truncation part)
    int n_direct = 0;
    int j_tail = 0;
};

// Euler-Maclaurin sum for zeta(z, q) and z-derivatives up to `order`:
//   sum_{n<N} (n+q)^{-z} + x^{1-z}/(z-1) + x^{-z}/2
//   + sum_j B_{2j}/(2j)! (z)_{2j-1} x^{-z-2j+1},        x = N + q.
// Derivative columns come from d/dz of each term: powers pick up -log factors,
// the Pochhammer factor differentiates through its log-derivative sums.
template <class R>
Pass<R> em_pass(double zd, double qd, int order) {
    const R z = zd, q = qd, one = R(1);
    Pass<R> out;
    const int n_sum = std::max(8, static_cast<int>(std::ceil(x_target - qd)));
    out.n_direct = n_sum;

    auto fold = [&](R t0, R t1, R t2) {
        out.v[0] += t0;
        R m = fp<R>::fabs(t0);
        if (order >= 1) { out.v[1] += t1; m = std::max(m, fp<R>::fabs(t1)); }
        if (order >= 2) { out.v[2] += t2; m = std::max(m, fp<R>::fabs(t2)); }
        out.mag = std::max(out.mag, m);
    };

    for (int n = 0; n < n_sum; ++n) {
        const R u = q + R(n);
        const R p = fp<R>::pow(u, -z);
        const R lu = (order >= 1) ? fp<R>::log(u) : R(0);
        fold(p, -lu * p, lu * lu * p);
    }

    const R x = q + R(n_sum);
    const R lx = fp<R>::log(x);
    const R iz = one / (z - one);
    const R w = fp<R>::pow(x, one - z);  // boundary integral w/(z-1)
    fold(w * iz,
         -w * (lx * iz + iz * iz),
         w * (lx * lx * iz + 2 * lx * iz * iz + 2 * iz * iz * iz));
    const R half = w / x / 2;            // x^{-z} / 2
    fold(half, -lx * half, lx * lx * half);

    const auto& coeff = tail_coeffs<R>();
    R e = w / (x * x);                   // x^{-z-2j+1}, starting at j = 1
    const R e_step = one / (x * x);

    // (z)_{2j-1} tracked incrementally through its nonzero factors z + i:
    // prod = product, s1/s2 = sums of 1/f and 1/f^2. At most one factor can
    // vanish (z integral), handled by the zeros branch below.
    R prod = one, s1 = R(0), s2 = R(0);
    int zeros = 0;
    int next_factor = 0;
    R prev_tm = R(0);
    bool have_prev = false;
    for (int j = 1; j <= tail_cap; ++j) {
        for (; next_factor < 2 * j - 1; ++next_factor) {
            const R f = z + R(next_factor);
            if (f == R(0)) { ++zeros; continue; }
            prod *= f;
            if (order >= 1) s1 += one / f;
            if (order >= 2) s2 += one / (f * f);
        }
        R r0, r1, r2;
        if (zeros == 0) {
            r0 = prod; r1 = prod * s1; r2 = prod * (s1 * s1 - s2);
        } else if (zeros == 1) {
            r0 = R(0); r1 = prod; r2 = 2 * prod * s1;
        } else {
            r0 = r1 = r2 = R(0);
        }
        const R c = coeff[j];
        const R t0 = c * r0 * e;
        const R t1 = (order >= 1) ? c * (r1 - r0 * lx) * e : R(0);
        const R t2 = (order >= 2) ? c * (r2 - 2 * r1 * lx + r0 * lx * lx) * e : R(0);
        R tm = fp<R>::fabs(t0);
        if (order >= 1) tm = std::max(tm, fp<R>::fabs(t1));
        if (order >= 2) tm = std::max(tm, fp<R>::fabs(t2));

        if (have_prev && j > 3 && tm > prev_tm) {
            out.omitted = static_cast<double>(tm);  // divergence onset: stop before it
            break;
        }
        R scale = fp<R>::fabs(out.v[0]);
        if (order >= 1) scale = std::max(scale, fp<R>::fabs(out.v[1]));
        if (order >= 2) scale = std::max(scale, fp<R>::fabs(out.v[2]));
        if (tm <= fp<R>::eps * scale) {
            out.omitted = static_cast<double>(tm);  // converged below rounding
            break;
        }
        fold(t0, t1, t2);
        out.j_tail = j;
        prev_tm = tm;
        have_prev = true;
        e *= e_step;
        if (j == tail_cap) out.omitted = static_cast<double>(tm);  // cap: charge last term
    }
    return out;
}

struct KernelOut {
    double v[3] = {0, 0, 0};
    double err = 0.0;   // shared additive bound: rounding at scale `mag` + omitted tail
    double mag = 0.0;
    int n_direct = 0;
    int j_tail = 0;
    bool escalated = false;
};

KernelOut run_kernel(double z, double q, int order) {
    const auto p1 = em_pass<long double>(z, q, order);
    double bound = 8.0 * static_cast<double>(fp<long double>::eps * p1.mag) + p1.omitted;
    bool need128 = !std::isfinite(bound);
    for (int o = 0; o <= order && !need128; ++o)
        if (bound > escalate_tol * (1.0 + std::fabs(static_cast<double>(p1.v[o]))))
            need128 = true;

    KernelOut k;
    if (!need128) {
        for (int o = 0; o <= order; ++o) k.v[o] = static_cast<double>(p1.v[o]);
        k.mag = static_cast<double>(p1.mag);
        k.n_direct = p1.n_direct;
        k.j_tail = p1.j_tail;
    } else {
        const auto p2 = em_pass<__float128>(z, q, order);
        bound = 8.0 * static_cast<double>(fp<__float128>::eps * p2.mag) + p2.omitted;
        for (int o = 0; o <= order; ++o) k.v[o] = static_cast<double>(p2.v[o]);
        k.mag = static_cast<double>(p2.mag);
        k.n_direct = p2.n_direct;
        k.j_tail = p2.j_tail;
        k.escalated = true;
    }
    k.err = bound;
    return k;
}

void check_args(double z, double q, const char* who) {
    if (!std::isfinite(z) || !std::isfinite(q))
        throw domain_error(std::string(who) + ": arguments must be finite");
    if (!(q > 0.0))
        throw domain_error(std::string(who) + ": requires q > 0");
    if (z == 1.0)
        throw domain_error(std::string(who) + ": z = 1 is the pole");
}

}  // namespace

ZetaEval hurwitz_zeta_eval(double z, double q, int order) {
    if (order < 0 || order > 2)
        throw domain_error("hurwitz_zeta_eval: order must be 0, 1 or 2");
    check_args(z, q, "hurwitz_zeta");
    const auto k = run_kernel(z, q, order);
    if (!std::isfinite(k.mag) || k.mag > 1.7e308)
        throw overflow_error("hurwitz_zeta: intermediate exceeds double range");
    for (int o = 0; o <= order; ++o)
        if (!std::isfinite(k.v[o]))
            throw overflow_error("hurwitz_zeta: result exceeds double range");

    ZetaEval e;
    e.value = k.v[0];
    e.dz = k.v[1];
    e.d2z = k.v[2];
    // per-column error: shared kernel bound plus accumulation rounding at the
    // column's own magnitude
    const double acc = (k.n_direct + 2) * DBL_EPSILON;
    e.err_value = k.err + acc * std::fabs(e.value);
    e.err_dz = k.err + acc * std::fabs(e.dz);
    e.err_d2z = k.err + acc * std::fabs(e.d2z);
    e.n_direct = k.n_direct;
    e.j_tail = k.j_tail;
    e.escalated = k.escalated;
    return e;
}

EvalResult hurwitz_zeta(double z, double q) {
    const auto e = hurwitz_zeta_eval(z, q, 0);
    return {e.value, e.err_value};
}

EvalResult hurwitz_zeta_dz(double z, double q) {
    const auto e = hurwitz_zeta_eval(z, q, 1);
    return {e.dz, e.err_dz};
}

EvalResult hurwitz_zeta_d2z(double z, double q) {
    const auto e = hurwitz_zeta_eval(z, q, 2);
    return {e.d2z, e.err_d2z};
}

EvalResult hurwitz_zeta_dq(double z, double q) {
    if (!std::isfinite(z) || !std::isfinite(q))
        throw domain_error("hurwitz_zeta_dq: arguments must be finite");
    if (!(q > 0.0)) throw domain_error("hurwitz_zeta_dq: requires q > 0");
    if (z == 0.0) return {-1.0, DBL_EPSILON};  // limit of -z zeta(z+1, q)
    const auto r = hurwitz_zeta(z + 1.0, q);
    const double v = -z * r.value;
    return {v, std::fabs(z) * r.err_estimate + 2 * DBL_EPSILON * std::fabs(v)};
}

EvalResult riemann_zeta(double z) { return hurwitz_zeta(z, 1.0); }
EvalResult riemann_zeta_dz(double z) { return hurwitz_zeta_dz(z, 1.0); }
EvalResult riemann_zeta_d2z(double z) { return hurwitz_zeta_d2z(z, 1.0); }

double zeta_neg_int(int r) {
    if (r < 0 || r + 1 > detail::bernoulli_max_index)
        throw domain_error("zeta_neg_int: r must be in [0, 59]");
    detail::cpp_rational v = detail::bernoulli_rational(r + 1);
    v /= (r + 1);
    if (r % 2 == 1) v = -v;
    return static_cast<double>(detail::rational_to<long double>(v));
}

double zeta_prime_neg_even(int n) {
    if (n < 1) throw domain_error("zeta_prime_neg_even: n must be >= 1");
    const auto zr = riemann_zeta(2.0 * n + 1.0);
    // log-space assembly keeps (2n)!/(2 pi)^{2n} alive as long as the result fits
    const double lg = std::lgamma(2.0 * n + 1.0) + std::log(zr.value) -
                      2.0 * n * ln_2pi - ln2;
    const double v = std::exp(lg);
    if (!std::isfinite(v))
        throw overflow_error("zeta_prime_neg_even: result exceeds double range");
    return (n % 2 == 1) ? -v : v;
}

double pochhammer(double x, int n) {
    if (n < 0) throw domain_error("pochhammer: n must be >= 0");
    long double p = 1;
    for (int i = 0; i < n; ++i) p *= x + i;
    return static_cast<double>(p);
}

}  // namespace hzk
