#include "hzk/verify.hpp"

#include "hzk/bernoulli.hpp"
#include "hzk/constants.hpp"
#include "hzk/errors.hpp"
#include "hzk/families.hpp"
#include "hzk/hurwitz.hpp"
#include "hzk/primitives.hpp"
#include "hzk/quadrature.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>

namespace hzk {
namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// Per-identity context: its own deterministic stream (seed ^ hash(id), so the
// draw sequence is independent of registry order) plus the effective tol.
struct Ctx {
    std::mt19937_64 rng;
    int draws;
    double tol;
    const IdentityInfo* info;
    std::vector<CheckResult>* out;

    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(rng);
    }
    int uniform_int(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(rng);
    }
    // z drawn clear of the zeta pole at 1 (and, by staying below 0.6, clear of
    // every positive-integer denominator zero the primitive formulas have)
    double draw_z_low() { return uniform(-4.0, 0.6); }
    void record(const std::string& grid, double lhs, double rhs) {
        CheckResult c;
        c.id = info->id;
        c.kind = info->kind;
        c.grid_point = grid;
        c.lhs = lhs;
        c.rhs = rhs;
        c.abs_residual = std::fabs(lhs - rhs);
        c.rel_residual =
            c.abs_residual / (1.0 + std::max(std::fabs(lhs), std::fabs(rhs)));
        c.tolerance = tol;
        c.passed = c.rel_residual <= tol;
        out->push_back(c);
    }
    void record_error(const std::string& what) {
        CheckResult c;
        c.id = info->id;
        c.kind = info->kind;
        c.grid_point = "error: " + what;
        c.tolerance = tol;
        c.passed = false;
        out->push_back(c);
    }
};

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

struct Identity {
    IdentityInfo info;
    std::function<void(Ctx&)> run;
};

// interval [q1, q2] for primitive-difference checks, kept wide enough that
// the difference does not cancel to noise
void draw_interval(Ctx& c, double lo, double hi, double& q1, double& q2) {
    q1 = c.uniform(lo, hi - 0.25);
    q2 = c.uniform(q1 + 0.2, hi);
}

std::vector<Identity> build_registry() {
    std::vector<Identity> reg;
    auto add = [&](const char* id, const char* desc, CheckKind kind,
                   std::vector<std::string> suites, double tol,
                   std::function<void(Ctx&)> run) {
        reg.push_back({{id, desc, kind, std::move(suites), tol}, std::move(run)});
    };

    // ---- core: Bernoulli layer --------------------------------------------

    add("bernoulli-addition",
        "B_{p+1}(x+y) equals the binomial convolution of B_r(x) with powers of y",
        CheckKind::invariant, {"core"}, 1e-10, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int p = c.uniform_int(1, 10);
                const double x = c.uniform(0.0, 2.0), y = c.uniform(0.0, 2.0);
                long double rhs = 0;
                for (int r = 0; r <= p + 1; ++r)
                    rhs += binomial(p + 1, r) * bernoulli_poly(r, x) *
                           std::pow(y, p + 1 - r);
                c.record(fmt("p=%d x=%.9g y=%.9g", p, x, y),
                         bernoulli_poly(p + 1, x + y), static_cast<double>(rhs));
            }
        });

    add("bernoulli-alternating-collapse",
        "the alternating binomial Bernoulli sum collapses to q^{p+1} + (-1)^p B_{p+1}(a)/b^{p+1}",
        CheckKind::invariant, {"core"}, 1e-10, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int p = c.uniform_int(0, 8);
                const double a = c.uniform(0.0, 2.0), b = c.uniform(0.5, 2.0);
                const double q = c.uniform(0.0, 1.5);
                const double rhs = std::pow(q, p + 1) +
                                   ((p % 2 == 0) ? 1.0 : -1.0) *
                                       bernoulli_poly(p + 1, a) / std::pow(b, p + 1);
                c.record(fmt("p=%d a=%.9g b=%.9g q=%.9g", p, a, b, q),
                         bernoulli_alternating_sum(p, a, b, q), rhs);
            }
        });

    add("bernoulli-derivative", "d/dq B_k(q) = k B_{k-1}(q)",
        CheckKind::invariant, {"core"}, 1e-6, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int k = c.uniform_int(2, 12);
                const double q = c.uniform(0.0, 2.0);
                const double lhs = finite_diff(
                    [k](double x) { return bernoulli_poly(k, x); }, q, 1, 1e-3);
                c.record(fmt("k=%d q=%.9g", k, q), lhs,
                         k * bernoulli_poly(k - 1, q));
            }
        });

    add("bernoulli-reflection", "B_n(1-q) = (-1)^n B_n(q)",
        CheckKind::invariant, {"core"}, 1e-11, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int n = c.uniform_int(2, 20);
                const double q = c.uniform(0.0, 1.0);
                const double sign = (n % 2 == 0) ? 1.0 : -1.0;
                c.record(fmt("n=%d q=%.9g", n, q), bernoulli_poly(n, 1.0 - q),
                         sign * bernoulli_poly(n, q));
            }
        });

    add("bernoulli-shift", "B_m(q+1) - B_m(q) = m q^{m-1}",
        CheckKind::invariant, {"core"}, 1e-11, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int m = c.uniform_int(1, 20);
                const double q = c.uniform(0.0, 3.0);
                c.record(fmt("m=%d q=%.9g", m, q),
                         bernoulli_poly(m, q + 1.0) - bernoulli_poly(m, q),
                         m * std::pow(q, m - 1));
            }
        });

    add("bernoulli-zero-mean", "integral of B_k over one period [0,1] vanishes",
        CheckKind::definite_value, {"core", "definite"}, 1e-9, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int k = c.uniform_int(1, 12);
                const double v = quad(
                    [k](double q) { return bernoulli_poly(k, q); }, 0.0, 1.0, 1e-12);
                c.record(fmt("k=%d", k), v, 0.0);
            }
        });

    // ---- core: kernel and elementary families ----------------------------

    add("clausen-values",
        "Clausen series hit the pinned Catalan value and the alternating zeta value",
        CheckKind::constant_value, {"core", "constants"}, 1e-10, [](Ctx& c) {
            SeriesControl ctrl{1e-11, 1000000};
            c.record("n=2 x=pi/2", clausen(2, 0.5 * pi, ctrl).value, catalan);
            c.record("n=3 x=pi", clausen(3, pi, ctrl).value,
                     -0.75 * riemann_zeta(3.0).value);
        });

    add("digamma-limit-consistency",
        "1/eps - zeta(1+eps, q) approaches psi(q) as eps -> 0",
        CheckKind::cross_path, {"core"}, 1e-5, [](Ctx& c) {
            // eps recovered from the rounded 1 + eps so that 1/eps matches the
            // pole of the argument actually evaluated
            const double z = 1.0 + 1e-6;
            const double eps = z - 1.0;
            for (int d = 0; d < c.draws; ++d) {
                const double q = c.uniform(0.2, 5.0);
                const double lhs = 1.0 / eps - hurwitz_zeta(z, q).value;
                c.record(fmt("q=%.9g eps=1e-6", q), lhs, digamma(q).value);
            }
        });

    add("digamma-polygamma-ladder", "d/dq psi(q) = psi'(q)",
        CheckKind::invariant, {"core"}, 1e-6, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const double q = c.uniform(0.5, 5.0);
                const double lhs = finite_diff(
                    [](double x) { return digamma(x).value; }, q, 1, 1e-3);
                c.record(fmt("q=%.9g", q), lhs, polygamma(1, q).value);
            }
        });

    add("fourier-kernel-identifications",
        "C and S at integer exponent reduce to Bernoulli polynomials / Clausen values",
        CheckKind::invariant, {"core"}, 1e-9, [](Ctx& c) {
            SeriesControl ctrl{1e-10, 1000000};
            for (int d = 0; d < c.draws; ++d) {
                const int m = c.uniform_int(1, 3);
                const double q = c.uniform(0.05, 0.95);
                const int odd = 2 * m + 1, even = 2 * m + 2;
                const auto fo = fourier_kernels(odd, q, ctrl);
                const auto fe = fourier_kernels(even, q, ctrl);
                const double so = ((m % 2 == 0) ? -1.0 : 1.0) *  // (-1)^{m+1}
                                  std::pow(2.0 * pi, odd) *
                                  bernoulli_poly(odd, q) / (2.0 * factorial(odd));
                const double ce = ((m % 2 == 0) ? 1.0 : -1.0) *  // (-1)^m
                                  std::pow(2.0 * pi, even) *
                                  bernoulli_poly(even, q) / (2.0 * factorial(even));
                c.record(fmt("S n=%d q=%.9g", odd, q), fo.s.value, so);
                c.record(fmt("C n=%d q=%.9g", even, q), fe.c.value, ce);
                c.record(fmt("C n=%d q=%.9g", odd, q), fo.c.value,
                         clausen(odd, 2.0 * pi * q, ctrl).value);
                c.record(fmt("S n=%d q=%.9g", even, q), fe.s.value,
                         clausen(even, 2.0 * pi * q, ctrl).value);
            }
        });

    add("loggamma-zeta-bridge",
        "log Gamma(q) = d/dz zeta(z,q)|_0 + log sqrt(2 pi)",
        CheckKind::cross_path, {"core"}, 1e-11, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const double q = c.uniform(0.1, 6.0);
                c.record(fmt("q=%.9g", q), loggamma(q).value,
                         hurwitz_zeta_dz(0.0, q).value + log_sqrt_2pi);
            }
        });

    add("polygamma-recurrence",
        "psi^(m)(q+1) - psi^(m)(q) = (-1)^m m! q^{-m-1}",
        CheckKind::invariant, {"core"}, 1e-10, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int m = c.uniform_int(1, 5);
                const double q = c.uniform(0.3, 3.0);
                const double rhs = ((m % 2 == 0) ? 1.0 : -1.0) * factorial(m) /
                                   std::pow(q, m + 1);
                c.record(fmt("m=%d q=%.9g", m, q),
                         polygamma(m, q + 1.0).value - polygamma(m, q).value, rhs);
            }
        });

    add("zeta-bernoulli-specialization", "zeta(1-m, q) = -B_m(q)/m",
        CheckKind::invariant, {"core"}, 1e-11, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int m = c.uniform_int(1, 12);
                const double q = c.uniform(0.1, 3.0);
                c.record(fmt("m=%d q=%.9g", m, q),
                         hurwitz_zeta(1.0 - m, q).value,
                         -bernoulli_poly(m, q) / m);
            }
        });

    add("zeta-d2z-shift",
        "d2/dz2 zeta(z,q) - d2/dz2 zeta(z,q+1) = log^2(q) q^{-z}",
        CheckKind::invariant, {"core"}, 1e-11, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                double z = c.uniform(-6.0, 6.0);
                if (std::fabs(z - 1.0) < 0.25) z += 0.5;
                const double q = c.uniform(0.3, 4.0);
                const double lg = std::log(q);
                c.record(fmt("z=%.9g q=%.9g", z, q),
                         hurwitz_zeta_d2z(z, q).value -
                             hurwitz_zeta_d2z(z, q + 1.0).value,
                         lg * lg * std::pow(q, -z));
            }
        });

    add("zeta-dq-consistency",
        "d/dq zeta(z,q) matches a central finite difference",
        CheckKind::invariant, {"core"}, 1e-6, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                double z = c.uniform(-5.0, 5.0);
                if (std::fabs(z - 1.0) < 0.25) z += 0.5;
                const double q = c.uniform(0.5, 4.0);
                const double fd = finite_diff(
                    [z](double x) { return hurwitz_zeta(z, x).value; }, q, 1, 1e-3);
                c.record(fmt("z=%.9g q=%.9g", z, q),
                         hurwitz_zeta_dq(z, q).value, fd);
            }
        });

    add("zeta-dz-consistency",
        "d/dz zeta(z,q) matches a central finite difference",
        CheckKind::invariant, {"core"}, 1e-6, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                double z = c.uniform(-5.0, 5.0);
                if (std::fabs(z - 1.0) < 0.25) z += 0.5;
                const double q = c.uniform(0.3, 4.0);
                const double fd = finite_diff(
                    [q](double x) { return hurwitz_zeta(x, q).value; }, z, 1, 1e-3);
                c.record(fmt("z=%.9g q=%.9g", z, q),
                         hurwitz_zeta_dz(z, q).value, fd);
            }
        });

    add("zeta-half-argument", "zeta(z, 1/2) = (2^z - 1) zeta(z)",
        CheckKind::invariant, {"core"}, 1e-12, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                double z = c.uniform(-8.0, 8.0);
                if (std::fabs(z - 1.0) < 0.25) z += 0.5;
                c.record(fmt("z=%.9g", z), hurwitz_zeta(z, 0.5).value,
                         (std::pow(2.0, z) - 1.0) * riemann_zeta(z).value);
            }
        });

    add("zeta-shift", "zeta(z,q) - zeta(z,q+1) = q^{-z}",
        CheckKind::invariant, {"core"}, 1e-12, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                double z = c.uniform(-10.0, 10.0);
                if (std::fabs(z - 1.0) < 0.25) z += 0.5;
                const double q = c.uniform(0.2, 5.0);
                c.record(fmt("z=%.9g q=%.9g", z, q),
                         hurwitz_zeta(z, q).value - hurwitz_zeta(z, q + 1.0).value,
                         std::pow(q, -z));
            }
        });

    // ---- ak ---------------------------------------------------------------

    add("ak-derivative-ladder",
        "d/dq a_{k+1}(q) = (k+1) (a_k(q) + B_k(q)/k)",
        CheckKind::invariant, {"ak"}, 1e-6, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int k = c.uniform_int(1, 6);
                const double q = c.uniform(0.3, 3.0);
                const double lhs = finite_diff(
                    [k](double x) { return a_k(k + 1, x).value; }, q, 1, 1e-3);
                c.record(fmt("k=%d q=%.9g", k, q), lhs,
                         (k + 1) * (a_k(k, q).value + bernoulli_poly(k, q) / k));
            }
        });

    add("ak-endpoint-continuity",
        "a_k(q) approaches the q = 0 convention value as q -> 0",
        CheckKind::invariant, {"ak"}, 1e-4, [](Ctx& c) {
            for (int k = 2; k <= 8; ++k)
                c.record(fmt("k=%d q=1e-6", k), a_k(k, 1e-6).value,
                         a_k(k, 0.0).value);
        });

    add("ak-fourier-crosspath",
        "kernel route and Fourier-series route agree on a_k",
        CheckKind::cross_path, {"ak"}, 1e-8, [](Ctx& c) {
            SeriesControl ctrl{1e-9, 1000000};
            for (int d = 0; d < c.draws; ++d) {
                const int k = c.uniform_int(2, 6);
                const double q = c.uniform(0.05, 0.95);
                c.record(fmt("k=%d q=%.9g", k, q), a_k(k, q).value,
                         a_k_fourier(k, q, ctrl).value);
            }
        });

    add("ak-half-argument",
        "a_k(1/2) = (-1)^{k-1} B_k 2^{1-k} log 2 - (1 - 2^{1-k}) k zeta'(1-k)",
        CheckKind::invariant, {"ak"}, 1e-11, [](Ctx& c) {
            for (int k = 1; k <= 8; ++k) {
                const double p = std::pow(2.0, 1.0 - k);
                const double rhs = ((k % 2 == 1) ? 1.0 : -1.0) *
                                       bernoulli_number(k) * p * ln2 -
                                   (1.0 - p) * k *
                                       hurwitz_zeta_dz(1.0 - k, 1.0).value;
                c.record(fmt("k=%d", k), a_k(k, 0.5).value, rhs);
            }
        });

    add("ak-shift-recurrence", "a_k(q+1) - a_k(q) = k q^{k-1} log q",
        CheckKind::invariant, {"ak"}, 1e-10, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int k = c.uniform_int(1, 8);
                const double q = c.uniform(0.2, 4.0);
                c.record(fmt("k=%d q=%.9g", k, q),
                         a_k(k, q + 1.0).value - a_k(k, q).value,
                         k * std::pow(q, k - 1) * std::log(q));
            }
        });

    add("ak-shifted-crosspath",
        "the shift-reduced evaluation agrees with the kernel at q > 1",
        CheckKind::cross_path, {"ak"}, 1e-10, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int k = c.uniform_int(1, 6);
                const double q = c.uniform(1.1, 6.0);
                c.record(fmt("k=%d q=%.9g", k, q), a_k_shifted(k, q).value,
                         a_k(k, q).value);
            }
        });

    add("ak-zero-mean", "integral of a_k over [0,1] vanishes",
        CheckKind::definite_value, {"ak", "definite"}, 1e-9, [](Ctx& c) {
            c.record("k=1", quad([](double q) { return a_k(1, q).value; }, 0.0,
                                 1.0, 1e-11, true, false),
                     0.0);
            for (int d = 0; d < c.draws; ++d) {
                const int k = c.uniform_int(2, 6);
                const double v =
                    quad([k](double q) { return a_k(k, q).value; }, 0.0, 1.0, 1e-11);
                c.record(fmt("k=%d", k), v, 0.0);
            }
        });

    // ---- negapoly ----------------------------------------------------------

    add("negapoly-alt-form",
        "balanced negapolygamma equals its zeta-pair rearrangement",
        CheckKind::cross_path, {"negapoly"}, 1e-11, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int k = c.uniform_int(1, 8);
                const double q = c.uniform(0.1, 4.0);
                c.record(fmt("k=%d q=%.9g", k, q), negapolygamma(k, q).value,
                         negapolygamma_alt(k, q).value);
            }
        });

    add("negapoly-endpoint-values",
        "psi^(-1-r)(0) = (zeta'(-r) + H_r zeta(-r)) / r!, and equals the value at 1",
        CheckKind::invariant, {"negapoly"}, 1e-11, [](Ctx& c) {
            for (int r = 1; r <= 6; ++r) {
                const double rhs = (hurwitz_zeta_dz(-double(r), 1.0).value +
                                    harmonic(r) * zeta_neg_int(r)) /
                                   factorial(r);
                c.record(fmt("r=%d at0", r), negapolygamma(1 + r, 0.0).value, rhs);
                c.record(fmt("r=%d at1", r), negapolygamma(1 + r, 1.0).value, rhs);
            }
        });

    add("negapoly-fourier-crosspath",
        "kernel route and rotated Fourier series agree on psi^(-k)",
        CheckKind::cross_path, {"negapoly"}, 1e-8, [](Ctx& c) {
            SeriesControl ctrl{1e-9, 1000000};
            for (int d = 0; d < c.draws; ++d) {
                const int k = c.uniform_int(2, 6);
                const double q = c.uniform(0.05, 0.95);
                c.record(fmt("k=%d q=%.9g", k, q), negapolygamma(k, q).value,
                         negapolygamma_fourier(k, q, ctrl).value);
            }
        });

    add("negapoly-gosper-offset",
        "psi^(-k) equals the iterated log Gamma integral plus its glaisher_log polynomial",
        CheckKind::cross_path, {"negapoly"}, 1e-8, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int k = c.uniform_int(2, 4);
                const double q = c.uniform(0.3, 2.0);
                c.record(fmt("k=%d q=%.9g", k, q), negapolygamma(k, q).value,
                         negapolygamma_via_gosper(k, q, 1e-10).value);
            }
        });

    add("negapoly-ladder", "d/dq psi^(-k)(q) = psi^(-k+1)(q)",
        CheckKind::invariant, {"negapoly"}, 1e-6, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int k = c.uniform_int(2, 6);
                const double q = c.uniform(0.4, 3.0);
                const double lhs = finite_diff(
                    [k](double x) { return negapolygamma(k, x).value; }, q, 1, 1e-3);
                c.record(fmt("k=%d q=%.9g", k, q), lhs,
                         negapolygamma(k - 1, q).value);
            }
        });

    add("negapoly-loggamma-base",
        "psi^(-1)(q) = log Gamma(q) - log sqrt(2 pi)",
        CheckKind::invariant, {"negapoly"}, 1e-12, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const double q = c.uniform(0.2, 5.0);
                c.record(fmt("q=%.9g", q), negapolygamma(1, q).value,
                         loggamma(q).value - log_sqrt_2pi);
            }
        });

    add("negapoly-shift",
        "psi^(-k)(q+1) - psi^(-k)(q) = q^{k-1} (log q - H_{k-1}) / (k-1)!",
        CheckKind::invariant, {"negapoly"}, 1e-10, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int k = c.uniform_int(1, 8);
                const double q = c.uniform(0.2, 3.0);
                const double rhs = std::pow(q, k - 1) *
                                   (std::log(q) - harmonic(k - 1)) /
                                   factorial(k - 1);
                c.record(fmt("k=%d q=%.9g", k, q),
                         negapolygamma(k, q + 1.0).value -
                             negapolygamma(k, q).value,
                         rhs);
            }
        });

    add("negapoly-zero-mean", "integral of psi^(-k) over [0,1] vanishes",
        CheckKind::definite_value, {"negapoly", "definite"}, 1e-9, [](Ctx& c) {
            c.record("k=1",
                     quad([](double q) { return negapolygamma(1, q).value; }, 0.0,
                          1.0, 1e-11, true, false),
                     0.0);
            for (int d = 0; d < c.draws; ++d) {
                const int k = c.uniform_int(2, 6);
                const double v = quad(
                    [k](double q) { return negapolygamma(k, q).value; }, 0.0, 1.0,
                    1e-11);
                c.record(fmt("k=%d", k), v, 0.0);
            }
        });

    // ---- primitives: fundamental-theorem checks ---------------------------

    add("prim-ak-moment-ftc",
        "d/dq of the a_m moment antiderivative integrates back to q^n a_m(a+bq)",
        CheckKind::primitive_difference, {"primitives"}, 1e-9, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                PrimitiveParams p;
                p.n = c.uniform_int(0, 3);
                p.m = c.uniform_int(1, 3);
                p.a = c.uniform(0.2, 1.0);
                p.b = c.uniform(0.5, 1.5);
                double q1, q2;
                draw_interval(c, 0.1, 1.8, q1, q2);
                auto F = [&](double q) {
                    PrimitiveParams pp = p;
                    pp.q = q;
                    return prim_ak_moment(pp).value;
                };
                const int n = p.n, m = p.m;
                const double a = p.a, b = p.b;
                const double i = quad(
                    [n, m, a, b](double q) {
                        return std::pow(q, n) * a_k(m, a + b * q).value;
                    },
                    q1, q2, 1e-11);
                c.record(fmt("n=%d m=%d a=%.9g b=%.9g q1=%.9g q2=%.9g", n, m, a,
                             b, q1, q2),
                         F(q2) - F(q1), i);
            }
        });

    add("prim-ak-negapoly-equivalence",
        "a_m-form antiderivative = m! negapolygamma form + H_{m-1} Bernoulli form",
        CheckKind::cross_path, {"primitives"}, 1e-12, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                PrimitiveParams p;
                p.n = c.uniform_int(0, 3);
                p.m = c.uniform_int(1, 3);
                p.a = c.uniform(0.2, 1.0);
                p.b = c.uniform(0.5, 1.5);
                p.q = c.uniform(0.1, 1.8);
                const double rhs =
                    factorial(p.m) * prim_negapolygamma_moment(p).value +
                    harmonic(p.m - 1) * prim_bernoulli_moment(p).value;
                c.record(fmt("n=%d m=%d a=%.9g b=%.9g q=%.9g", p.n, p.m, p.a,
                             p.b, p.q),
                         prim_ak_moment(p).value, rhs);
            }
        });

    add("prim-bernoulli-moment-ftc",
        "the q^n B_m(a+bq) antiderivative differences equal the integral",
        CheckKind::primitive_difference, {"primitives"}, 1e-10, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                PrimitiveParams p;
                p.n = c.uniform_int(0, 4);
                p.m = c.uniform_int(1, 5);
                p.a = c.uniform(-0.5, 1.0);
                p.b = c.uniform(0.4, 1.6);
                double q1, q2;
                draw_interval(c, -0.5, 1.5, q1, q2);
                auto F = [&](double q) {
                    PrimitiveParams pp = p;
                    pp.q = q;
                    return prim_bernoulli_moment(pp).value;
                };
                const int n = p.n, m = p.m;
                const double a = p.a, b = p.b;
                const double i = quad(
                    [n, m, a, b](double q) {
                        return std::pow(q, n) * bernoulli_poly(m, a + b * q);
                    },
                    q1, q2, 1e-12);
                c.record(fmt("n=%d m=%d a=%.9g b=%.9g q1=%.9g q2=%.9g", n, m, a,
                             b, q1, q2),
                         F(q2) - F(q1), i);
            }
        });

    add("prim-digamma-moment-ftc",
        "the q^n psi(a+bq) antiderivative differences equal the integral",
        CheckKind::primitive_difference, {"primitives"}, 1e-9, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                PrimitiveParams p;
                p.n = c.uniform_int(0, 3);
                p.a = c.uniform(0.3, 1.0);
                p.b = c.uniform(0.4, 1.4);
                double q1, q2;
                draw_interval(c, 0.1, 1.8, q1, q2);
                auto F = [&](double q) {
                    PrimitiveParams pp = p;
                    pp.q = q;
                    return prim_digamma_moment(pp).value;
                };
                const int n = p.n;
                const double a = p.a, b = p.b;
                const double i = quad(
                    [n, a, b](double q) {
                        return std::pow(q, n) * digamma(a + b * q).value;
                    },
                    q1, q2, 1e-11);
                c.record(fmt("n=%d a=%.9g b=%.9g q1=%.9g q2=%.9g", n, a, b, q1,
                             q2),
                         F(q2) - F(q1), i);
            }
        });

    add("prim-exp-bernoulli-ftc",
        "the e^q B_m(a+bq) antiderivative differences equal the integral",
        CheckKind::primitive_difference, {"primitives"}, 1e-10, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                PrimitiveParams p;
                p.m = c.uniform_int(1, 5);
                p.a = c.uniform(-0.5, 1.0);
                p.b = c.uniform(0.4, 1.6);
                double q1, q2;
                draw_interval(c, -0.5, 1.5, q1, q2);
                auto F = [&](double q) {
                    PrimitiveParams pp = p;
                    pp.q = q;
                    return prim_exp_bernoulli(pp).value;
                };
                const int m = p.m;
                const double a = p.a, b = p.b;
                const double i = quad(
                    [m, a, b](double q) {
                        return std::exp(q) * bernoulli_poly(m, a + b * q);
                    },
                    q1, q2, 1e-12);
                c.record(fmt("m=%d a=%.9g b=%.9g q1=%.9g q2=%.9g", m, a, b, q1,
                             q2),
                         F(q2) - F(q1), i);
            }
        });

    add("prim-exp-cot-ftc",
        "the e^q cot(pi q) antiderivative differences equal the integral",
        CheckKind::primitive_difference, {"primitives"}, 1e-9, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                double q1, q2;
                draw_interval(c, 0.1, 0.9, q1, q2);
                const double i = quad(
                    [](double q) { return std::exp(q) / std::tan(pi * q); }, q1,
                    q2, 1e-11);
                c.record(fmt("q1=%.9g q2=%.9g", q1, q2),
                         prim_exp_cot(q2).value - prim_exp_cot(q1).value, i);
            }
        });

    add("prim-exp-logsine-ftc",
        "the e^q log sin(pi q) antiderivative differences equal the integral",
        CheckKind::primitive_difference, {"primitives"}, 1e-9, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                double q1, q2;
                draw_interval(c, 0.05, 0.95, q1, q2);
                const double i = quad(
                    [](double q) {
                        return std::exp(q) * std::log(std::sin(pi * q));
                    },
                    q1, q2, 1e-11);
                c.record(fmt("q1=%.9g q2=%.9g", q1, q2),
                         prim_exp_logsine(q2).value - prim_exp_logsine(q1).value,
                         i);
            }
        });

    add("prim-exp-zeta-ftc",
        "the e^q zeta(z, a+bq) antiderivative differences equal the integral",
        CheckKind::primitive_difference, {"primitives"}, 1e-9, [](Ctx& c) {
            SeriesControl ctrl{1e-13, 1000000};
            for (int d = 0; d < c.draws; ++d) {
                PrimitiveParams p;
                p.z = c.draw_z_low();
                p.a = c.uniform(0.4, 1.2);
                p.b = c.uniform(0.5, 1.4);
                double q1, q2;
                draw_interval(c, 0.1, 1.6, q1, q2);
                auto F = [&](double q) {
                    PrimitiveParams pp = p;
                    pp.q = q;
                    return prim_exp_zeta(pp, ctrl).value;
                };
                const double z = p.z, a = p.a, b = p.b;
                const double i = quad(
                    [z, a, b](double q) {
                        return std::exp(q) * hurwitz_zeta(z, a + b * q).value;
                    },
                    q1, q2, 1e-11);
                c.record(fmt("z=%.9g a=%.9g b=%.9g q1=%.9g q2=%.9g", z, a, b,
                             q1, q2),
                         F(q2) - F(q1), i);
            }
        });

    add("prim-loggamma-moment-ftc",
        "the q^n log Gamma(a+bq) antiderivative differences equal the integral",
        CheckKind::primitive_difference, {"primitives"}, 1e-9, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                PrimitiveParams p;
                p.n = c.uniform_int(0, 3);
                p.a = c.uniform(0.3, 1.0);
                p.b = c.uniform(0.3, 1.2);
                double q1, q2;
                draw_interval(c, 0.1, 1.8, q1, q2);
                auto F = [&](double q) {
                    PrimitiveParams pp = p;
                    pp.q = q;
                    return prim_loggamma_moment(pp).value;
                };
                const int n = p.n;
                const double a = p.a, b = p.b;
                const double i = quad(
                    [n, a, b](double q) {
                        return std::pow(q, n) * std::lgamma(a + b * q);
                    },
                    q1, q2, 1e-11);
                c.record(fmt("n=%d a=%.9g b=%.9g q1=%.9g q2=%.9g", n, a, b, q1,
                             q2),
                         F(q2) - F(q1), i);
            }
        });

    add("prim-logsine-derivative",
        "d/dq of the log-sine moment antiderivative is q^n log sin(pi q)",
        CheckKind::invariant, {"primitives"}, 1e-6, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int n = c.uniform_int(0, 4);
                const double q = c.uniform(0.1, 0.9);
                const double lhs = finite_diff(
                    [n](double x) { return prim_logsine_moment(n, x).value; }, q,
                    1, 1e-3);
                c.record(fmt("n=%d q=%.9g", n, q), lhs,
                         std::pow(q, n) * std::log(std::sin(pi * q)));
            }
        });

    add("prim-logsine-moment-ftc",
        "the q^n log sin(pi q) antiderivative differences equal the integral",
        CheckKind::primitive_difference, {"primitives"}, 1e-9, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int n = c.uniform_int(0, 4);
                double q1, q2;
                draw_interval(c, 0.05, 0.95, q1, q2);
                const double i = quad(
                    [n](double q) {
                        return std::pow(q, n) * std::log(std::sin(pi * q));
                    },
                    q1, q2, 1e-11);
                c.record(fmt("n=%d q1=%.9g q2=%.9g", n, q1, q2),
                         prim_logsine_moment(n, q2).value -
                             prim_logsine_moment(n, q1).value,
                         i);
            }
        });

    add("prim-negapolygamma-moment-ftc",
        "the q^n psi^(-m)(a+bq) antiderivative differences equal the integral",
        CheckKind::primitive_difference, {"primitives"}, 1e-9, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                PrimitiveParams p;
                p.n = c.uniform_int(0, 3);
                p.m = c.uniform_int(1, 3);
                p.a = c.uniform(0.3, 1.0);
                p.b = c.uniform(0.4, 1.4);
                double q1, q2;
                draw_interval(c, 0.1, 1.8, q1, q2);
                auto F = [&](double q) {
                    PrimitiveParams pp = p;
                    pp.q = q;
                    return prim_negapolygamma_moment(pp).value;
                };
                const int n = p.n, m = p.m;
                const double a = p.a, b = p.b;
                const double i = quad(
                    [n, m, a, b](double q) {
                        return std::pow(q, n) * negapolygamma(m, a + b * q).value;
                    },
                    q1, q2, 1e-11);
                c.record(fmt("n=%d m=%d a=%.9g b=%.9g q1=%.9g q2=%.9g", n, m, a,
                             b, q1, q2),
                         F(q2) - F(q1), i);
            }
        });

    add("prim-polygamma-moment-ftc",
        "the q^n psi^(m)(a+bq) antiderivative differences equal the integral",
        CheckKind::primitive_difference, {"primitives"}, 1e-9, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                PrimitiveParams p;
                p.n = c.uniform_int(0, 3);
                p.m = c.uniform_int(1, 4);
                p.a = c.uniform(0.4, 1.0);
                p.b = c.uniform(0.4, 1.2);
                double q1, q2;
                draw_interval(c, 0.2, 1.8, q1, q2);
                auto F = [&](double q) {
                    PrimitiveParams pp = p;
                    pp.q = q;
                    return prim_polygamma_moment(pp).value;
                };
                const int n = p.n, m = p.m;
                const double a = p.a, b = p.b;
                const double i = quad(
                    [n, m, a, b](double q) {
                        return std::pow(q, n) * polygamma(m, a + b * q).value;
                    },
                    q1, q2, 1e-11);
                c.record(fmt("n=%d m=%d a=%.9g b=%.9g q1=%.9g q2=%.9g", n, m, a,
                             b, q1, q2),
                         F(q2) - F(q1), i);
            }
        });

    add("prim-selfproduct-forms",
        "plain and centered regroupings of the zeta self-product antiderivative agree",
        CheckKind::cross_path, {"primitives"}, 1e-12, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int n = 2 * c.uniform_int(0, 2) + 1;  // 1, 3, 5
                const double z = c.draw_z_low();
                const double q = c.uniform(0.3, 2.0);
                c.record(fmt("n=%d z=%.9g q=%.9g", n, z, q),
                         prim_zeta_selfproduct_odd(n, z, q).value,
                         prim_zeta_selfproduct_odd_centered(n, z, q).value);
            }
        });

    add("prim-selfproduct-ftc",
        "the zeta(z-n,q) zeta(z,q) antiderivative differences equal the integral",
        CheckKind::primitive_difference, {"primitives"}, 1e-9, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int n = 2 * c.uniform_int(0, 1) + 1;  // 1, 3
                const double z = c.uniform(-3.0, 0.5);
                double q1, q2;
                draw_interval(c, 0.4, 2.0, q1, q2);
                const double i = quad(
                    [n, z](double q) {
                        return hurwitz_zeta(z - n, q).value *
                               hurwitz_zeta(z, q).value;
                    },
                    q1, q2, 1e-11);
                c.record(fmt("n=%d z=%.9g q1=%.9g q2=%.9g", n, z, q1, q2),
                         prim_zeta_selfproduct_odd(n, z, q2).value -
                             prim_zeta_selfproduct_odd(n, z, q1).value,
                         i);
            }
        });

    add("prim-zeta-bernoulli-weight-ftc",
        "the B_m(c+dq) zeta(z, a+bq) antiderivative differences equal the integral",
        CheckKind::primitive_difference, {"primitives"}, 1e-9, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                PrimitiveParams p;
                p.m = c.uniform_int(1, 4);
                p.z = c.draw_z_low();
                p.a = c.uniform(0.3, 1.0);
                p.b = c.uniform(0.4, 1.2);
                p.c = c.uniform(-0.5, 0.5);
                p.d = c.uniform(0.5, 1.5);
                double q1, q2;
                draw_interval(c, 0.1, 1.6, q1, q2);
                auto F = [&](double q) {
                    PrimitiveParams pp = p;
                    pp.q = q;
                    return prim_zeta_bernoulli_weight(pp).value;
                };
                const PrimitiveParams pc = p;
                const double i = quad(
                    [pc](double q) {
                        return bernoulli_poly(pc.m, pc.c + pc.d * q) *
                               hurwitz_zeta(pc.z, pc.a + pc.b * q).value;
                    },
                    q1, q2, 1e-11);
                c.record(fmt("m=%d z=%.9g a=%.9g b=%.9g c=%.9g d=%.9g q1=%.9g q2=%.9g",
                             p.m, p.z, p.a, p.b, p.c, p.d, q1, q2),
                         F(q2) - F(q1), i);
            }
        });

    add("prim-zeta-moment-ftc",
        "the q^n zeta(z, a+bq) antiderivative differences equal the integral",
        CheckKind::primitive_difference, {"primitives"}, 1e-9, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                PrimitiveParams p;
                p.n = c.uniform_int(0, 4);
                p.z = c.draw_z_low();
                p.a = c.uniform(0.3, 1.0);
                p.b = c.uniform(0.4, 1.2);
                double q1, q2;
                draw_interval(c, 0.1, 1.8, q1, q2);
                auto F = [&](double q) {
                    PrimitiveParams pp = p;
                    pp.q = q;
                    return prim_zeta_moment(pp).value;
                };
                const int n = p.n;
                const double z = p.z, a = p.a, b = p.b;
                const double i = quad(
                    [n, z, a, b](double q) {
                        return std::pow(q, n) * hurwitz_zeta(z, a + b * q).value;
                    },
                    q1, q2, 1e-11);
                c.record(fmt("n=%d z=%.9g a=%.9g b=%.9g q1=%.9g q2=%.9g", n, z,
                             a, b, q1, q2),
                         F(q2) - F(q1), i);
            }
        });

    // ---- definite ----------------------------------------------------------

    add("def-loggamma-sq",
        "the closed form for the squared log Gamma integral matches quadrature",
        CheckKind::definite_value, {"definite"}, 1e-9, [](Ctx& c) {
            const double i = quad(
                [](double q) {
                    const double l = std::lgamma(q);
                    return l * l;
                },
                0.0, 1.0, 1e-10, true, false);
            c.record("interval=[0,1]", def_loggamma_sq().value, i);
        });

    add("def-logsine-moment",
        "closed forms for the full-interval log-sine moments match quadrature",
        CheckKind::definite_value, {"definite"}, 1e-9, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int n = c.uniform_int(0, 6);
                const double i = quad(
                    [n](double q) {
                        return std::pow(q, n) * std::log(std::sin(pi * q));
                    },
                    0.0, 1.0, 1e-11, true, true);
                c.record(fmt("n=%d", n), def_logsine_moment(n).value, i);
            }
        });

    add("def-logsine-moment-half",
        "closed forms for the half-interval log-sine moments match quadrature",
        CheckKind::definite_value, {"definite"}, 1e-9, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int n = c.uniform_int(0, 5);
                const double i = quad(
                    [n](double q) {
                        return std::pow(q, n) * std::log(std::sin(pi * q));
                    },
                    0.0, 0.5, 1e-11, true, false);
                c.record(fmt("n=%d", n), def_logsine_moment_half(n).value, i);
            }
        });

    add("def-negapoly-product",
        "negapolygamma product integrals match their zeta-derivative closed form",
        CheckKind::definite_value, {"definite"}, 1e-9, [](Ctx& c) {
            const int ks[5][2] = {{1, 1}, {2, 2}, {1, 3}, {3, 3}, {2, 4}};
            for (auto& kk : ks) {
                const int k = kk[0], k2 = kk[1];
                const bool sing = (k == 1 || k2 == 1);
                const double i = quad(
                    [k, k2](double q) {
                        return negapolygamma(k, q).value *
                               negapolygamma(k2, q).value;
                    },
                    0.0, 1.0, 1e-11, sing, sing);
                c.record(fmt("k=%d k2=%d", k, k2),
                         def_negapoly_product(k, k2).value, i);
            }
        });

    add("def-negapoly-product-parity",
        "odd index gap makes the negapolygamma product integral vanish exactly",
        CheckKind::invariant, {"definite"}, 1e-15, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int k = c.uniform_int(1, 6);
                const int k2 = k + 2 * c.uniform_int(0, 2) + 1;  // odd gap
                c.record(fmt("k=%d k2=%d", k, k2),
                         def_negapoly_product(k, k2).value, 0.0);
            }
        });

    add("def-zeta-moment",
        "closed forms for q^n zeta(z, a+bq) over [0,1] match quadrature",
        CheckKind::definite_value, {"definite"}, 1e-9, [](Ctx& c) {
            for (int d = 0; d < c.draws; ++d) {
                const int n = c.uniform_int(0, 4);
                const double z = c.draw_z_low();
                const double a = c.uniform(0.3, 1.5);
                const double b = c.uniform(0.2, 1.2);
                const double i = quad(
                    [n, z, a, b](double q) {
                        return std::pow(q, n) * hurwitz_zeta(z, a + b * q).value;
                    },
                    0.0, 1.0, 1e-11);
                c.record(fmt("n=%d z=%.9g a=%.9g b=%.9g", n, z, a, b),
                         def_zeta_moment(n, z, a, b).value, i);
            }
        });

    add("def-zeta-moment-unit",
        "unit-interval zeta moments (vanishing boundary case) match quadrature",
        CheckKind::definite_value, {"definite"}, 1e-9, [](Ctx& c) {
            c.record("n=0 z=-1.5",
                     def_zeta_moment_unit(0, -1.5).value,
                     quad([](double q) { return hurwitz_zeta(-1.5, q).value; },
                          0.0, 1.0, 1e-11, true, false));
            for (int d = 0; d < c.draws; ++d) {
                const int n = c.uniform_int(1, 4);
                const double z = c.draw_z_low();
                const double i = quad(
                    [n, z](double q) {
                        return std::pow(q, n) * hurwitz_zeta(z, q).value;
                    },
                    0.0, 1.0, 1e-11, true, false);
                c.record(fmt("n=%d z=%.9g", n, z),
                         def_zeta_moment_unit(n, z).value, i);
            }
        });

    add("def-zeta-product",
        "zeta product integrals over [0,1] match the reflection closed form",
        CheckKind::definite_value, {"definite"}, 1e-9, [](Ctx& c) {
            c.record("z=0 z2=0", def_zeta_product(0.0, 0.0).value, 1.0 / 12.0);
            for (int d = 0; d < c.draws; ++d) {
                const double z = c.uniform(-2.5, -0.1);
                const double z2 = c.uniform(-2.5, -0.1);
                const double i = quad(
                    [z, z2](double q) {
                        return hurwitz_zeta(z, q).value *
                               hurwitz_zeta(z2, q).value;
                    },
                    0.0, 1.0, 1e-11, true, false);
                c.record(fmt("z=%.9g z2=%.9g", z, z2),
                         def_zeta_product(z, z2).value, i);
            }
        });

    // ---- constants ---------------------------------------------------------

    add("const-catalan-clausen", "Cl_2(pi/2) equals the pinned Catalan constant",
        CheckKind::constant_value, {"constants"}, 1e-10, [](Ctx& c) {
            SeriesControl ctrl{1e-11, 1000000};
            c.record("x=pi/2", clausen(2, 0.5 * pi, ctrl).value, catalan);
        });

    add("const-euler-digamma", "psi(1) equals -gamma",
        CheckKind::constant_value, {"constants"}, 1e-12, [](Ctx& c) {
            c.record("q=1", digamma(1.0).value, -euler_gamma);
        });

    add("const-glaisher-values",
        "glaisher_log hits its pinned values at r = 0, 1 and the functional-equation value at 2",
        CheckKind::constant_value, {"constants"}, 1e-11, [](Ctx& c) {
            c.record("r=0", glaisher_log(0), -log_sqrt_2pi);
            c.record("r=1", glaisher_log(1), zeta_prime_minus1 - 1.0 / 12.0);
            c.record("r=2", glaisher_log(2), zeta_prime_neg_even(1));
        });

    add("const-log-sqrt-2pi", "d/dz zeta(z,1)|_0 = -log sqrt(2 pi)",
        CheckKind::constant_value, {"constants"}, 1e-12, [](Ctx& c) {
            c.record("z=0", hurwitz_zeta_dz(0.0, 1.0).value, -log_sqrt_2pi);
        });

    add("const-zeta-prime-minus1",
        "zeta'(-1) from the kernel matches the pinned constant and its zeta'(2) reconstruction",
        CheckKind::constant_value, {"constants"}, 1e-12, [](Ctx& c) {
            const double direct = hurwitz_zeta_dz(-1.0, 1.0).value;
            c.record("pinned", direct, zeta_prime_minus1);
            const double recon = hurwitz_zeta_dz(2.0, 1.0).value / (2.0 * pi * pi) -
                                 (2.0 * log_sqrt_2pi + euler_gamma - 1.0) / 12.0;
            c.record("reconstructed", direct, recon);
        });

    add("const-zeta-values",
        "Riemann values: zeta(2) = pi^2/6, zeta(4) = pi^4/90, zeta(-1) = -1/12",
        CheckKind::constant_value, {"constants"}, 1e-12, [](Ctx& c) {
            c.record("z=2", riemann_zeta(2.0).value, pi * pi / 6.0);
            c.record("z=4", riemann_zeta(4.0).value, pi * pi * pi * pi / 90.0);
            c.record("z=-1", zeta_neg_int(1), -1.0 / 12.0);
        });

    return reg;
}

const std::vector<Identity>& registry() {
    static const std::vector<Identity> reg = [] {
        auto r = build_registry();
        std::sort(r.begin(), r.end(), [](const Identity& a, const Identity& b) {
            return a.info.id < b.info.id;
        });
        return r;
    }();
    return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "all", "core", "ak", "negapoly", "primitives", "definite", "constants"};
    return names;
}

const std::vector<IdentityInfo>& list_identities() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> v;
        for (const auto& ident : registry()) v.push_back(ident.info);
        return v;
    }();
    return infos;
}

VerifyReport run_suite(const VerifyOptions& opt) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), opt.suite) == names.end())
        throw domain_error("run_suite: unknown suite '" + opt.suite + "'");
    if (opt.draws < 1) throw domain_error("run_suite: draws must be >= 1");

    VerifyReport rep;
    rep.suite = opt.suite;
    rep.seed = opt.seed;
    rep.draws = opt.draws;
    rep.tol_override = opt.tol_override;

    for (const auto& ident : registry()) {
        const auto& su = ident.info.suites;
        if (opt.suite != "all" &&
            std::find(su.begin(), su.end(), opt.suite) == su.end())
            continue;
        Ctx ctx{std::mt19937_64(opt.seed ^ fnv1a(ident.info.id)), opt.draws,
                opt.tol_override.value_or(ident.info.default_tol), &ident.info,
                &rep.checks};
        try {
            ident.run(ctx);
        } catch (const std::exception& e) {
            ctx.record_error(e.what());
        }
    }

    rep.total = static_cast<int>(rep.checks.size());
    for (const auto& c : rep.checks) {
        if (c.passed) ++rep.passed;
        if (std::isfinite(c.rel_residual) &&
            c.rel_residual > rep.worst_rel_residual) {
            rep.worst_rel_residual = c.rel_residual;
            rep.worst_id = c.id;
        }
    }
    return rep;
}

VerifyReport run_suite(const std::string& suite, std::uint64_t seed,
                       std::optional<double> tol_override) {
    VerifyOptions opt;
    opt.suite = suite;
    opt.seed = seed;
    opt.tol_override = tol_override;
    return run_suite(opt);
}

std::string check_kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::invariant: return "invariant";
        case CheckKind::cross_path: return "cross_path";
        case CheckKind::primitive_difference: return "primitive_difference";
        case CheckKind::definite_value: return "definite_value";
        default: return "constant_value";
    }
}

std::string report_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["draws"] = r.draws;
    nlohmann::ordered_json tols = nlohmann::ordered_json::object();
    for (const auto& info : list_identities()) {
        if (r.suite != "all" &&
            std::find(info.suites.begin(), info.suites.end(), r.suite) ==
                info.suites.end())
            continue;
        tols[info.id] = r.tol_override.value_or(info.default_tol);
    }
    j["tolerances"] = tols;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["kind"] = check_kind_name(c.kind);
        jc["grid_point"] = c.grid_point;
        jc["lhs"] = c.lhs;
        jc["rhs"] = c.rhs;
        jc["abs_residual"] = c.abs_residual;
        jc["rel_residual"] = c.rel_residual;
        jc["tolerance"] = c.tolerance;
        jc["passed"] = c.passed;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    j["summary"] = {{"total", r.total},
                    {"passed", r.passed},
                    {"failed", r.total - r.passed},
                    {"worst_rel_residual", r.worst_rel_residual},
                    {"worst_id", r.worst_id}};
    return j.dump(2);
}

}  // namespace hzk
