#include "hzk/quadrature.hpp"

#include "hzk/constants.hpp"
#include "hzk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <vector>

namespace hzk {
namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 nodes/weights).
const double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
const double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
const double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

long max_evals() {
    if (const char* s = std::getenv("HZK_MAX_EVALS")) {
        char* end = nullptr;
        const long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 200000;
}

struct Budget {
    long used = 0;
    long cap;
    const std::function<double(double)>* f;
    double call(double x) {
        if (used >= cap)
            throw convergence_error("integrate: evaluation budget exhausted");
        ++used;
        const double v = (*f)(x);
        if (!std::isfinite(v))
            throw domain_error("integrate: integrand returned a non-finite value");
        return v;
    }
};

struct Panel {
    double lo, hi, value, err;
    bool operator<(const Panel& o) const { return err < o.err; }  // largest first
};

Panel gk15(Budget& b, double lo, double hi) {
    const double h = 0.5 * (hi - lo);
    const double mid = 0.5 * (lo + hi);
    double fv[15];
    const double fc = b.call(mid);
    double resg = wg[3] * fc;
    double resk = wgk[7] * fc;
    fv[7] = fc;
    for (int i = 0; i < 7; ++i) {
        const double f1 = b.call(mid - h * xgk[i]);
        const double f2 = b.call(mid + h * xgk[i]);
        fv[i] = f1;
        fv[14 - i] = f2;
        resk += wgk[i] * (f1 + f2);
        if (i % 2 == 1) resg += wg[i / 2] * (f1 + f2);  // xgk[1],[3],[5] are Gauss nodes
    }
    const double reskh = resk * 0.5;
    double resasc = wgk[7] * std::fabs(fc - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += wgk[i] * (std::fabs(fv[i] - reskh) + std::fabs(fv[14 - i] - reskh));
    resasc *= std::fabs(h);
    double err = std::fabs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {lo, hi, resk * h, err};
}

QuadratureResult adaptive_gk(const QuadratureProblem& p, Budget& b) {
    std::priority_queue<Panel> heap;
    Panel root = gk15(b, p.lo, p.hi);
    double total = root.value, toterr = root.err;
    heap.push(root);
    while (toterr > p.tol) {
        if (heap.empty()) break;
        Panel worst = heap.top();
        if (worst.err <= 0.0) break;  // cannot resolve further
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi)
            throw convergence_error("integrate: interval too small to bisect",
                                    total, toterr);
        Panel a = gk15(b, worst.lo, mid);
        Panel c = gk15(b, mid, worst.hi);
        total += a.value + c.value - worst.value;
        toterr += a.err + c.err - worst.err;
        heap.push(a);
        heap.push(c);
    }
    return {total, std::max(toterr, 0.0), b.used};
}

// tanh-sinh: x = mid + r tanh(w), w = (pi/2) sinh u, trapezoid in u with
// level halving. Nodes are placed through the endpoint offset
// delta(u) = 1 - tanh(w) = 2 / (e^{2w} + 1), so samples approach lo and hi
// without ever reaching them: right for integrable endpoint singularities.
QuadratureResult tanh_sinh(const QuadratureProblem& p, Budget& b) {
    const double r = 0.5 * (p.hi - p.lo);

    // f(hi - r delta) weight + f(lo + r delta) weight for +-u (center once).
    // Each side is dropped independently once its node rounds into the
    // endpoint: the spacing of doubles near the two endpoints can differ by
    // hundreds of orders of magnitude (denormals near 0), and a singular side
    // must keep collecting tail terms after the smooth side has collapsed.
    // Returns false once both sides are gone or the weight has underflowed.
    auto term_pair = [&](double u, double& t) -> bool {
        const double w = 0.5 * pi * std::sinh(u);
        const double delta = 2.0 / (std::exp(2.0 * w) + 1.0);
        const double chw = std::cosh(w);
        const double weight = 0.5 * pi * std::cosh(u) / (chw * chw);
        if (!(weight > 0.0)) return false;
        const double x_hi = p.hi - r * delta;
        const double x_lo = p.lo + r * delta;
        bool alive = false;
        t = 0.0;
        if (x_hi < p.hi) {
            t += b.call(x_hi) * weight;
            alive = true;
        }
        if (u > 0.0 && x_lo > p.lo) {
            t += b.call(x_lo) * weight;
            alive = true;
        }
        return alive && t == t;
    };

    double h = 1.0;
    double integral;  // running trapezoid value, in u units times r
    {
        double t0;
        term_pair(0.0, t0);
        double s = t0;
        for (int n = 1;; ++n) {
            double t;
            if (!term_pair(n * h, t)) break;
            s += t;
            if (n * h > 4.0 && std::fabs(t) <= 1e-18 * std::fabs(s)) break;
        }
        integral = h * s;
    }
    double diff = std::fabs(integral);
    for (int level = 1; level <= 10; ++level) {
        h *= 0.5;
        double s = 0.0;
        for (int n = 1;; n += 2) {  // odd multiples: the nodes new to this level
            double t;
            if (!term_pair(n * h, t)) break;
            s += t;
            if (n * h > 4.0 && std::fabs(t) <= 1e-18 * std::fabs(s)) break;
        }
        const double prev = integral;
        integral = 0.5 * integral + h * s;
        diff = std::fabs(integral - prev) * std::fabs(r);
        if (level >= 2 && diff <= std::max(p.tol, 4e-16 * std::fabs(integral * r)))
            return {integral * r, std::max(diff, 4e-16 * std::fabs(integral * r)),
                    b.used};
    }
    throw convergence_error("integrate: tanh-sinh did not reach tolerance",
                            integral * r, diff);
}

}  // namespace

QuadratureResult integrate(const QuadratureProblem& p) {
    if (!p.integrand) throw domain_error("integrate: missing integrand");
    if (!(p.tol >= 1e-14))
        throw domain_error("integrate: tol must be >= 1e-14");
    if (!(p.lo < p.hi))
        throw domain_error("integrate: requires lo < hi");
    Budget b{0, max_evals(), &p.integrand};
    if (p.singular_lo || p.singular_hi) return tanh_sinh(p, b);
    return adaptive_gk(p, b);
}

double finite_diff(const std::function<double(double)>& f, double q,
                   int order, double h) {
    if (!(h > 0.0)) throw domain_error("finite_diff: h must be positive");
    auto d = [&](double step) -> double {
        if (order == 1) return (f(q + step) - f(q - step)) / (2.0 * step);
        return (f(q + step) - 2.0 * f(q) + f(q - step)) / (step * step);
    };
    if (order != 1 && order != 2)
        throw domain_error("finite_diff: order must be 1 or 2");
    const double d1 = d(h);
    const double d2 = d(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;  // cancels the h^2 term of the central stencil
}

}  // namespace hzk
