#include "hzk/bernoulli.hpp"

#include "hzk/detail/bernoulli_exact.hpp"
#include "hzk/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace hzk {

namespace detail {
namespace {

std::array<cpp_rational, bernoulli_max_index + 1> build_bernoulli() {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0, i.e. B_m = -(1/(m+1)) sum_{j<m} C(m+1,j) B_j.
    std::array<cpp_rational, bernoulli_max_index + 1> b{};
    b[0] = 1;
    for (int m = 1; m <= bernoulli_max_index; ++m) {
        cpp_rational acc = 0;
        cpp_int binom = 1;  // C(m+1, j), advanced in step with j
        for (int j = 0; j < m; ++j) {
            acc += cpp_rational(binom) * b[j];
            binom = binom * (m + 1 - j) / (j + 1);  // multiply first: stays integral
        }
        b[m] = -acc / (m + 1);
    }
    return b;
}

}  // namespace

const cpp_rational& bernoulli_rational(int k) {
    static const auto table = build_bernoulli();
    return table.at(static_cast<std::size_t>(k));
}

}  // namespace detail

namespace {

void check_index(int k, const char* who) {
    if (k < 0 || k > detail::bernoulli_max_index)
        throw domain_error(std::string(who) + ": index must be in [0, 60]");
}

// Row m holds C(m,j) B_j for j = 0..m (coefficients of x^{m-j}), rounded once.
const std::vector<std::vector<double>>& poly_rows() {
    static const std::vector<std::vector<double>> rows = [] {
        std::vector<std::vector<double>> r(detail::bernoulli_max_index + 1);
        for (int m = 0; m <= detail::bernoulli_max_index; ++m) {
            r[m].resize(m + 1);
            detail::cpp_int binom = 1;
            for (int j = 0; j <= m; ++j) {
                detail::cpp_rational c =
                    detail::cpp_rational(binom) * detail::bernoulli_rational(j);
                r[m][j] = static_cast<double>(detail::rational_to<long double>(c));
                binom = binom * (m - j) / (j + 1);
            }
        }
        return r;
    }();
    return rows;
}

}  // namespace

double bernoulli_number(int k) {
    check_index(k, "bernoulli_number");
    return static_cast<double>(
        detail::rational_to<long double>(detail::bernoulli_rational(k)));
}

double bernoulli_poly(int m, double x) {
    check_index(m, "bernoulli_poly");
    const auto& c = poly_rows()[m];
    long double r = 0;
    for (int j = 0; j <= m; ++j) r = r * x + c[j];
    return static_cast<double>(r);
}

double harmonic(int n) {
    if (n < 0) throw domain_error("harmonic: n must be >= 0");
    long double s = 0;
    for (int i = 1; i <= n; ++i) s += 1.0L / i;
    return static_cast<double>(s);
}

double binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    detail::cpp_int r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return static_cast<double>(detail::integer_to<long double>(r));
}

double factorial(int n) {
    if (n < 0 || n > 170) throw domain_error("factorial: n must be in [0, 170]");
    static const std::array<double, 171> table = [] {
        std::array<double, 171> t{};
        long double f = 1;
        t[0] = 1.0;
        for (int i = 1; i <= 170; ++i) {
            f *= i;
            t[i] = static_cast<double>(f);
        }
        return t;
    }();
    return table[static_cast<std::size_t>(n)];
}

double bernoulli_alternating_sum(int p, double a, double b, double q) {
    if (p < 0 || p > 30) throw domain_error("bernoulli_alternating_sum: p must be in [0, 30]");
    if (b == 0.0) throw domain_error("bernoulli_alternating_sum: b must be nonzero");
    long double acc = 0;
    double sign = 1.0;
    for (int r = 0; r <= p; ++r) {
        acc += sign * binomial(p + 1, r + 1) * std::pow(q, p - r) *
               bernoulli_poly(r + 1, a + b * q) / std::pow(b, r + 1);
        sign = -sign;
    }
    return static_cast<double>(acc);
}

}  // namespace hzk
