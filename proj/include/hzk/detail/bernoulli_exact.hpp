#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iterator>
#include <vector>

namespace hzk::detail {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline constexpr int bernoulli_max_index = 60;

// Exact B_k from the defining recurrence; table built once, then read-only.
const cpp_rational& bernoulli_rational(int k);

// Round an exact integer into R (double / long double / __float128) through
// 64-bit limbs, most significant first. Each limb conversion is exact; only
// the final accumulations round.
template <class R>
R integer_to(const cpp_int& v) {
    if (v == 0) return R(0);
    cpp_int a = v < 0 ? cpp_int(-v) : v;
    std::vector<std::uint64_t> limbs;
    export_bits(a, std::back_inserter(limbs), 64);
    R x = 0;
    const R two64 = R(18446744073709551616.0L);  // 2^64, exactly representable
    for (std::uint64_t w : limbs) x = x * two64 + R(w);
    return v < 0 ? -x : x;
}

template <class R>
R rational_to(const cpp_rational& r) {
    return integer_to<R>(numerator(r)) / integer_to<R>(denominator(r));
}

}  // namespace hzk::detail
