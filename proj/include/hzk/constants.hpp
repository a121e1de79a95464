#pragma once

namespace hzk {

// Frozen reference constants, 25 significant digits each.
inline constexpr double pi = 3.141592653589793238462643;
inline constexpr double ln2 = 0.6931471805599453094172321;
inline constexpr double ln_2pi = 1.837877066409345483560659;
inline constexpr double euler_gamma = 0.5772156649015328606065121;
inline constexpr double catalan = 0.9159655941772190150546035;

// log sqrt(2*pi) = -zeta'(0)
inline constexpr double log_sqrt_2pi = 0.9189385332046727417803297;

// zeta'(-1) = 1/12 - log A (A the Glaisher-Kinkelin constant)
inline constexpr double zeta_prime_minus1 = -0.1654211437004509292139197;

}  // namespace hzk
