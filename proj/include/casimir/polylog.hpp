#pragma once

namespace casimir::lifshitz {

/// Apery's constant, zeta(3).
inline constexpr double kZeta3 = 1.2020569031595942853997381615114499907649862923405;

/// Li_3(x) = sum_{k>=1} x^k / k^3 for 0 <= x <= 1, to ~1e-15 absolute.
///
/// Direct series for x <= 1/2. Above that the series in mu = ln x around the
/// branch point is used (|mu| <= ln 2), which converges in ~20 terms and is
/// exact at x = 1. Throws DomainError outside [0, 1].
double polylog3(double x);

}  // namespace casimir::lifshitz
