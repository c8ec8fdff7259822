#include "casimir/polylog.hpp"

#include <array>
#include <cmath>

#include "casimir/error.hpp"

namespace casimir::lifshitz {

namespace {

constexpr double kZeta2 = 1.6449340668482264364724151666460251892189499012068;

// zeta(3 - k) for k = 3, 4, ..., 22. zeta(-2m) = 0; zeta(1 - 2m) = -B_2m / 2m.
constexpr std::array<double, 20> kZetaNegative = {
    -0.5,                  // zeta(0)
    -1.0 / 12.0,           // zeta(-1)
    0.0,                   // zeta(-2)
    1.0 / 120.0,           // zeta(-3)
    0.0,
    -1.0 / 252.0,          // zeta(-5)
    0.0,
    1.0 / 240.0,           // zeta(-7)
    0.0,
    -1.0 / 132.0,          // zeta(-9)
    0.0,
    691.0 / 32760.0,       // zeta(-11)
    0.0,
    -1.0 / 12.0,           // zeta(-13)
    0.0,
    3617.0 / 8160.0,       // zeta(-15)
    0.0,
    -43867.0 / 14364.0,    // zeta(-17)
    0.0,
    174611.0 / 6600.0,     // zeta(-19)
};

double direct_series(double x) {
  double sum = 0.0;
  double power = x;
  for (int k = 1; k < 200 && power > 1e-18 * k * k * k; ++k) {
    sum += power / (static_cast<double>(k) * k * k);
    power *= x;
  }
  return sum;
}

// Li_3(e^mu) = zeta(3) + zeta(2) mu + (3/2 - ln(-mu)) mu^2 / 2 + sum_{k>=3} zeta(3-k) mu^k / k!
double log_series(double x) {
  const double mu = std::log(x);
  if (mu == 0.0) return kZeta3;
  double sum = kZeta3 + kZeta2 * mu + (1.5 - std::log(-mu)) * mu * mu / 2.0;
  double term = mu * mu / 2.0;  // mu^k / k!
  for (std::size_t i = 0; i < kZetaNegative.size(); ++i) {
    term *= mu / static_cast<double>(i + 3);
    sum += kZetaNegative[i] * term;
  }
  return sum;
}

}  // namespace

double polylog3(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("polylog3 argument must lie in [0, 1]");
  if (x <= 0.5) return direct_series(x);
  return log_series(x);
}

}  // namespace casimir::lifshitz
