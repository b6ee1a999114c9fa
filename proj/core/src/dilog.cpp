#include "tilink/dilog.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "tilink/errors.hpp"

namespace tilink {
namespace {

using C = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kPi2Over6 = kPi * kPi / 6.0;

// Maclaurin series; terms shrink by at least half per step for |z| <= 1/2.
C dilog_maclaurin(C z) {
  C term = z;
  C sum = z;
  for (int k = 2; k < 64; ++k) {
    term *= z;
    C add = term / static_cast<double>(k * k);
    sum += add;
    if (std::abs(add) < 1e-18) break;
  }
  return sum;
}

// Expansion in u = -log(1-z):
//   Li2(z) = u - u^2/4 + sum_{k>=1} B_{2k} u^{2k+1}/(2k+1)!
// with B_{2k} the Bernoulli numbers.  On the region it serves (unit disk
// minus the Maclaurin disk, real part <= 1/2) |u| stays below 1.32, so
// sixteen Bernoulli terms put the truncation error under 1e-18.
C dilog_log_series(C z) {
  static const std::array<double, 16> coeff = [] {
    constexpr long long num[16] = {1,       -1,         1,
                                   -1,      5,          -691,
                                   7,       -3617,      43867,
                                   -174611, 854513,     -236364091LL,
                                   8553103, -23749461029LL,
                                   8615841276005LL, -7709321041217LL};
    constexpr long long den[16] = {6,   30,  42, 30,  66,  2730, 6,    510,
                                   798, 330, 138, 2730, 6,  870, 14322, 510};
    std::array<double, 16> c{};
    long double fact = 1.0L;  // grows into (2k+1)!
    for (int k = 1; k <= 16; ++k) {
      fact *= static_cast<long double>(2 * k) * (2 * k + 1);
      c[k - 1] = static_cast<double>(
          static_cast<long double>(num[k - 1]) / den[k - 1] / fact);
    }
    return c;
  }();

  C u = -std::log(1.0 - z);
  C u2 = u * u;
  C sum = u - 0.25 * u2;
  C upow = u;
  for (int k = 0; k < 16; ++k) {
    upow *= u2;
    C add = coeff[k] * upow;
    sum += add;
    if (std::abs(add) < 1e-18) break;
  }
  return sum;
}

C dilog_impl(C z) {
  if (z == C(0.0, 0.0)) return C(0.0, 0.0);
  if (z == C(1.0, 0.0)) return C(kPi2Over6, 0.0);
  double r = std::abs(z);
  if (r > 1.0) {
    // Inversion: Li2(z) = -pi^2/6 - log(-z)^2/2 - Li2(1/z).
    C lz = std::log(-z);
    return -kPi2Over6 - 0.5 * lz * lz - dilog_impl(1.0 / z);
  }
  if (z.real() > 0.5) {
    // Reflection: Li2(z) = pi^2/6 - log(z)log(1-z) - Li2(1-z).
    return C(kPi2Over6, 0.0) - std::log(z) * std::log(1.0 - z) -
           dilog_impl(1.0 - z);
  }
  if (r <= 0.5) return dilog_maclaurin(z);
  return dilog_log_series(z);
}

}  // namespace

std::complex<double> dilog(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("dilog: argument must be finite");
  return dilog_impl(z);
}

double lobachevsky(double theta) {
  if (!std::isfinite(theta))
    throw DomainError("lobachevsky: argument must be finite");
  // Reduce modulo pi into [-pi/2, pi/2]; the function is pi-periodic and
  // reducing first keeps accuracy uniform in the size of theta.
  double t = theta - kPi * std::round(theta / kPi);
  if (t == 0.0) return 0.0;
  return 0.5 * std::imag(dilog_impl(std::polar(1.0, 2.0 * t)));
}

double v_tet() {
  static const double v = 3.0 * lobachevsky(kPi / 3.0);
  return v;
}

double v_oct() {
  static const double v = 8.0 * lobachevsky(kPi / 4.0);
  return v;
}

}  // namespace tilink
