#pragma once

// Test-only oracles, independent of the library's evaluation paths.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using CL = std::complex<long double>;

// Euler-Maclaurin zeta in long double with a fixed large cutoff; independent
// parameterization from the library path (which adapts N and runs in double).
inline CL zeta_em_ld(CL s, int n = 400, int m = 30) {
  static const long double bern[] = {
      0.0833333333333333333L,   -0.00138888888888888889L,  0.0000330687830687830688L,
      -8.2671957671957672e-7L,  2.0876756987868099e-8L,    -5.28419013868749318e-10L,
      1.33825365306846788e-11L, -3.38968029632258287e-13L, 8.58606205627784456e-15L,
      -2.17486869855806187e-16L, 5.50900282836022952e-18L, -1.39544646858125233e-19L,
      3.53470703962946747e-21L, -8.95351742703754685e-23L, 2.26795245233768306e-24L,
      -5.74479066887220245e-26L, 1.4551724756148649e-27L,  -3.68599494066531018e-29L,
      9.33673425709504467e-31L, -2.36502241570062993e-32L, 5.9906717624821343e-34L,
      -1.51745488446829026e-35L, 3.84375812545418823e-37L, -9.73635307264669104e-39L,
      2.46624704420068096e-40L, -6.24707674182074369e-42L, 1.58240302446449143e-43L,
      -4.00827368594893597e-45L, 1.01530758555695563e-46L, -2.57180415824187175e-48L};
  CL sum = 0.0L;
  for (int j = 1; j <= n; ++j) sum += std::exp(-s * std::log(static_cast<long double>(j)));
  long double nn = n;
  sum += std::exp((1.0L - s) * std::log(nn)) / (s - 1.0L);
  sum -= 0.5L * std::exp(-s * std::log(nn));
  CL rising = s;
  CL npow = std::exp((1.0L - s) * std::log(nn));
  for (int k = 1; k <= m; ++k) {
    npow /= nn * nn;
    sum += bern[k - 1] * rising * npow;
    rising *= (s + static_cast<long double>(2 * k - 1)) * (s + static_cast<long double>(2 * k));
  }
  return sum;
}

inline C zeta_ld(C s) {
  CL r = zeta_em_ld(CL(s.real(), s.imag()));
  return C(static_cast<double>(r.real()), static_cast<double>(r.imag()));
}

// Central finite difference of order 1 and 2.
inline C fd1(const std::function<C(C)>& f, C x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}
inline double fd1r(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Composite Simpson on [a, b] — brute-force quadrature oracle.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int n /* even */) {
  double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// Trapezoid with Richardson refinement until settled; for smooth integrands.
inline double refined_trapezoid(const std::function<double(double)>& f, double a,
                                double b, double tol = 1e-10) {
  int n = 64;
  double prev = 0.0;
  for (int iter = 0; iter < 14; ++iter) {
    double h = (b - a) / n;
    double acc = 0.5 * (f(a) + f(b));
    for (int i = 1; i < n; ++i) acc += f(a + i * h);
    acc *= h;
    if (iter > 2 && std::abs(acc - prev) < tol * (1.0 + std::abs(acc))) return acc;
    prev = acc;
    n *= 2;
  }
  return prev;
}

// RK4 integration of w'' = q(z) w from (z0, w0, dw0) down to z; used as the
// shooting oracle for the Whittaker equation.
inline C ode_shoot(const std::function<C(double)>& q, double z0, C w0, C dw0,
                   double z, double h0 = 0.001) {
  C w = w0, dw = dw0;
  double zz = z0;
  while (zz > z) {
    double h = std::min(h0, zz - z);
    auto f = [&](double x, C wv, C dwv) { return std::pair<C, C>(dwv, q(x) * wv); };
    auto [k1w, k1d] = f(zz, w, dw);
    auto [k2w, k2d] = f(zz - 0.5 * h, w - 0.5 * h * k1w, dw - 0.5 * h * k1d);
    auto [k3w, k3d] = f(zz - 0.5 * h, w - 0.5 * h * k2w, dw - 0.5 * h * k2d);
    auto [k4w, k4d] = f(zz - h, w - h * k3w, dw - h * k3d);
    w -= h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    dw -= h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    zz -= h;
  }
  return w;
}

}  // namespace oracle
