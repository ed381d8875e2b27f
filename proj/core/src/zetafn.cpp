#include "zf/zetafn.hpp"

#include <algorithm>
#include <cmath>

#include "zf/cauchy.hpp"
#include "zf/gammafn.hpp"

namespace zf {
namespace {

// B_{2k}/(2k)!, k = 1..30.
constexpr double kBern[30] = {
    0.0833333333333333333,   -0.00138888888888888889,  0.0000330687830687830688,
    -8.2671957671957672e-7,  2.0876756987868099e-8,    -5.28419013868749318e-10,
    1.33825365306846788e-11, -3.38968029632258287e-13, 8.58606205627784456e-15,
    -2.17486869855806187e-16, 5.50900282836022952e-18, -1.39544646858125233e-19,
    3.53470703962946747e-21, -8.95351742703754685e-23, 2.26795245233768306e-24,
    -5.74479066887220245e-26, 1.4551724756148649e-27,  -3.68599494066531018e-29,
    9.33673425709504467e-31, -2.36502241570062993e-32, 5.9906717624821343e-34,
    -1.51745488446829026e-35, 3.84375812545418823e-37, -9.73635307264669104e-39,
    2.46624704420068096e-40, -6.24707674182074369e-42, 1.58240302446449143e-43,
    -4.00827368594893597e-45, 1.01530758555695563e-46, -2.57180415824187175e-48,
};

Complex cpow(double base, Complex e) {
  // base > 0
  return std::exp(e * std::log(base));
}

// Euler-Maclaurin for Re(s) >= 0 (works down to moderately negative Re as
// well; reflection is applied before we get here for Re(s) < 0).
Complex zeta_em(Complex s, const PrecisionProfile& prec) {
  const double t = std::abs(s.imag());
  const int n = std::max(prec.em_terms, static_cast<int>(0.30 * t) + 16);
  const int m = std::min(std::max(prec.em_bernoulli, 10), 30);

  Complex sum(0.0, 0.0);
  for (int j = 1; j <= n; ++j) sum += cpow(static_cast<double>(j), -s);
  const double nn = static_cast<double>(n);
  sum += cpow(nn, 1.0 - s) / (s - 1.0);
  sum -= 0.5 * cpow(nn, -s);

  // sum_{k=1..m} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * n^{1-s-2k}
  Complex rising = s;  // product over j = 0..2k-2 of (s+j)
  Complex npow = cpow(nn, 1.0 - s);
  for (int k = 1; k <= m; ++k) {
    npow /= (nn * nn);
    sum += kBern[k - 1] * rising * npow;
    rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
  }
  return sum;
}

Complex zeta_upper(Complex s, const PrecisionProfile& prec) {
  if (s.real() >= 0.0) return zeta_em(s, prec);
  // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
  Complex chi = cpow(2.0, s) * cpow(kPi, s - 1.0) * std::sin(0.5 * kPi * s) *
                gamma(1.0 - s);
  return chi * zeta_em(1.0 - s, prec);
}

}  // namespace

Complex zeta(Complex s, const PrecisionProfile& prec) {
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
  if (s.imag() < 0.0) return std::conj(zeta_upper(std::conj(s), prec));
  return zeta_upper(s, prec);
}

Complex zeta_derivative(Complex s, int k, const PrecisionProfile& prec) {
  if (k < 0) throw DomainError("zeta_derivative: k must be >= 0");
  if (k == 0) return zeta(s, prec);
  const double dist_pole = std::abs(s - Complex(1.0, 0.0));
  double r = std::min(prec.deriv_radius, 0.5 * dist_pole);
  if (!(r > 0.0)) throw PoleError("zeta_derivative: circle touches s = 1");
  auto f = [&prec](Complex z) { return zeta(z, prec); };
  auto d = cauchy_derivatives_checked(f, s, r, k, std::max(prec.deriv_nodes, 4 * k + 16),
                                      prec.series_tol * 100.0);
  return d[static_cast<size_t>(k)];
}

std::vector<Complex> inv_zeta_taylor(double a, int kmax,
                                     const PrecisionProfile& prec) {
  if (kmax < 0) throw DomainError("inv_zeta_taylor: kmax must be >= 0");
  if (a == 1.0) throw PoleError("inv_zeta_taylor: a = 1");
  const Complex za = zeta(Complex(a, 0.0), prec);
  if (std::abs(za) < 1e-12) throw ZeroDivisionError("inv_zeta_taylor: zeta(a) ~ 0");

  // Taylor coefficients of zeta at a from one circle; radius clamped by the
  // pole at 1.
  double r = std::min(prec.deriv_radius, 0.5 * std::abs(a - 1.0));
  auto f = [&prec](Complex z) { return zeta(z, prec); };
  auto derivs = cauchy_derivatives_checked(
      f, Complex(a, 0.0), r, kmax, std::max(prec.deriv_nodes, 4 * kmax + 16),
      prec.series_tol * 100.0);

  std::vector<Complex> c(derivs.size());  // zeta(a + u) = sum c_j u^j
  double fact = 1.0;
  for (int j = 0; j <= kmax; ++j) {
    if (j > 0) fact *= j;
    c[static_cast<size_t>(j)] = derivs[static_cast<size_t>(j)] / fact;
  }
  // g(s) = zeta(a - s) = sum g_j s^j with g_j = (-1)^j c_j; invert the series.
  std::vector<Complex> g(c.size()), h(c.size());
  for (int j = 0; j <= kmax; ++j)
    g[static_cast<size_t>(j)] = ((j % 2) ? -c[static_cast<size_t>(j)] : c[static_cast<size_t>(j)]);
  h[0] = 1.0 / g[0];
  for (int m = 1; m <= kmax; ++m) {
    Complex acc(0.0, 0.0);
    for (int j = 1; j <= m; ++j) acc += g[static_cast<size_t>(j)] * h[static_cast<size_t>(m - j)];
    h[static_cast<size_t>(m)] = -acc / g[0];
  }
  // d^k/ds^k [1/zeta(a-s)]|_0 = k! h_k
  std::vector<Complex> out(h.size());
  fact = 1.0;
  for (int j = 0; j <= kmax; ++j) {
    if (j > 0) fact *= j;
    out[static_cast<size_t>(j)] = fact * h[static_cast<size_t>(j)];
  }
  return out;
}

double zeta_prime_trivial(int k, const PrecisionProfile& prec) {
  if (k < 1) throw DomainError("zeta_prime_trivial: k must be >= 1");
  // (-1)^k (2k)! zeta(2k+1) / (2^{2k+1} pi^{2k}); assembled in log space to
  // survive the factorial growth.
  const double z = zeta(Complex(2.0 * k + 1.0, 0.0), prec).real();
  double lg = std::lgamma(2.0 * k + 1.0) - (2.0 * k + 1.0) * std::log(2.0) -
              2.0 * k * std::log(kPi);
  double sign = (k % 2) ? -1.0 : 1.0;
  return sign * std::exp(lg) * z;
}

}  // namespace zf
