#include "zf/xifn.hpp"

#include <cmath>

#include "zf/cauchy.hpp"
#include "zf/gammafn.hpp"
#include "zf/zetafn.hpp"

namespace zf {
namespace {

// Stieltjes constants gamma_0..gamma_8 for the Laurent expansion of zeta at 1.
constexpr double kStieltjes[9] = {
    0.577215664901532861,   -0.0728158454836767249, -0.00969036319287231848,
    0.00205383442030334587, 0.00232537006546730006, 0.000793323817301062702,
    -0.00023876934543019961, -0.000527289567057751046, -0.00035212335380303951,
};

// (s-1) * zeta(s) near s = 1: 1 + sum_n (-1)^n gamma_n (s-1)^{n+1} / n!.
Complex sm1_zeta_near_pole(Complex s) {
  Complex u = s - 1.0;
  Complex acc(1.0, 0.0);
  Complex up = u;
  double fact = 1.0;
  for (int n = 0; n < 9; ++n) {
    if (n > 0) fact *= n;
    acc += (n % 2 ? -1.0 : 1.0) * kStieltjes[n] * up / fact;
    up *= u;
  }
  return acc;
}

Complex xi_impl(Complex s, const PrecisionProfile& prec) {
  // Symmetry reduces everything to Re(s) >= 1/2, keeping the zeta pole the
  // only delicate point.
  if (s.real() < 0.5) return xi_impl(1.0 - s, prec);
  if (std::abs(s - Complex(1.0, 0.0)) < 0.05) {
    // xi(s) = (1/2) s pi^{-s/2} Gamma(s/2) * [(s-1) zeta(s)]
    return 0.5 * s * std::exp(-0.5 * s * std::log(kPi)) * gamma(0.5 * s) *
           sm1_zeta_near_pole(s);
  }
  return 0.5 * s * (s - 1.0) * std::exp(-0.5 * s * std::log(kPi)) *
         gamma(0.5 * s) * zeta(s, prec);
}

}  // namespace

Complex xi(Complex s, const PrecisionProfile& prec) {
  if (s.imag() < 0.0) return std::conj(xi_impl(std::conj(s), prec));
  return xi_impl(s, prec);
}

double xi_critical(double y, const PrecisionProfile& prec) {
  return xi(Complex(0.5, y), prec).real();
}

std::vector<Complex> xi_derivatives(Complex s0, int kmax,
                                    const PrecisionProfile& prec) {
  if (kmax < 0) throw DomainError("xi_derivatives: kmax must be >= 0");
  if (kmax > 12) throw DomainError("xi_derivatives: kmax > 12 exceeds the accuracy budget");
  auto f = [&prec](Complex z) { return xi(z, prec); };
  // xi is entire; a generous radius keeps the k!/r^k roundoff amplification low.
  const double r = 0.5;
  return cauchy_derivatives_checked(f, s0, r, kmax,
                                    std::max(prec.deriv_nodes, 4 * kmax + 16),
                                    prec.series_tol * 100.0);
}

}  // namespace zf
