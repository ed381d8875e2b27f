#pragma once

#include <vector>

#include "zf/types.hpp"

namespace zf {

// Completed zeta: xi(s) = (1/2) s(s-1) pi^{-s/2} Gamma(s/2) zeta(s).
// Entire; the zeta pole at 1 and the Gamma pole at 0 are cancelled
// analytically, so s = 0 and s = 1 are fine (xi(0) = xi(1) = 1/2).
Complex xi(Complex s, const PrecisionProfile& prec = {});

// Xi(y) = xi(1/2 + iy); real for real y.
double xi_critical(double y, const PrecisionProfile& prec = {});

// xi^(k)(s0) for k = 0..kmax via Cauchy-circle differentiation.
std::vector<Complex> xi_derivatives(Complex s0, int kmax,
                                    const PrecisionProfile& prec = {});

}  // namespace zf
