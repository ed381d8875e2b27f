#pragma once

#include <vector>

#include "zf/types.hpp"

namespace zf {

// Riemann zeta via Euler-Maclaurin summation; functional-equation reflection
// for Re(s) < 0. The term count scales with |Im s| so the stated tolerance
// holds over the whole working strip. Throws PoleError at s = 1.
Complex zeta(Complex s, const PrecisionProfile& prec = {});

// k-th derivative by Cauchy-circle differentiation (k = 0 returns zeta(s)).
// The circle must not touch s = 1; the radius is clamped to half the distance
// to the pole. ToleranceError on radius-halving disagreement.
Complex zeta_derivative(Complex s, int k, const PrecisionProfile& prec = {});

// d^k/ds^k [1/zeta(a - s)] at s = 0 for k = 0..kmax, by reciprocal
// Taylor-series arithmetic (zeta's Taylor coefficients at `a` come from one
// Cauchy circle, then the series is inverted; the -s argument flips odd
// orders). ZeroDivisionError if |zeta(a)| is negligible.
std::vector<Complex> inv_zeta_taylor(double a, int kmax,
                                     const PrecisionProfile& prec = {});

// zeta'(-2k) = (-1)^k (2k)! zeta(2k+1) / (2^{2k+1} pi^{2k}), k >= 1.
double zeta_prime_trivial(int k, const PrecisionProfile& prec = {});

}  // namespace zf
