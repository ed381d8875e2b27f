#pragma once

#include "zf/types.hpp"

namespace zf {

// Theta(y) = 2 y^2 sum_{n>=1} (2 pi^2 n^4 y^2 - 3 pi n^2) e^{-pi n^2 y^2},
// truncated once a term drops below series_tol times the running sum.
// Superexponentially convergent for y > 0. Below y ~ 0.2 the summands cancel
// catastrophically and the (superexponentially tiny) true value drowns in a
// ~1e-13 absolute noise floor; callers integrate through that region, where
// the noise is harmless.
double theta_big(double y, const PrecisionProfile& prec = {});

// (y d/dy)^n Theta(y); each summand is a polynomial in y times a Gaussian
// whose image under y d/dy is again of that shape, so coefficients propagate
// exactly and no differencing is involved.
double theta_d_operator(double y, int n, const PrecisionProfile& prec = {});

}  // namespace zf
