#pragma once

#include "zf/types.hpp"

namespace zf {

// Log of the gamma function, continuous on the plane cut along the negative
// real axis, real on (0, inf). exp(log_gamma(z)) == Gamma(z).
// Throws PoleError at nonpositive integers.
Complex log_gamma(Complex z);

Complex gamma(Complex z);

// 1/Gamma(z); entire, exactly 0 at nonpositive integers.
Complex gamma_reciprocal(Complex z);

// psi(z) = Gamma'(z)/Gamma(z).
Complex digamma(Complex z);

}  // namespace zf
