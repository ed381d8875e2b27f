#pragma once

#include <functional>
#include <vector>

#include "zf/types.hpp"

namespace zf {

// Derivatives f^(0..kmax)(center) from one trapezoid pass over a circle of
// radius r (spectrally accurate for f analytic on a neighbourhood of the disk).
std::vector<Complex> cauchy_derivatives(const std::function<Complex(Complex)>& f,
                                        Complex center, double r, int kmax,
                                        int nodes);

// Same, but validated: recomputes at r/2 and throws ToleranceError if the two
// radii disagree beyond tol (relative to the larger magnitude, with an
// absolute floor).
std::vector<Complex> cauchy_derivatives_checked(
    const std::function<Complex(Complex)>& f, Complex center, double r,
    int kmax, int nodes, double tol);

}  // namespace zf
