#pragma once

#include <functional>

#include "zf/types.hpp"

namespace zf {

// Density of mu: 1/(2 pi (1/4 + y^2)); total mass 1.
double mu_density(double y);

// phi = 2 arctan(2x), the angle coordinate; x = (1/2) tan(phi/2) inverts it.
// Note the half-angle: x = (1/2) tan(phi/2) is the convention under which
// e^{-2in arctan(2x)} = e^{-in phi}; the full-angle variant x = (1/2) tan(phi)
// sometimes seen in writeups breaks that identity and the round trip.
double phi_of_x(double x);
double x_of_phi(double phi);  // DomainError for |phi| >= pi

// e_n(x) = e^{-2 i n arctan(2x)}; unimodular, orthonormal in L^2(mu).
Complex basis_e(int n, double x);

// Dirichlet kernel D_N(x) = sin((N+1/2)x)/sin(x/2), value 2N+1 at x = 0 mod 2pi.
double dirichlet_kernel(int N, double x);

// Fejer kernel K_N(x) = (1/(N+1)) sum_{n=0..N} D_n(x) >= 0.
double fejer_kernel(int N, double x);

struct InnerProductResult {
  Complex real_line;  // hybrid real-line route (truncated + sliver completion)
  Complex periodic;   // full-period composite Gauss-Legendre route
};

// Both quadrature routes for <f, g> = int f conj(g) dmu.
InnerProductResult inner_product_routes(const std::function<Complex(double)>& f,
                                        const std::function<Complex(double)>& g,
                                        const QuadratureSpec& q,
                                        int max_frequency_hint = 24);

// Returns the real-line value after checking the two routes agree within
// 2*q.tol (ToleranceError otherwise).
Complex inner_product(const std::function<Complex(double)>& f,
                      const std::function<Complex(double)>& g,
                      const QuadratureSpec& q, int max_frequency_hint = 24);

}  // namespace zf
