#pragma once

#include "zf/types.hpp"

namespace zf {

// Kummer's confluent hypergeometric 1F1(a; b; z) for complex a, b and real z,
// by direct series. Throws DegenerateParamError when b is a nonpositive
// integer reached before the series terminates.
Complex hyp1f1(Complex a, Complex b, double z);

// Whittaker W_{gamma,mu}(z) for complex parameters and real z > 0.
//
// Evaluation paths, picked per (gamma, mu, z):
//   * terminating: 1/2 + mu - gamma (or its mu -> -mu mirror) a nonpositive
//     integer -> finite polynomial series, exact;
//   * z <= 12, 2mu not an integer: the two-term M-combination with Gamma
//     prefactors;
//   * z <= 12, 2mu an integer: logarithmic series for U(a, b, z) at integer b
//     (the M-combination degenerates there);
//   * z > 30 when the divergent large-z series has a small enough minimum
//     term: optimally truncated asymptotic series e^{-z/2} z^gamma (1 + ...);
//   * otherwise: RK4 march of the rescaled ODE
//         What'' + (2 gamma/z - 1) What' + ((gamma-1/2)^2 - mu^2)/z^2 What = 0,
//     What = W e^{z/2} z^{-gamma}, seeded from the asymptotic series at a
//     start point far enough out for it to converge, integrated downward
//     (the unwanted solution decays in that direction, so the march is stable).
Complex whittaker_w(Complex gamma_p, Complex mu, double z,
                    const PrecisionProfile& prec = {});

}  // namespace zf
