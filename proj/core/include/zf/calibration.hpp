#pragma once

#include <string>

#include "zf/function_spec.hpp"
#include "zf/types.hpp"
#include "zf/zeros.hpp"

namespace zf {

// Resolves every ambiguous summation bound, sign, and weight variant in the
// residue/series formulas by comparing against convention-free direct
// quadrature at reduced precision. Mandatory before coeff_bar/coeff_hat/
// coeff_xi residue routes are used.
struct CalibrationResult {
  SumConvention bar;            // validated binomial convention
  double bar_residual = 0.0;    // worst |residue - quadrature| on the calibration set

  double hat_sign = 0.0;        // sign on S in coeff_hat (+1 = printed); 0 = unset
  double hat_residual = 0.0;

  WeightVariant tilde_variant = WeightVariant::DoubleAngle;
  double tilde_sign = 0.0;      // closed form ~ tilde_sign * quadrature
  double tilde_neg1_offset = 0.0;  // extra term at n = -1, in units of zeta(sigma+1/2)
  double tilde_residual = 0.0;

  double xi_sign = 0.0;         // sign on the residue sums in coeff_xi
  double xi_residual = 0.0;
};

// Runs the full pass. The zero table may be null; hat_sign is then left unset
// and coeff_hat refuses to run. sigmas: the calibration set for the binomial
// convention.
CalibrationResult calibrate(const ZeroTable* zeros,
                            const PrecisionProfile& prec = {},
                            bool quick = false);

// Canonical one-line signature for provenance hashing.
std::string calibration_signature(const CalibrationResult& c);

}  // namespace zf
