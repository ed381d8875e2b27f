#include "zf/calibration.hpp"

#include <cmath>
#include <cstdio>

#include "zf/coefficients.hpp"
#include "zf/zetafn.hpp"

namespace zf {
namespace {

// Reduced-precision quadrature for convention decisions: conventions differ
// by O(0.1..1), so ~1e-6 accuracy leaves orders of magnitude of margin.
QuadratureSpec calib_quad() {
  QuadratureSpec q;
  q.y_max = 300.0;
  q.tol = 1e-6;
  q.nodes = 24;
  q.scheme = Scheme::GaussLegendreComposite;
  return q;
}

}  // namespace

CalibrationResult calibrate(const ZeroTable* zeros, const PrecisionProfile& prec,
                            bool quick) {
  CalibrationResult out;
  QuadratureSpec q = calib_quad();
  std::vector<double> sigmas = quick ? std::vector<double>{0.75}
                                     : std::vector<double>{0.6, 0.75, 0.9};

  // --- Theorem 1.1 first part: binomial convention --------------------------
  {
    double best = 1e300;
    SumConvention best_conv;
    for (int inc = 0; inc < 2; ++inc)
      for (int alt = 0; alt < 2; ++alt)
        for (int neg = 0; neg < 2; ++neg) {
          SumConvention c;
          c.upper_inclusive = inc;
          c.alternate_per_term = alt;
          c.negate = neg;
          c.validated = true;  // provisional, for evaluation only
          double worst = 0.0;
          for (double s : sigmas) {
            for (int n = 1; n <= 3; ++n) {
              Complex ref = coeff_direct(FunctionSpec::inv_zeta(s), n, q, prec);
              Complex got = coeff_bar(s, n, c, prec);
              worst = std::max(worst, std::abs(ref - got));
            }
          }
          if (worst < best) {
            best = worst;
            best_conv = c;
          }
        }
    if (best > 1e-3)
      throw CalibrationRequired(
          "calibration: no binomial convention matches quadrature (best residual " +
          std::to_string(best) + ")");
    best_conv.validated = true;
    out.bar = best_conv;
    out.bar_residual = best;
  }

  // --- Theorem 1.1 second part: sign on S ------------------------------------
  if (zeros && zeros->count() >= 10) {
    double best = 1e300, best_sign = 0.0;
    const double s = 0.75;
    for (double sign : {+1.0, -1.0}) {
      double worst = 0.0;
      for (int n : {-2, -1, 1}) {
        Complex ref = coeff_direct(FunctionSpec::inv_zeta_conj(s), n, q, prec);
        Complex got = coeff_hat(s, n, *zeros, 30, out.bar, sign, 1e-1, nullptr, prec);
        worst = std::max(worst, std::abs(ref - got));
      }
      if (worst < best) {
        best = worst;
        best_sign = sign;
      }
    }
    if (best > 2e-2)
      throw CalibrationRequired("calibration: no S-sign matches quadrature");
    out.hat_sign = best_sign;
    out.hat_residual = best;
  }

  // --- Theorem 1.2 negative branch: weight variant, sign, n=-1 offset --------
  {
    const double s = 0.75;
    const double z_half = zeta(Complex(s + 0.5, 0.0), prec).real();
    double best = 1e300;
    for (WeightVariant wv : {WeightVariant::DoubleAngle, WeightVariant::HalfAngle}) {
      FunctionSpec fs = FunctionSpec::zeta_cos_v(s, Complex(1.0, 0.0), wv);
      // decide sign on an even index (no offset candidates there)
      Complex q2 = coeff_direct(fs, -2, q, prec);
      for (double sign : {+1.0, -1.0}) {
        double r2 = std::abs(sign * q2.real() - coeff_tilde_negative(s, -2));
        for (double off : {0.0, 0.5, -0.5}) {
          Complex q1 = coeff_direct(fs, -1, q, prec);
          double r1 = std::abs(sign * (q1.real() - off * z_half) -
                               coeff_tilde_negative(s, -1));
          double worst = std::max(r1, r2);
          if (worst < best) {
            best = worst;
            out.tilde_variant = wv;
            out.tilde_sign = sign;
            out.tilde_neg1_offset = off;
          }
        }
      }
    }
    if (best > 1e-3)
      throw CalibrationRequired("calibration: no weight variant matches the n<0 closed form");
    out.tilde_residual = best;
  }

  // --- Theorem 3.1: residue-sum sign -----------------------------------------
  {
    QuadratureSpec qx = q;
    double best = 1e300, best_sign = 0.0;
    Complex ref1 = coeff_xi(1, Method::Quadrature, qx, 0.0, prec);
    Complex ref2 = coeff_xi(2, Method::Quadrature, qx, 0.0, prec);
    for (double sign : {+1.0, -1.0}) {
      double r = std::max(
          std::abs(coeff_xi(1, Method::ThetaIntegral, qx, sign, prec) - ref1),
          std::abs(coeff_xi(2, Method::ThetaIntegral, qx, sign, prec) - ref2));
      if (r < best) {
        best = r;
        best_sign = sign;
      }
    }
    if (best > 1e-4)
      throw CalibrationRequired("calibration: no residue-sum sign matches the xi quadrature");
    out.xi_sign = best_sign;
    out.xi_residual = best;
  }

  return out;
}

std::string calibration_signature(const CalibrationResult& c) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "bar{%s},hat{%+.0f},tilde{%s,%+.0f,off=%.1f},xi{%+.0f}",
                c.bar.describe().c_str(), c.hat_sign,
                c.tilde_variant == WeightVariant::HalfAngle ? "half" : "double",
                c.tilde_sign, c.tilde_neg1_offset, c.xi_sign);
  return buf;
}

}  // namespace zf
