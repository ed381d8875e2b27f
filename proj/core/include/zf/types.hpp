#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "zf/errors.hpp"

namespace zf {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline Complex require_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw NumericError(std::string(what) + ": non-finite result");
  return z;
}

// Tuning knobs for the special-function evaluators.
struct PrecisionProfile {
  int em_terms = 50;        // Euler-Maclaurin cutoff N (floor; scaled with |Im s|)
  int em_bernoulli = 25;    // correction terms M
  double deriv_radius = 0.2;  // Cauchy-circle radius
  int deriv_nodes = 64;       // equally spaced points on the circle
  double series_tol = 1e-12;

  void validate() const {
    if (em_terms < 1 || em_bernoulli < 1 || deriv_nodes < 4)
      throw ConfigError("PrecisionProfile: counts must be positive");
    if (!(deriv_radius > 0.0 && deriv_radius <= 0.25))
      throw ConfigError("PrecisionProfile: deriv_radius must be in (0, 1/4]");
    if (!(series_tol > 0.0)) throw ConfigError("PrecisionProfile: series_tol must be > 0");
  }
};

enum class Scheme { TanhSinh, GaussLegendreComposite };

// Controls every numerical integral: node count per panel, real-line truncation,
// scheme, and the refinement tolerance. The mass of mu beyond +-y_max is
// ~1/(pi*y_max); what the integrators actually guarantee is that truncated mass
// is either completed analytically (built-in function kinds, basis slivers) or
// reported through the per-result error estimate.
struct QuadratureSpec {
  int nodes = 32;
  double y_max = 5000.0;
  Scheme scheme = Scheme::TanhSinh;
  double tol = 1e-10;

  double tail_mass() const { return 1.0 - (2.0 / kPi) * std::atan(2.0 * y_max); }

  void validate() const {
    if (nodes < 4) throw ConfigError("QuadratureSpec: nodes must be >= 4");
    if (!(y_max > 1.0)) throw ConfigError("QuadratureSpec: y_max must be > 1");
    if (!(tol > 0.0)) throw ConfigError("QuadratureSpec: tol must be > 0");
  }
};

// Resolves the ambiguous pieces of the binomial residue sums: the upper
// summation limit (k < n vs k <= n), the per-term sign ((-1)^n fixed vs the
// Leibniz (-1)^{n-k}), and an overall sign. Only calibration against direct
// quadrature may set `validated`.
struct SumConvention {
  bool upper_inclusive = true;
  bool alternate_per_term = true;
  bool negate = false;
  bool validated = false;

  bool operator==(const SumConvention& o) const {
    return upper_inclusive == o.upper_inclusive &&
           alternate_per_term == o.alternate_per_term && negate == o.negate;
  }
  std::string describe() const {
    std::string s = upper_inclusive ? "k<=n" : "k<n";
    s += alternate_per_term ? ",(-1)^(n-k)" : ",(-1)^n";
    s += negate ? ",negated" : ",plain";
    return s;
  }
};

}  // namespace zf
