#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zf/function_spec.hpp"
#include "zf/types.hpp"
#include "zf/zeros.hpp"

namespace zf {

enum class Method { Quadrature, Residue, WhittakerSeries, ThetaIntegral };

std::string method_name(Method m);
Method method_from_name(const std::string& s);

struct CoeffValue {
  Complex value;
  double err_est = 0.0;       // absolute error estimate (tails + route spread)
  Complex route_a{0.0, 0.0};  // real-line route
  Complex route_b{0.0, 0.0};  // periodic route
};

// ---------------------------------------------------------------------------
// Core projection int_R f(y) K(y) dmu(y) by both the real-line and the
// angle-variable routes over a shared truncation, plus shared analytic tail
// completion (constant split, non-oscillatory envelope integral, first-order
// oscillatory boundary terms). K is supplied as separate callables for the
// two half-lines (arguments are positive); kernel_mu_integral is the exact
// value of int K dmu, used to reinstate the split constant.
// RouteDisagreement when the two routes differ by more than 2*q.tol.
// ---------------------------------------------------------------------------
CoeffValue project_kernel(const FunctionSpec& spec,
                          const std::function<Complex(double)>& k_pos,
                          const std::function<Complex(double)>& k_neg,
                          Complex kernel_mu_integral, const QuadratureSpec& q,
                          const PrecisionProfile& prec = {});

// Direct quadrature of a_n = (1/2pi) int f(y) e^{2in arctan(2y)} dy/(1/4+y^2)
// (the projection above with the basis kernel).
CoeffValue coeff_direct_full(const FunctionSpec& spec, int n,
                             const QuadratureSpec& q,
                             const PrecisionProfile& prec = {});
Complex coeff_direct(const FunctionSpec& spec, int n, const QuadratureSpec& q,
                     const PrecisionProfile& prec = {});

// int |f|^2 dmu over the shared grids, with the constant split and an
// analytic mean-square tail (the squared Dirichlet oscillation has a
// nonvanishing mean, so plain truncation would bias the norm).
double spec_norm2_mu(const FunctionSpec& spec, const QuadratureSpec& q,
                     const PrecisionProfile& prec = {}, double* err = nullptr);

// ---------------------------------------------------------------------------
// Binomial residue sums (reciprocal-zeta family).
// ---------------------------------------------------------------------------

// abar_n: 0 for n < 0, 1/zeta(sigma+1/2) at n = 0, and for n >= 1 the
// convention-resolved binomial sum over inv_zeta_taylor(sigma + 1/2).
// ConventionUnvalidated unless conv.validated (the calibration pass sets it).
Complex coeff_bar(double sigma, int n, const SumConvention& conv,
                  const PrecisionProfile& prec = {});

struct SSumResult {
  Complex value;       // tail-extrapolated value of S(n, sigma)
  double tail_bound;   // bound on |true - value|
  Complex raw_partial; // plain partial sum over the table, for diagnostics
};

// S(n, sigma): nontrivial zeros in conjugate pairs (ascending beta) with a
// Richardson tail extrapolation in 1/beta, plus the trivial-zero series
// truncated at k_trivial_max.
SSumResult s_sum(int n, double sigma, const ZeroTable& zeros, int k_trivial_max,
                 const PrecisionProfile& prec = {});

// ahat_n per the calibrated convention: binom - hat_sign * S for n >= 1,
// -hat_sign * S for n < 0, 1/zeta(sigma+1/2) at n = 0. hat_sign = +1
// reproduces the printed formulas; calibration selects the sign that matches
// quadrature. TailTooLarge if the S tail bound exceeds max_tail.
Complex coeff_hat(double sigma, int n, const ZeroTable& zeros,
                  int k_trivial_max, const SumConvention& conv, double hat_sign,
                  double max_tail = 1e-2, double* tail_bound = nullptr,
                  const PrecisionProfile& prec = {});

// ---------------------------------------------------------------------------
// cos^v-weighted zeta family.
// ---------------------------------------------------------------------------

struct TildeSeriesResult {
  Complex value;
  double err_est;
  int k_used;
};

// n >= 1 coefficients of zeta(sigma+ix) cos^v(arctan 2x):
//   Gamma(v+1) / (2^v Gamma(v/2+n+1) Gamma(v/2-n+1))
//   + sum_{k>=2} k^{-sigma} (log k / 4)^{v/2} W_{n, -(v+1)/2}(log k)
//       / Gamma(1 + v/2 + n)
//   - 4^{-v/2} s0^{n-v/2-1} (1-s0)^{-n-v/2-1},  s0 = 3/2 - sigma.
// The k-sum is completed by an Euler-Maclaurin integral correction; k_max is
// raised adaptively until the remainder estimate passes tol (SlowConvergence
// otherwise). The last term compensates the zeta-pole crossing implied by
// summing the Dirichlet series termwise for sigma < 1.
TildeSeriesResult coeff_tilde_series(double sigma, Complex v, int n, long k_max,
                                     double tol = 1e-8,
                                     const PrecisionProfile& prec = {});

// n < 0 closed form (2 sigma^2 - 4 sigma + 5/2)
//   / (2 (sigma-1/2)^2 (3/2-sigma)^2) * ((3/2-sigma)/(sigma-1/2))^n.
double coeff_tilde_negative(double sigma, int n);

// ---------------------------------------------------------------------------
// Xi-function family.
// ---------------------------------------------------------------------------

// -(1/n!) int_0^1 log^n(y) (y d/dy)^n Theta(y) dy.
double theta_log_integral(int n, const QuadratureSpec& q,
                          const PrecisionProfile& prec = {});

// (1/(n-1)!) int_1^inf log^{n-1}(y) (y d/dy)^n Theta(y) dy — the Mellin-side
// integral the residue route actually pairs with.
double theta_log_integral_upper(int n, const QuadratureSpec& q,
                                const PrecisionProfile& prec = {});

// ((-1)^n/(n-1)!) sum_{k=0}^{n-1} C(n-1,k) n!/(k+1)! xi^(k)(at), at in {0,1}.
double xi_residue_sum(int n, int at, const PrecisionProfile& prec = {});

// Variant with the per-term (-1)^k twist (equal to -xi_residue_sum(n,1) by
// the xi^(k)(0) = (-1)^k xi^(k)(1) symmetry); the mirrored negative-index
// branch needs it.
double xi_residue_sum_alternating(int n, int at, const PrecisionProfile& prec = {});

// a''_n by either route. THETA_RESIDUE combines theta_log_integral_upper with
// the sign-calibrated residue sums (sign +1 keeps the printed orientation;
// calibration selects the match). CalibrationRequired when xi_sign == 0.
Complex coeff_xi(int n, Method method, const QuadratureSpec& q,
                 double xi_sign = 0.0, const PrecisionProfile& prec = {});

// ---------------------------------------------------------------------------
// Tables.
// ---------------------------------------------------------------------------

struct CoefficientTable {
  FunctionSpec spec;
  int n_min = 0, n_max = 0;
  Method method = Method::Quadrature;
  std::map<int, Complex> values;
  std::map<int, double> err;
  std::string meta;        // canonical parameter description
  uint64_t meta_hash = 0;  // FNV-1a of meta

  Complex at(int n) const;
  double err_at(int n) const;
};

struct TableDeps {
  const ZeroTable* zeros = nullptr;
  const struct CalibrationResult* calib = nullptr;
};

// Builds values for every n in [n_min, n_max]; quadrature grids are shared
// and the per-index work fans out across worker threads, assembled by index.
CoefficientTable build_table(const FunctionSpec& spec, int n_min, int n_max,
                             Method method, const QuadratureSpec& q,
                             const TableDeps& deps = {},
                             const PrecisionProfile& prec = {});

}  // namespace zf
