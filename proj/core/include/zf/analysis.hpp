#pragma once

#include <string>
#include <vector>

#include "zf/coefficients.hpp"
#include "zf/types.hpp"

namespace zf {

struct ReconstructionReport {
  std::string spec_id;
  int N = 0;
  std::vector<double> grid;               // x sample points
  std::vector<Complex> f_values;          // direct evaluation
  std::vector<Complex> partial_values;    // S_N at the grid
  std::vector<double> truncation_error;   // |f - S_N| pointwise
  double sup_error = 0.0;
  double l2_error = 0.0;                  // under mu, same quadrature as meta
  std::string quad_meta;
};

struct ParsevalReport {
  double lhs = 0.0;          // int |f|^2 dmu
  double rhs_partial = 0.0;  // sum_{|k|<=N} |a_k|^2
  double tail_bound = 0.0;   // fitted geometric tail of |a_k|^2 beyond N
  double tolerance = 0.0;    // tail_bound + 2*q.tol
  bool pass = false;
  int N = 0;
};

// S_N(x) = sum_{|n|<=N} a_n e^{-2in arctan(2x)}. IndexRangeError when the
// table does not cover [-N, N].
Complex partial_sum(const CoefficientTable& table, double x, int N);

// The same partial sum as a Dirichlet-kernel convolution in the angle
// variable (independent route; agrees with the direct sum within quadrature
// tolerance).
Complex partial_sum_kernel(const FunctionSpec& spec, double x, int N,
                           const QuadratureSpec& q,
                           const PrecisionProfile& prec = {});

// Fejer (C,1) mean at the angle coordinate x0 (radians in (-pi, pi)):
// kernel-integral route (1/2pi) int K_N(x0 - 2 arctan 2y) f(y) dmu.
Complex fejer_mean(const FunctionSpec& spec, double x0_phi, int N,
                   const QuadratureSpec& q, const PrecisionProfile& prec = {});

// Equivalent (C,1) average of the partial sums S_0..S_N from a table.
Complex fejer_mean_cesaro(const CoefficientTable& table, double x0_phi, int N);

// Parseval verdict: lhs by quadrature of |f|^2 dmu, rhs from the table, tail
// bound from a least-squares geometric fit of the last |a_k| magnitudes.
// A failed verdict is data, not an exception.
ParsevalReport parseval_check(const FunctionSpec& spec,
                              const CoefficientTable& table, int N,
                              const QuadratureSpec& q,
                              const PrecisionProfile& prec = {});

ReconstructionReport reconstruction_report(const FunctionSpec& spec,
                                           const CoefficientTable& table,
                                           const std::vector<double>& grid,
                                           int N, const QuadratureSpec& q,
                                           const PrecisionProfile& prec = {});

}  // namespace zf
