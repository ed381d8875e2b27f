#include "zf/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "zf/basis.hpp"
#include "zf/quadrature.hpp"

namespace zf {

Complex partial_sum(const CoefficientTable& table, double x, int N) {
  if (N < 0) throw DomainError("partial_sum: N must be >= 0");
  if (table.n_min > -N || table.n_max < N)
    throw IndexRangeError("partial_sum: table does not cover [-N, N]");
  Complex acc(0.0, 0.0);
  for (int n = -N; n <= N; ++n) acc += table.at(n) * basis_e(n, x);
  return acc;
}

Complex partial_sum_kernel(const FunctionSpec& spec, double x, int N,
                           const QuadratureSpec& q, const PrecisionProfile& prec) {
  const double phi0 = 2.0 * std::atan(2.0 * x);
  auto k_pos = [N, phi0](double y) {
    return Complex(dirichlet_kernel(N, phi0 - 2.0 * std::atan(2.0 * y)), 0.0);
  };
  auto k_neg = [N, phi0](double y) {
    return Complex(dirichlet_kernel(N, phi0 + 2.0 * std::atan(2.0 * y)), 0.0);
  };
  // (1/2pi) int D_N dphi = 1 exactly
  return project_kernel(spec, k_pos, k_neg, Complex(1.0, 0.0), q, prec).value;
}

Complex fejer_mean(const FunctionSpec& spec, double x0_phi, int N,
                   const QuadratureSpec& q, const PrecisionProfile& prec) {
  if (!(std::abs(x0_phi) < kPi))
    throw DomainError("fejer_mean: x0 must lie in (-pi, pi)");
  auto k_pos = [N, x0_phi](double y) {
    return Complex(fejer_kernel(N, x0_phi - 2.0 * std::atan(2.0 * y)), 0.0);
  };
  auto k_neg = [N, x0_phi](double y) {
    return Complex(fejer_kernel(N, x0_phi + 2.0 * std::atan(2.0 * y)), 0.0);
  };
  return project_kernel(spec, k_pos, k_neg, Complex(1.0, 0.0), q, prec).value;
}

Complex fejer_mean_cesaro(const CoefficientTable& table, double x0_phi, int N) {
  if (N < 0) throw DomainError("fejer_mean_cesaro: N must be >= 0");
  const double x = 0.5 * std::tan(0.5 * x0_phi);
  Complex acc(0.0, 0.0);
  for (int j = 0; j <= N; ++j) acc += partial_sum(table, x, j);
  return acc / static_cast<double>(N + 1);
}

ParsevalReport parseval_check(const FunctionSpec& spec,
                              const CoefficientTable& table, int N,
                              const QuadratureSpec& q, const PrecisionProfile& prec) {
  if (table.n_min > -N || table.n_max < N)
    throw IndexRangeError("parseval_check: table does not cover [-N, N]");
  ParsevalReport r;
  r.N = N;
  r.lhs = spec_norm2_mu(spec, q, prec);
  for (int n = -N; n <= N; ++n) r.rhs_partial += std::norm(table.at(n));

  // Tail bound past N. The plain 5-point geometric fit of log|a_k| badly
  // underestimates spectra whose magnitudes beat against each other (the
  // reciprocal-zeta coefficients decay at only ~e^{-0.00125 k}, set by the
  // first zero ordinate, under oscillation). The bound therefore combines a
  // max-pooled envelope over the last indices with a decay rate clamped from
  // below by the structural minimum, giving a deliberately conservative
  // upper estimate.
  double rate_floor = 5e-4;
  if (spec.zeta_based()) {
    const double b1 = 14.1347;
    double s = spec.sigma;
    rate_floor = std::max(
        rate_floor, 0.5 * std::log((s * s + b1 * b1) /
                                   ((1.0 - s) * (1.0 - s) + b1 * b1)));
  }
  auto side_tail = [&](int dir) {
    std::vector<double> ks, ls;
    double env = 0.0;
    int window = std::min(8, N);
    for (int j = window - 1; j >= 0; --j) {
      int n = dir * (N - j);
      double a = std::abs(table.at(n));
      env = std::max(env, a);
      if (a > 1e-300) {
        ks.push_back(std::abs(n));
        ls.push_back(std::log(a));
      }
    }
    if (env < 1e-300) return 0.0;
    double rate = rate_floor;
    if (!spec.zeta_based() && ks.size() >= 2) {
      double mk = 0.0, ml = 0.0;
      for (size_t i = 0; i < ks.size(); ++i) {
        mk += ks[i];
        ml += ls[i];
      }
      mk /= ks.size();
      ml /= ls.size();
      double num = 0.0, den = 0.0;
      for (size_t i = 0; i < ks.size(); ++i) {
        num += (ks[i] - mk) * (ls[i] - ml);
        den += (ks[i] - mk) * (ks[i] - mk);
      }
      double slope = (den > 0.0) ? num / den : 0.0;  // d log|a|/dk
      if (slope < -rate_floor) rate = -0.5 * slope;  // trust half the fitted decay
    }
    double q2 = std::exp(-2.0 * rate);  // |a|^2 ratio per step
    return env * env * q2 / (1.0 - q2);
  };
  r.tail_bound = side_tail(+1) + side_tail(-1);
  r.tolerance = r.tail_bound + 2.0 * q.tol;
  r.pass = std::abs(r.lhs - r.rhs_partial) <= r.tolerance;
  return r;
}

ReconstructionReport reconstruction_report(const FunctionSpec& spec,
                                           const CoefficientTable& table,
                                           const std::vector<double>& grid,
                                           int N, const QuadratureSpec& q,
                                           const PrecisionProfile& prec) {
  ReconstructionReport r;
  r.spec_id = spec.id();
  r.N = N;
  r.grid = grid;
  r.quad_meta = table.meta;
  for (double x : grid) {
    Complex fx = eval_spec(spec, x, prec);
    Complex sx = partial_sum(table, x, N);
    r.f_values.push_back(fx);
    r.partial_values.push_back(sx);
    r.truncation_error.push_back(std::abs(fx - sx));
    r.sup_error = std::max(r.sup_error, r.truncation_error.back());
  }
  // l2 error under mu via Pythagoras: ||f - S_N||^2 = ||f||^2 - sum |a_k|^2
  // (valid because S_N is the orthogonal projection onto the first modes)
  double norm2 = spec_norm2_mu(spec, q, prec);
  double partial2 = 0.0;
  for (int n = -N; n <= N; ++n) partial2 += std::norm(table.at(n));
  r.l2_error = std::sqrt(std::max(0.0, norm2 - partial2));
  return r;
}

}  // namespace zf
