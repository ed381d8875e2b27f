#pragma once

#include <functional>
#include <vector>

#include "zf/types.hpp"

namespace zf {

struct GaussLegendre {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// Cached nodes/weights for an n-point rule.
const GaussLegendre& gauss_legendre(int n);

// Single-interval tanh-sinh with level doubling until |change| <= tol*(1+|I|).
Complex integrate_tanh_sinh(const std::function<Complex(double)>& f, double a,
                            double b, double tol, double* err_est = nullptr);

// Fixed composite GL over explicit panel edges (no refinement check).
Complex integrate_panels_gl(const std::function<Complex(double)>& f,
                            const std::vector<double>& edges, int nodes);

// Panel edges on [a,b]: width fine_width while |x| < fine_until, widening to
// max_width outside.
std::vector<double> panel_edges(double a, double b, double max_width,
                                double fine_until, double fine_width);

// Scheme-dispatching adaptive integral on [a,b].
Complex integrate_adaptive(const std::function<Complex(double)>& f, double a,
                           double b, const QuadratureSpec& q,
                           double* err_est = nullptr);

}  // namespace zf
