#include "zf/theta.hpp"

#include <cmath>
#include <vector>

namespace zf {
namespace {

constexpr int kMaxSummands = 400;

}  // namespace

double theta_big(double y, const PrecisionProfile& prec) {
  if (!(y > 0.0)) throw DomainError("theta_big: y must be > 0");
  double sum = 0.0;
  for (int n = 1; n <= kMaxSummands; ++n) {
    const double n2 = static_cast<double>(n) * n;
    const double t = (2.0 * kPi * kPi * n2 * n2 * y * y - 3.0 * kPi * n2) *
                     std::exp(-kPi * n2 * y * y);
    sum += t;
    if (n > 4 && std::abs(t) < prec.series_tol * 1e-6 * (std::abs(sum) + 1.0)) break;
  }
  return 2.0 * y * y * sum;
}

double theta_d_operator(double y, int n, const PrecisionProfile& prec) {
  if (!(y > 0.0)) throw DomainError("theta_d_operator: y must be > 0");
  if (n < 0 || n > 12) throw DomainError("theta_d_operator: n must be in 0..12");
  if (n == 0) return theta_big(y, prec);

  // Summand k of Theta: p(y) e^{-c y^2} with p = 4 pi^2 k^4 y^4 - 6 pi k^2 y^2,
  // c = pi k^2. Apply (y d/dy): coefficient a_m of y^m maps to m*a_m at y^m and
  // -2c*a_m at y^{m+2}.
  double total = 0.0;
  const int deg = 4 + 2 * n;
  std::vector<double> p(static_cast<size_t>(deg) + 3, 0.0), q(p.size(), 0.0);
  for (int k = 1; k <= kMaxSummands; ++k) {
    const double k2 = static_cast<double>(k) * k;
    const double c = kPi * k2;
    std::fill(p.begin(), p.end(), 0.0);
    p[4] = 4.0 * kPi * kPi * k2 * k2;
    p[2] = -6.0 * kPi * k2;
    int d = 4;
    for (int j = 0; j < n; ++j) {
      std::fill(q.begin(), q.end(), 0.0);
      for (int m = 0; m <= d; ++m) {
        if (p[static_cast<size_t>(m)] == 0.0) continue;
        q[static_cast<size_t>(m)] += m * p[static_cast<size_t>(m)];
        q[static_cast<size_t>(m) + 2] -= 2.0 * c * p[static_cast<size_t>(m)];
      }
      d += 2;
      std::swap(p, q);
    }
    double val = 0.0;
    double ym = 1.0;
    for (int m = 0; m <= d; ++m) {
      if (p[static_cast<size_t>(m)] != 0.0) val += p[static_cast<size_t>(m)] * ym;
      ym *= y;
    }
    val *= std::exp(-c * y * y);
    total += val;
    if (k > 4 && std::abs(val) < prec.series_tol * 1e-6 * (std::abs(total) + 1.0)) break;
  }
  return total;
}

}  // namespace zf
