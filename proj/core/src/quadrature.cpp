#include "zf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <map>

#include "zf/cauchy.hpp"

namespace zf {

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes/weights on [-1, 1], Newton on P_n.
// ---------------------------------------------------------------------------
const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussLegendre gl;
  gl.x.resize(static_cast<size_t>(n));
  gl.w.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Tricomi initial guess.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p0 = 0.0, p1 = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      p0 = 1.0;
      p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    p0 = 1.0;
    p1 = x;
    for (int j = 2; j <= n; ++j) {
      double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    gl.x[static_cast<size_t>(i)] = x;
    gl.w[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(n, std::move(gl)).first->second;
}

// ---------------------------------------------------------------------------
// tanh-sinh on [-1, 1]: level m has step h = 2^-m.
// ---------------------------------------------------------------------------
static void tanh_sinh_level(int level, std::vector<double>& x,
                            std::vector<double>& w) {
  x.clear();
  w.clear();
  const double h = std::ldexp(1.0, -level);
  const double tmax = 3.8;  // beyond this the weights underflow
  for (double t = (level == 0) ? 0.0 : h, step = (level == 0) ? h : 2.0 * h;
       t <= tmax; t += step) {
    double cs = std::cosh(0.5 * kPi * std::sinh(t));
    double xx = std::tanh(0.5 * kPi * std::sinh(t));
    double ww = 0.5 * kPi * std::cosh(t) / (cs * cs);
    if (1.0 - std::abs(xx) < 1e-17) break;
    if (t == 0.0) {
      x.push_back(0.0);
      w.push_back(ww);
    } else {
      x.push_back(xx);
      w.push_back(ww);
      x.push_back(-xx);
      w.push_back(ww);
    }
  }
}

Complex integrate_tanh_sinh(const std::function<Complex(double)>& f, double a,
                            double b, double tol, double* err_est) {
  const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  Complex prev(0.0, 0.0);
  Complex acc(0.0, 0.0);
  double h = 1.0;
  std::vector<double> x, w;
  for (int level = 0; level <= 12; ++level) {
    tanh_sinh_level(level, x, w);
    for (size_t i = 0; i < x.size(); ++i) acc += w[i] * f(c + hw * x[i]);
    Complex cur = acc * (hw * h);
    if (level >= 2) {
      double diff = std::abs(cur - prev);
      if (diff <= tol * (1.0 + std::abs(cur))) {
        if (err_est) *err_est = diff;
        return cur;
      }
    }
    prev = cur;
    h *= 0.5;
  }
  if (err_est) *err_est = std::abs(acc * (hw * 2.0 * h) - prev);
  throw ToleranceError("tanh-sinh refinement did not reach tolerance");
}

// ---------------------------------------------------------------------------
// Composite Gauss-Legendre over explicit panel edges.
// ---------------------------------------------------------------------------
Complex integrate_panels_gl(const std::function<Complex(double)>& f,
                            const std::vector<double>& edges, int nodes) {
  const GaussLegendre& gl = gauss_legendre(nodes);
  Complex acc(0.0, 0.0);
  for (size_t p = 0; p + 1 < edges.size(); ++p) {
    const double c = 0.5 * (edges[p] + edges[p + 1]);
    const double hw = 0.5 * (edges[p + 1] - edges[p]);
    Complex panel(0.0, 0.0);
    for (size_t i = 0; i < gl.x.size(); ++i) panel += gl.w[i] * f(c + hw * gl.x[i]);
    acc += panel * hw;
  }
  return acc;
}

std::vector<double> panel_edges(double a, double b, double max_width,
                                double fine_until, double fine_width) {
  std::vector<double> e;
  e.push_back(a);
  double x = a;
  while (x < b) {
    double w = (std::abs(x) < fine_until) ? fine_width : max_width;
    // widen gradually between the fine and coarse regions
    if (std::abs(x) >= fine_until && std::abs(x) < 4.0 * fine_until)
      w = std::min(max_width, fine_width * 8.0);
    x = std::min(b, x + w);
    e.push_back(x);
  }
  return e;
}

Complex integrate_adaptive(const std::function<Complex(double)>& f, double a,
                           double b, const QuadratureSpec& q, double* err_est) {
  if (q.scheme == Scheme::TanhSinh)
    return integrate_tanh_sinh(f, a, b, q.tol, err_est);
  // composite GL with panel doubling until agreement
  int panels = 8;
  Complex prev(0.0, 0.0);
  for (int iter = 0; iter < 10; ++iter) {
    std::vector<double> edges(static_cast<size_t>(panels) + 1);
    for (int i = 0; i <= panels; ++i)
      edges[static_cast<size_t>(i)] = a + (b - a) * i / panels;
    Complex cur = integrate_panels_gl(f, edges, q.nodes);
    if (iter > 0) {
      double diff = std::abs(cur - prev);
      if (diff <= q.tol * (1.0 + std::abs(cur))) {
        if (err_est) *err_est = diff;
        return cur;
      }
    }
    prev = cur;
    panels *= 2;
  }
  throw ToleranceError("composite GL refinement did not reach tolerance");
}

// ---------------------------------------------------------------------------
// Cauchy-circle derivatives.
// ---------------------------------------------------------------------------
std::vector<Complex> cauchy_derivatives(const std::function<Complex(Complex)>& f,
                                        Complex center, double r, int kmax,
                                        int nodes) {
  std::vector<Complex> vals(static_cast<size_t>(nodes));
  for (int j = 0; j < nodes; ++j) {
    double th = 2.0 * kPi * j / nodes;
    vals[static_cast<size_t>(j)] = f(center + Complex(r * std::cos(th), r * std::sin(th)));
  }
  std::vector<Complex> out(static_cast<size_t>(kmax) + 1);
  double fact = 1.0;
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) fact *= k;
    Complex acc(0.0, 0.0);
    for (int j = 0; j < nodes; ++j) {
      double th = 2.0 * kPi * j / nodes;
      double ang = -k * th;
      acc += vals[static_cast<size_t>(j)] * Complex(std::cos(ang), std::sin(ang));
    }
    out[static_cast<size_t>(k)] = acc * (fact / (nodes * std::pow(r, k)));
  }
  return out;
}

std::vector<Complex> cauchy_derivatives_checked(
    const std::function<Complex(Complex)>& f, Complex center, double r,
    int kmax, int nodes, double tol) {
  auto d1 = cauchy_derivatives(f, center, r, kmax, nodes);
  auto d2 = cauchy_derivatives(f, center, 0.5 * r, kmax, nodes);
  double fact = 1.0;
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) fact *= k;
    double diff = std::abs(d1[static_cast<size_t>(k)] - d2[static_cast<size_t>(k)]);
    double scale = std::max(std::abs(d1[static_cast<size_t>(k)]), 1.0);
    // the halved radius amplifies float noise by k!/(r/2)^k
    double noise_floor = 1e-13 * fact / std::pow(0.5 * r, k);
    if (diff > tol * scale + noise_floor)
      throw ToleranceError("cauchy_derivatives: radius halving disagrees at k=" +
                           std::to_string(k));
  }
  return d1;  // the wider circle has the smaller roundoff amplification
}

}  // namespace zf
