#include "zf/basis.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zf/quadrature.hpp"

namespace zf {

double mu_density(double y) { return 1.0 / (2.0 * kPi * (0.25 + y * y)); }

double phi_of_x(double x) { return 2.0 * std::atan(2.0 * x); }

double x_of_phi(double phi) {
  if (!(std::abs(phi) < kPi)) throw DomainError("x_of_phi: |phi| must be < pi");
  return 0.5 * std::tan(0.5 * phi);
}

Complex basis_e(int n, double x) {
  double ang = -2.0 * n * std::atan(2.0 * x);
  return Complex(std::cos(ang), std::sin(ang));
}

double dirichlet_kernel(int N, double x) {
  double u = std::remainder(x, 2.0 * kPi);
  double a = N + 0.5;
  if (std::abs(u) < 1e-6) {
    // sin(a u)/sin(u/2) = 2a (1 - u^2 (4a^2 - 1)/24 + ...)
    return 2.0 * a * (1.0 - u * u * (4.0 * a * a - 1.0) / 24.0);
  }
  return std::sin(a * u) / std::sin(0.5 * u);
}

double fejer_kernel(int N, double x) {
  double u = std::remainder(x, 2.0 * kPi);
  double b = 0.5 * (N + 1.0);
  double t;
  if (std::abs(u) < 1e-6) {
    t = 2.0 * b * (1.0 - u * u * (4.0 * b * b - 1.0) / 24.0);
  } else {
    t = std::sin(b * u) / std::sin(0.5 * u);
  }
  return t * t / (N + 1.0);
}

namespace {

// The far sliver is integrated in phi-space; evaluation heights are capped at
// kYHard and the last scrap of the circle is folded in by an endpoint sample
// (its width is ~1/kYHard, so even an O(1) integrand contributes ~6e-8 and the
// sampling error is far below that).
constexpr double kYHard = 5.0e6;

std::vector<double> phi_edges(double y_max, int max_freq) {
  std::vector<double> e;
  double w = std::min(0.25, 2.0 * kPi / (3.0 * std::max(1, max_freq)));
  for (double p = 0.0; p < 2.2; p += w) e.push_back(p);
  for (double y = 1.5; y < y_max; y *= 1.6) e.push_back(2.0 * std::atan(2.0 * y));
  e.push_back(2.0 * std::atan(2.0 * y_max));
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

Complex integrate_panels_refined(const std::function<Complex(double)>& f,
                                 std::vector<double> edges, int nodes,
                                 double tol, const char* what) {
  Complex prev = integrate_panels_gl(f, edges, nodes);
  for (int iter = 0; iter < 4; ++iter) {
    std::vector<double> e2;
    e2.reserve(edges.size() * 2);
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
      e2.push_back(edges[i]);
      e2.push_back(0.5 * (edges[i] + edges[i + 1]));
    }
    e2.push_back(edges.back());
    Complex cur = integrate_panels_gl(f, e2, nodes);
    if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
    prev = cur;
    edges = std::move(e2);
  }
  throw ToleranceError(std::string(what) + ": panel refinement did not settle");
}

}  // namespace

InnerProductResult inner_product_routes(const std::function<Complex(double)>& f,
                                        const std::function<Complex(double)>& g,
                                        const QuadratureSpec& q,
                                        int max_frequency_hint) {
  q.validate();
  auto integrand_y = [&](double y) { return f(y) * std::conj(g(y)) * mu_density(y); };
  auto integrand_phi = [&](double phi) {
    double y = 0.5 * std::tan(0.5 * phi);
    return f(y) * std::conj(g(y)) / (2.0 * kPi);
  };

  const double Y = q.y_max;
  const double phi_y = 2.0 * std::atan(2.0 * Y);
  const double phi_end = 2.0 * std::atan(2.0 * kYHard);

  // Shared far-sliver pieces: [phi_y, phi_end] by GL, plus the endpoint-sampled
  // scrap [phi_end, pi).
  const GaussLegendre& gl16 = gauss_legendre(16);
  Complex sliver(0.0, 0.0);
  {
    double hw = 0.5 * (phi_end - phi_y), c = 0.5 * (phi_end + phi_y);
    for (size_t i = 0; i < gl16.x.size(); ++i) {
      double p = c + hw * gl16.x[i];
      sliver += hw * gl16.w[i] * (integrand_phi(p) + integrand_phi(-p));
    }
    double scrap = kPi - phi_end;
    sliver += scrap * (integrand_phi(phi_end) + integrand_phi(-phi_end));
  }

  // Real-line route on [-Y, Y].
  double fine_w = 2.0 * kPi / (4.0 * std::max(1, max_frequency_hint));
  std::vector<double> yedges = panel_edges(-Y, Y, 64.0, 4.0, fine_w);
  Complex main;
  if (q.scheme == Scheme::TanhSinh) {
    double ptol = std::max(1e-15, q.tol * 1e-3);
    Complex acc(0.0, 0.0);
    for (size_t i = 0; i + 1 < yedges.size(); ++i)
      acc += integrate_tanh_sinh(integrand_y, yedges[i], yedges[i + 1], ptol);
    main = acc;
  } else {
    main = integrate_panels_refined(integrand_y, yedges, q.nodes, q.tol * 1e-2,
                                    "inner_product real-line");
  }

  InnerProductResult r;
  r.real_line = main + sliver;

  // Periodic route: composite GL on [-phi_y, phi_y] (independent nodes in the
  // angle variable), then the same sliver completion.
  std::vector<double> pe = phi_edges(Y, max_frequency_hint);
  std::vector<double> full;
  full.reserve(2 * pe.size());
  for (auto it = pe.rbegin(); it != pe.rend(); ++it)
    if (*it > 0.0) full.push_back(-*it);
  for (double p : pe) full.push_back(p);
  r.periodic = integrate_panels_refined(integrand_phi, full, q.nodes, q.tol * 1e-2,
                                        "inner_product periodic") +
               sliver;
  return r;
}

Complex inner_product(const std::function<Complex(double)>& f,
                      const std::function<Complex(double)>& g,
                      const QuadratureSpec& q, int max_frequency_hint) {
  InnerProductResult r = inner_product_routes(f, g, q, max_frequency_hint);
  double diff = std::abs(r.real_line - r.periodic);
  if (diff > 2.0 * q.tol * (1.0 + std::abs(r.real_line)))
    throw ToleranceError("inner_product: real-line and periodic routes disagree");
  return r.real_line;
}

}  // namespace zf
