#include "zf/coefficients.hpp"
#include <atomic>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <mutex>
#include <thread>

#include "zf/basis.hpp"
#include "zf/calibration.hpp"
#include "zf/gammafn.hpp"
#include "zf/quadrature.hpp"
#include "zf/theta.hpp"
#include "zf/whittaker.hpp"
#include "zf/xifn.hpp"
#include "zf/zetafn.hpp"

namespace zf {

std::string method_name(Method m) {
  switch (m) {
    case Method::Quadrature: return "quadrature";
    case Method::Residue: return "residue";
    case Method::WhittakerSeries: return "whittaker";
    case Method::ThetaIntegral: return "theta";
  }
  return "?";
}

Method method_from_name(const std::string& s) {
  if (s == "quadrature") return Method::Quadrature;
  if (s == "residue") return Method::Residue;
  if (s == "whittaker") return Method::WhittakerSeries;
  if (s == "theta") return Method::ThetaIntegral;
  throw ConfigError("unknown method: " + s);
}

namespace {

constexpr int kBasisMax = 64;    // grids resolve e^{2in atan 2y} up to |n| = 64
constexpr double kTauMax = 38.0; // and Dirichlet oscillation up to log k ~ 38

double rho(double y) { return 1.0 / (2.0 * kPi * (0.25 + y * y)); }

// ---------------------------------------------------------------------------
// Quadrature grids (positive half-line; the conjugate side is folded in
// analytically for conjugate-symmetric integrands).
// ---------------------------------------------------------------------------

struct Grid {
  std::vector<double> t;   // y (real-line route) or phi (angle route)
  std::vector<double> w;   // quadrature weights in the same variable
  std::vector<double> y;   // evaluation heights (equals t for the y-route)
};

// Panel ladder on [0, Y] resolving both oscillation families.
std::vector<double> y_edges(double Y, double per_panel_capacity) {
  std::vector<double> e{0.0};
  double x = 0.0;
  while (x < Y) {
    double h_basis = per_panel_capacity * (1.0 + 4.0 * x * x) / (4.0 * kBasisMax);
    double h = std::min({per_panel_capacity / kTauMax, h_basis});
    h = std::max(h, 0.01);
    x = std::min(Y, x + h);
    e.push_back(x);
  }
  return e;
}

std::vector<double> phi_edges_grid(double Y, double per_panel_capacity) {
  const double phi_y = 2.0 * std::atan(2.0 * Y);
  std::vector<double> e{0.0};
  double p = 0.0;
  while (p < phi_y) {
    double y = 0.5 * std::tan(0.5 * p);
    double omega = std::max(static_cast<double>(kBasisMax),
                            kTauMax * (1.0 + 4.0 * y * y) / 4.0);
    double h = std::max(per_panel_capacity / omega, 1e-9);
    p = std::min(phi_y, p + h);
    e.push_back(p);
  }
  return e;
}

Grid make_grid(const std::vector<double>& edges, bool is_phi, Scheme scheme,
               int gl_nodes) {
  Grid g;
  if (scheme == Scheme::GaussLegendreComposite || is_phi) {
    const GaussLegendre& gl = gauss_legendre(gl_nodes);
    for (size_t p = 0; p + 1 < edges.size(); ++p) {
      double c = 0.5 * (edges[p] + edges[p + 1]);
      double hw = 0.5 * (edges[p + 1] - edges[p]);
      for (size_t i = 0; i < gl.x.size(); ++i) {
        g.t.push_back(c + hw * gl.x[i]);
        g.w.push_back(hw * gl.w[i]);
      }
    }
  } else {
    // per-panel tanh-sinh at a fixed level; nodes clustered toward panel edges
    const int level = 3;
    const double h = std::ldexp(1.0, -level);
    std::vector<double> xs, ws;
    for (double t = 0.0; t <= 3.8; t += h) {
      double cs = std::cosh(0.5 * kPi * std::sinh(t));
      double xx = std::tanh(0.5 * kPi * std::sinh(t));
      double ww = h * 0.5 * kPi * std::cosh(t) / (cs * cs);
      if (1.0 - std::abs(xx) < 1e-17) break;
      xs.push_back(xx);
      ws.push_back(ww);
      if (t > 0.0) {
        xs.push_back(-xx);
        ws.push_back(ww);
      }
    }
    for (size_t p = 0; p + 1 < edges.size(); ++p) {
      double c = 0.5 * (edges[p] + edges[p + 1]);
      double hw = 0.5 * (edges[p + 1] - edges[p]);
      for (size_t i = 0; i < xs.size(); ++i) {
        g.t.push_back(c + hw * xs[i]);
        g.w.push_back(hw * ws[i]);
      }
    }
  }
  g.y.resize(g.t.size());
  for (size_t i = 0; i < g.t.size(); ++i)
    g.y[i] = is_phi ? 0.5 * std::tan(0.5 * g.t[i]) : g.t[i];
  return g;
}

// zeta(sigma + i y) along both grids, cached per (sigma, quadrature shape).
struct ZetaGrids {
  Grid gy, gphi;
  std::vector<Complex> zy, zphi;
};

struct GridKey {
  double sigma, y_max;
  int nodes;
  int scheme;
  bool operator<(const GridKey& o) const {
    if (sigma != o.sigma) return sigma < o.sigma;
    if (y_max != o.y_max) return y_max < o.y_max;
    if (nodes != o.nodes) return nodes < o.nodes;
    return scheme < o.scheme;
  }
};

void fill_zeta(const Grid& g, double sigma, const PrecisionProfile& prec,
               std::vector<Complex>& out) {
  out.resize(g.y.size());
  unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min(nthreads, 8u);
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(256);
      if (i >= g.y.size()) return;
      size_t hi = std::min(g.y.size(), i + 256);
      for (size_t j = i; j < hi; ++j)
        out[j] = zeta(Complex(sigma, g.y[j]), prec);
    }
  };
  for (unsigned k = 0; k + 1 < nthreads; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
}

std::shared_ptr<const ZetaGrids> get_zeta_grids(double sigma,
                                                const QuadratureSpec& q,
                                                const PrecisionProfile& prec) {
  static std::mutex mu;
  static std::map<GridKey, std::shared_ptr<const ZetaGrids>> cache;
  GridKey key{sigma, q.y_max, q.nodes, static_cast<int>(q.scheme)};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto zg = std::make_shared<ZetaGrids>();
  double cap = (q.scheme == Scheme::TanhSinh) ? 30.0 : 1.35 * q.nodes;
  zg->gy = make_grid(y_edges(q.y_max, cap), false, q.scheme, q.nodes);
  zg->gphi = make_grid(phi_edges_grid(q.y_max, 1.35 * q.nodes), true,
                       Scheme::GaussLegendreComposite, q.nodes);
  fill_zeta(zg->gy, sigma, prec, zg->zy);
  fill_zeta(zg->gphi, sigma, prec, zg->zphi);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, zg);
  return it->second;
}

// Xi-weighted values decay superexponentially; a short dedicated grid.
struct XiGrids {
  Grid gy, gphi;
  std::vector<Complex> fy, fphi;  // (1/4+y^2) Xi(y) values
};

std::shared_ptr<const XiGrids> get_xi_grids(const QuadratureSpec& q,
                                            const PrecisionProfile& prec) {
  static std::mutex mu;
  static std::shared_ptr<const XiGrids> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache) return cache;
  auto xg = std::make_shared<XiGrids>();
  const double Y = std::min(q.y_max, 90.0);
  double cap = 1.35 * q.nodes;
  xg->gy = make_grid(y_edges(Y, cap), false, Scheme::GaussLegendreComposite, q.nodes);
  xg->gphi = make_grid(phi_edges_grid(Y, cap), true, Scheme::GaussLegendreComposite,
                       q.nodes);
  auto fill = [&](const Grid& g, std::vector<Complex>& out) {
    out.resize(g.y.size());
    for (size_t i = 0; i < g.y.size(); ++i)
      out[i] = Complex((0.25 + g.y[i] * g.y[i]) * xi_critical(g.y[i], prec), 0.0);
  };
  fill(xg->gy, xg->fy);
  fill(xg->gphi, xg->fphi);
  cache = xg;
  return cache;
}

// ---------------------------------------------------------------------------
// Shared tail completion at the truncation height Y.
// ---------------------------------------------------------------------------

Complex osc_envelope(const FunctionSpec& s, double y) {
  switch (s.kind) {
    case Kind::InvZeta:
    case Kind::InvZetaConj:
      return Complex(1.0, 0.0);
    case Kind::ZetaCosV: {
      if (s.variant == WeightVariant::HalfAngle)
        return std::exp(-0.5 * s.v * std::log(1.0 + 4.0 * y * y));
      long vi = std::lround(s.v.real());
      double w = (1.0 - 4.0 * y * y) / (1.0 + 4.0 * y * y);
      double p = 1.0;
      for (long i = 0; i < std::labs(vi); ++i) p *= w;
      return Complex(vi >= 0 ? p : 1.0 / p, 0.0);
    }
    default:
      return Complex(0.0, 0.0);
  }
}

struct TailResult {
  Complex correction{0.0, 0.0};
  double err = 0.0;
};

// Tail completion beyond |y| = Y for the projection against a general kernel.
// k_pos/k_neg take positive arguments (the kernel at +y and -y).
TailResult tail_completion(const FunctionSpec& spec,
                           const std::function<Complex(double)>& k_pos,
                           const std::function<Complex(double)>& k_neg,
                           double Y) {
  TailResult r;
  if (spec.kind == Kind::XiWeighted) return r;  // superexponential decay
  if (spec.kind == Kind::Custom) {
    r.err = 1.0 / (kPi * Y);  // unmodelled: report the full mu tail mass
    return r;
  }

  // first-order boundary terms of the truncated oscillatory part:
  // positive side carries f ~ env * sum_k d_k e^{i sgn tau_k y}, the negative
  // side its conjugate reflection.
  std::vector<double> tau;
  std::vector<Complex> d;
  double sgn = -1.0;
  int m = spec_osc_model(spec, tau, d, sgn);
  const Complex env = osc_envelope(spec, Y);
  const Complex Ep = env * k_pos(Y) * rho(Y);
  const Complex En = std::conj(env) * k_neg(Y) * rho(Y);
  double err_osc = 0.0;
  for (int k = 0; k < m; ++k) {
    double omega = sgn * tau[static_cast<size_t>(k)];
    // int_Y^inf e^{i w y} E(y) dy ~ -E(Y) e^{i w Y} / (i w)
    Complex ph(std::cos(omega * Y), std::sin(omega * Y));
    Complex bnd_p = -Ep * ph / Complex(0.0, omega);
    Complex bnd_n = -En * std::conj(ph) / Complex(0.0, -omega);
    const Complex& dk = d[static_cast<size_t>(k)];
    r.correction += dk * bnd_p + std::conj(dk) * bnd_n;
    err_osc += std::abs(dk) * (std::abs(Ep) + std::abs(En)) * 2.5 /
               (Y * tau[static_cast<size_t>(k)] * tau[static_cast<size_t>(k)]);
  }
  // unmodelled Dirichlet content beyond the modelled k: RMS of boundary terms
  // with random phases
  if (m > 0 && spec.zeta_based()) {
    double s2 = 0.0;
    for (int k = 65; k <= 4096; ++k) {
      double a = std::pow(static_cast<double>(k), -spec.sigma) /
                 std::log(static_cast<double>(k));
      s2 += a * a;
    }
    err_osc += (std::abs(Ep) + std::abs(En)) * std::sqrt(s2);
  }
  r.err += err_osc;

  // non-oscillatory envelope tail, integrated exactly in u = 1/y
  if (spec.kind == Kind::ZetaCosV) {
    auto f = [&](double u) -> Complex {
      if (u <= 0.0) return Complex(0.0, 0.0);
      double y = 1.0 / u;
      double envv = spec_envelope(spec, y);
      return (envv * k_pos(y) + envv * k_neg(y)) * rho(y) / (u * u);
    };
    double est = 0.0;
    Complex envtail = integrate_tanh_sinh(f, 0.0, 1.0 / Y, 1e-13, &est);
    r.correction += envtail;
    r.err += est;
  }
  return r;
}

// ---------------------------------------------------------------------------
// projection core
// ---------------------------------------------------------------------------

Complex sum_route_kernel(const Grid& g, const std::vector<Complex>& fvals,
                         const std::function<Complex(double)>& k_pos,
                         const std::function<Complex(double)>& k_neg,
                         bool is_phi) {
  // int over both half-lines for conjugate-symmetric f (f(-y) = conj f(y))
  Complex acc(0.0, 0.0);
  for (size_t i = 0; i < g.t.size(); ++i) {
    double weight = is_phi ? g.w[i] / (2.0 * kPi) : g.w[i] * rho(g.t[i]);
    double y = g.y[i];
    acc += weight * (fvals[i] * k_pos(y) + std::conj(fvals[i]) * k_neg(y));
  }
  return acc;
}

}  // namespace

CoeffValue project_kernel(const FunctionSpec& spec,
                          const std::function<Complex(double)>& k_pos,
                          const std::function<Complex(double)>& k_neg,
                          Complex kernel_mu_integral, const QuadratureSpec& q,
                          const PrecisionProfile& prec) {
  spec.validate();
  q.validate();
  CoeffValue out;
  const Complex cinf = spec.c_infinity();

  if (spec.kind == Kind::XiWeighted) {
    auto xg = get_xi_grids(q, prec);
    out.route_a = sum_route_kernel(xg->gy, xg->fy, k_pos, k_neg, false);
    out.route_b = sum_route_kernel(xg->gphi, xg->fphi, k_pos, k_neg, true);
  } else if (spec.zeta_based()) {
    auto zg = get_zeta_grids(spec.sigma, q, prec);
    std::vector<Complex> fy(zg->zy.size()), fphi(zg->zphi.size());
    for (size_t i = 0; i < zg->zy.size(); ++i)
      fy[i] = eval_spec_subtracted_from_zeta(spec, zg->gy.y[i], zg->zy[i]);
    for (size_t i = 0; i < zg->zphi.size(); ++i)
      fphi[i] = eval_spec_subtracted_from_zeta(spec, zg->gphi.y[i], zg->zphi[i]);
    TailResult tail = tail_completion(spec, k_pos, k_neg, q.y_max);
    out.route_a =
        sum_route_kernel(zg->gy, fy, k_pos, k_neg, false) + tail.correction;
    out.route_b =
        sum_route_kernel(zg->gphi, fphi, k_pos, k_neg, true) + tail.correction;
    out.err_est += tail.err;
    out.route_a += cinf * kernel_mu_integral;
    out.route_b += cinf * kernel_mu_integral;
  } else {
    // custom callable: evaluate both half-lines directly (no symmetry assumed)
    double cap = 1.35 * q.nodes;
    Grid gy = make_grid(y_edges(q.y_max, cap), false, q.scheme, q.nodes);
    Grid gphi = make_grid(phi_edges_grid(q.y_max, cap), true,
                          Scheme::GaussLegendreComposite, q.nodes);
    auto eval_both = [&](const Grid& g, bool is_phi) {
      Complex acc(0.0, 0.0);
      for (size_t i = 0; i < g.t.size(); ++i) {
        double y = g.y[i];
        double weight = is_phi ? g.w[i] / (2.0 * kPi) : g.w[i] * rho(y);
        acc += weight *
               (spec.custom(y) * k_pos(y) + spec.custom(-y) * k_neg(y));
      }
      return acc;
    };
    out.route_a = eval_both(gy, false);
    out.route_b = eval_both(gphi, true);
    TailResult tail = tail_completion(spec, k_pos, k_neg, q.y_max);
    out.err_est += tail.err;
  }

  double spread = std::abs(out.route_a - out.route_b);
  if (spread > 2.0 * q.tol * (1.0 + std::abs(out.route_a)))
    throw RouteDisagreement("projection: real-line and periodic routes disagree for " +
                                spec.id(),
                            out.route_a, out.route_b);
  out.err_est += spread;
  out.value = out.route_a;
  return out;
}

CoeffValue coeff_direct_full(const FunctionSpec& spec, int n,
                             const QuadratureSpec& q,
                             const PrecisionProfile& prec) {
  auto k_pos = [n](double y) {
    double ang = 2.0 * n * std::atan(2.0 * y);
    return Complex(std::cos(ang), std::sin(ang));
  };
  auto k_neg = [n](double y) {
    double ang = 2.0 * n * std::atan(2.0 * y);
    return Complex(std::cos(ang), -std::sin(ang));
  };
  return project_kernel(spec, k_pos, k_neg,
                        Complex(n == 0 ? 1.0 : 0.0, 0.0), q, prec);
}

Complex coeff_direct(const FunctionSpec& spec, int n, const QuadratureSpec& q,
                     const PrecisionProfile& prec) {
  return coeff_direct_full(spec, n, q, prec).value;
}

double spec_norm2_mu(const FunctionSpec& spec, const QuadratureSpec& q,
                     const PrecisionProfile& prec, double* err) {
  spec.validate();
  q.validate();
  if (spec.kind == Kind::XiWeighted) {
    auto xg = get_xi_grids(q, prec);
    double a = 0.0, b = 0.0;
    for (size_t i = 0; i < xg->gy.t.size(); ++i)
      a += 2.0 * xg->gy.w[i] * rho(xg->gy.t[i]) * std::norm(xg->fy[i]);
    for (size_t i = 0; i < xg->gphi.t.size(); ++i)
      b += 2.0 * xg->gphi.w[i] / (2.0 * kPi) * std::norm(xg->fphi[i]);
    if (err) *err = std::abs(a - b) + 1e-14;
    return a;
  }
  if (spec.kind == Kind::Custom) {
    auto f = [&](double y) { return spec.custom(y); };
    InnerProductResult r = inner_product_routes(f, f, q, 8);
    if (err) *err = std::abs(r.real_line - r.periodic);
    return r.real_line.real();
  }

  // zeta-based: |f|^2 = |g + c|^2 = |g|^2 + 2 Re(conj(c) g) + |c|^2 on the
  // cached grids, each piece tail-completed.
  auto zg = get_zeta_grids(spec.sigma, q, prec);
  const Complex c = spec.c_infinity();
  double a = 0.0, b = 0.0;
  Complex ga(0.0, 0.0), gb(0.0, 0.0);
  for (size_t i = 0; i < zg->gy.t.size(); ++i) {
    Complex g = eval_spec_subtracted_from_zeta(spec, zg->gy.y[i], zg->zy[i]);
    double w = 2.0 * zg->gy.w[i] * rho(zg->gy.t[i]);
    a += w * std::norm(g);
    ga += w * g.real();  // 2 Re fold: g(-y) = conj g(y)
  }
  for (size_t i = 0; i < zg->gphi.t.size(); ++i) {
    Complex g = eval_spec_subtracted_from_zeta(spec, zg->gphi.y[i], zg->zphi[i]);
    double w = 2.0 * zg->gphi.w[i] / (2.0 * kPi);
    b += w * std::norm(g);
    gb += w * g.real();
  }

  // mean-square density of the truncated band: m_bar * osc_env^2 + envelope^2
  double mbar;
  if (spec.kind == Kind::ZetaCosV) {
    mbar = (zeta(Complex(2.0 * spec.sigma, 0.0), prec).real() - 1.0);
  } else {
    mbar = zeta(Complex(2.0 * spec.sigma, 0.0), prec).real() /
           zeta(Complex(4.0 * spec.sigma, 0.0), prec).real() - 1.0;
  }
  const double Y = q.y_max;
  auto msq_tail = [&](double u) -> Complex {
    if (u <= 0.0) return Complex(0.0, 0.0);
    double y = 1.0 / u;
    double e_osc = std::abs(osc_envelope(spec, y));
    double e_non = spec_envelope(spec, y);
    return Complex(2.0 * (mbar * e_osc * e_osc + e_non * e_non) * rho(y) / (u * u),
                   0.0);
  };
  double tail = integrate_tanh_sinh(msq_tail, 0.0, 1.0 / Y, 1e-13).real();

  double cross_a = 2.0 * (std::conj(c) * ga).real();
  double cross_b = 2.0 * (std::conj(c) * gb).real();
  double lhs_a = a + tail + cross_a + std::norm(c);
  double lhs_b = b + tail + cross_b + std::norm(c);
  if (err) *err = std::abs(lhs_a - lhs_b) + 4.0 * rho(Y) * (1.0 + mbar) + 1e-12;
  return lhs_a;
}

// ---------------------------------------------------------------------------
// Binomial residue sums.
// ---------------------------------------------------------------------------

namespace {

double fact(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}
double binom_coeff(int n, int k) { return fact(n) / (fact(k) * fact(n - k)); }

// (1/n!) sum_k C(n,k) sign (n-1)!/(k-1)! D_k with the convention knobs.
Complex binomial_residue(int n, const std::vector<Complex>& Dk,
                         const SumConvention& conv) {
  int kup = conv.upper_inclusive ? n : n - 1;
  Complex acc(0.0, 0.0);
  for (int k = 1; k <= kup; ++k) {
    double sign = conv.alternate_per_term ? (((n - k) % 2) ? -1.0 : 1.0)
                                          : ((n % 2) ? -1.0 : 1.0);
    acc += binom_coeff(n, k) * sign * (fact(n - 1) / fact(k - 1)) *
           Dk[static_cast<size_t>(k)];
  }
  acc /= fact(n);
  return conv.negate ? -acc : acc;
}

}  // namespace

Complex coeff_bar(double sigma, int n, const SumConvention& conv,
                  const PrecisionProfile& prec) {
  if (!(sigma > 0.5 && sigma < 1.0))
    throw DomainError("coeff_bar: sigma must lie in (1/2, 1)");
  if (!conv.validated)
    throw ConventionUnvalidated("coeff_bar: run the calibration pass first");
  if (n < 0) return Complex(0.0, 0.0);  // no poles are crossed for n < 0
  if (n == 0) return 1.0 / zeta(Complex(sigma + 0.5, 0.0), prec);
  auto Dk = inv_zeta_taylor(sigma + 0.5, n, prec);
  return binomial_residue(n, Dk, conv);
}

SSumResult s_sum(int n, double sigma, const ZeroTable& zeros, int k_trivial_max,
                 const PrecisionProfile& prec) {
  if (zeros.count() == 0) throw SanityError("s_sum: empty zero table");
  const size_t cnt = zeros.count();

  // conjugate-pair partial sums over the nontrivial zeros, ascending beta
  std::vector<Complex> prefix(cnt + 1, Complex(0.0, 0.0));
  for (size_t j = 0; j < cnt; ++j) {
    double b = zeros.betas[j];
    Complex zp = zeros.zeta_prime[j];
    Complex r1 = Complex(sigma, -b) / Complex(1.0 - sigma, b);
    Complex t1 = std::pow(r1, n) / (zp * Complex(1.0 - sigma, b) * Complex(sigma, -b));
    Complex r2 = Complex(sigma, b) / Complex(1.0 - sigma, -b);
    Complex t2 = std::pow(r2, n) /
                 (std::conj(zp) * Complex(1.0 - sigma, -b) * Complex(sigma, b));
    prefix[j + 1] = prefix[j] + t1 + t2;
  }

  SSumResult res;
  res.raw_partial = prefix[cnt];

  // Richardson extrapolation of the coherent ~c/B tail of the zero sum
  Complex zero_sum = prefix[cnt];
  double bound = 0.0;
  if (cnt >= 16) {
    size_t m2 = cnt / 2, m3 = (3 * cnt) / 4, m4 = cnt;
    double B2 = zeros.betas[m2 - 1], B3 = zeros.betas[m3 - 1], B4 = zeros.betas[m4 - 1];
    Complex c = (prefix[m2] - prefix[m4]) / (1.0 / B2 - 1.0 / B4);
    Complex s_inf = prefix[m4] - c / B4;
    Complex pred3 = s_inf + c / B3;
    double resid = std::abs(prefix[m3] - pred3);
    zero_sum = s_inf;
    bound = 5.0 * resid + 0.15 * std::abs(c) / B4 + 1e-12;
  } else {
    double last = std::abs(prefix[cnt] - prefix[cnt - 1]);
    bound = 10.0 * last * static_cast<double>(cnt);
    zero_sum = prefix[cnt];
  }

  // trivial-zero series (terms decay faster than geometrically)
  Complex triv(0.0, 0.0);
  for (int k = 1; k <= k_trivial_max; ++k) {
    double num = 0.5 + sigma + 2.0 * k;
    double den = 0.5 - sigma - 2.0 * k;
    double zp = zeta_prime_trivial(k, prec);
    Complex term = std::pow(Complex(num / den, 0.0), n) / (zp * den * num);
    triv += term;
  }
  {
    int k = k_trivial_max + 1;
    double num = 0.5 + sigma + 2.0 * k;
    double den = 0.5 - sigma - 2.0 * k;
    double zp = zeta_prime_trivial(k, prec);
    bound += 2.0 * std::abs(std::pow(num / den, n) / (zp * den * num));
  }

  res.value = zero_sum + triv;
  res.tail_bound = bound;
  return res;
}

Complex coeff_hat(double sigma, int n, const ZeroTable& zeros, int k_trivial_max,
                  const SumConvention& conv, double hat_sign, double max_tail,
                  double* tail_bound, const PrecisionProfile& prec) {
  if (!(sigma > 0.5 && sigma < 1.0))
    throw DomainError("coeff_hat: sigma must lie in (1/2, 1)");
  if (zeros.count() < 10) throw SanityError("coeff_hat: needs at least 10 zeros");
  if (hat_sign == 0.0)
    throw ConventionUnvalidated("coeff_hat: run the calibration pass first");
  if (n == 0) {
    if (tail_bound) *tail_bound = 0.0;
    return 1.0 / zeta(Complex(sigma + 0.5, 0.0), prec);
  }
  SSumResult S = s_sum(n, sigma, zeros, k_trivial_max, prec);
  if (S.tail_bound > max_tail)
    throw TailTooLarge("coeff_hat: S-tail bound " + std::to_string(S.tail_bound) +
                       " exceeds " + std::to_string(max_tail));
  if (tail_bound) *tail_bound = S.tail_bound;
  if (n < 0) return -hat_sign * S.value;
  // binomial part at a = sigma - 1/2 with the +s argument:
  // q^(k)(0) = (1/zeta)^(k)(sigma-1/2) = (-1)^k * inv_zeta_taylor[k]
  auto Dk = inv_zeta_taylor(sigma - 0.5, n, prec);
  for (int k = 1; k <= n; ++k)
    if (k % 2) Dk[static_cast<size_t>(k)] = -Dk[static_cast<size_t>(k)];
  Complex b = binomial_residue(n, Dk, conv);
  return b - hat_sign * S.value;
}

// ---------------------------------------------------------------------------
// cos^v family.
// ---------------------------------------------------------------------------

double coeff_tilde_negative(double sigma, int n) {
  if (!(sigma > 0.5 && sigma < 1.0))
    throw DomainError("coeff_tilde_negative: sigma must lie in (1/2, 1)");
  if (n >= 0) throw DomainError("coeff_tilde_negative: n must be negative");
  double pref = (2.0 * sigma * sigma - 4.0 * sigma + 2.5) /
                (2.0 * (sigma - 0.5) * (sigma - 0.5) * (1.5 - sigma) * (1.5 - sigma));
  return pref * std::pow((1.5 - sigma) / (sigma - 0.5), n);
}

namespace {

struct TildeParts {
  Complex value;
  double gK;  // |last summand|, for diagnostics
};

Complex tilde_term(double sigma, Complex v, int n, double x,
                   const PrecisionProfile& prec) {
  double L = std::log(x);
  Complex mu = -(v + 1.0) / 2.0;
  return std::exp(-sigma * std::log(x)) *
         std::exp(0.5 * v * std::log(0.25 * L)) *
         whittaker_w(Complex(static_cast<double>(n), 0.0), mu, L, prec) *
         gamma_reciprocal(1.0 + 0.5 * v + static_cast<double>(n));
}

TildeParts tilde_assemble(double sigma, Complex v, int n, long K,
                          const PrecisionProfile& prec) {
  Complex first = gamma(v + 1.0) * std::exp(-v * std::log(2.0)) *
                  gamma_reciprocal(0.5 * v + static_cast<double>(n) + 1.0) *
                  gamma_reciprocal(0.5 * v - static_cast<double>(n) + 1.0);
  Complex acc = first;
  for (long k = 2; k <= K; ++k)
    acc += tilde_term(sigma, v, n, static_cast<double>(k), prec);

  // Euler-Maclaurin completion: sum_{k>K} g(k) = int_K^inf g - g(K)/2 - g'(K)/12
  auto g = [&](double x) { return tilde_term(sigma, v, n, x, prec); };
  const double T = 60.0 / (sigma - 0.5) + 20.0;
  auto gt = [&](double t) {
    double x = static_cast<double>(K) * std::exp(t);
    return g(x) * x;  // dx = x dt
  };
  Complex integral(0.0, 0.0);
  double edges[] = {0.0, 1.0, 3.0, 8.0, 20.0, 45.0, 90.0};
  for (size_t i = 0; i + 1 < sizeof(edges) / sizeof(double); ++i) {
    double a = edges[i] * (T / 90.0), b = edges[i + 1] * (T / 90.0);
    integral += integrate_tanh_sinh(gt, a, b, 1e-13);
  }
  double hK = static_cast<double>(K) * 1e-4;
  Complex gK = g(static_cast<double>(K));
  Complex gprime = (g(static_cast<double>(K) + hK) - g(static_cast<double>(K) - hK)) /
                   (2.0 * hK);
  acc += integral - 0.5 * gK - gprime / 12.0;

  // zeta-pole crossing compensation
  double s0 = 1.5 - sigma;
  Complex G = std::exp(-v * std::log(4.0) * 0.5) *
              std::exp((static_cast<double>(n) - 0.5 * v - 1.0) * std::log(s0)) *
              std::exp((-static_cast<double>(n) - 0.5 * v - 1.0) * std::log(1.0 - s0));
  TildeParts p;
  p.value = acc - G;
  p.gK = std::abs(gK);
  return p;
}

}  // namespace

TildeSeriesResult coeff_tilde_series(double sigma, Complex v, int n, long k_max,
                                     double tol, const PrecisionProfile& prec) {
  if (!(sigma > 0.5)) throw DomainError("coeff_tilde_series: sigma must be > 1/2");
  if (n < 1) throw DomainError("coeff_tilde_series: series form is n >= 1 only");
  if (v.real() <= -1.0)
    throw DomainError("coeff_tilde_series: Re(v) must exceed -1");
  long K = std::max(64L, k_max);
  for (int attempt = 0; attempt < 4; ++attempt) {
    TildeParts a = tilde_assemble(sigma, v, n, K, prec);
    TildeParts b = tilde_assemble(sigma, v, n, 2 * K, prec);
    double diff = std::abs(a.value - b.value);
    if (diff <= tol) {
      TildeSeriesResult r;
      r.value = b.value;
      r.err_est = diff + 1e-12;
      r.k_used = static_cast<int>(2 * K);
      return r;
    }
    K *= 4;
    if (K > 400000L)
      throw SlowConvergence("coeff_tilde_series: tail estimate still " +
                            std::to_string(diff) + " at k_max " + std::to_string(K));
  }
  throw SlowConvergence("coeff_tilde_series: did not converge");
}

// ---------------------------------------------------------------------------
// Xi family.
// ---------------------------------------------------------------------------

double theta_log_integral(int n, const QuadratureSpec& q,
                          const PrecisionProfile& prec) {
  if (n < 1 || n > 12) throw DomainError("theta_log_integral: n must be in 1..12");
  // Below y_lo the integrand is superexponentially small in truth but drowns
  // in summand cancellation noise; the omitted true mass is < 1e-11.
  double y_lo = (n <= 2) ? 0.02 : (n <= 4 ? 0.15 : 0.30);
  auto f = [&](double y) {
    return Complex(std::pow(std::log(y), n) * theta_d_operator(y, n, prec), 0.0);
  };
  double est = 0.0;
  Complex acc = integrate_tanh_sinh(f, y_lo, 0.5, std::min(q.tol, 1e-11), &est);
  acc += integrate_tanh_sinh(f, 0.5, 1.0, std::min(q.tol, 1e-11), &est);
  return -acc.real() / fact(n);
}

double theta_log_integral_upper(int n, const QuadratureSpec& q,
                                const PrecisionProfile& prec) {
  if (n < 1 || n > 12) throw DomainError("theta_log_integral_upper: n must be in 1..12");
  auto f = [&](double y) {
    return Complex(std::pow(std::log(y), n - 1) * theta_d_operator(y, n, prec), 0.0);
  };
  Complex acc = integrate_tanh_sinh(f, 1.0, 2.0, std::min(q.tol, 1e-11));
  acc += integrate_tanh_sinh(f, 2.0, 4.0, std::min(q.tol, 1e-11));
  acc += integrate_tanh_sinh(f, 4.0, 8.0, std::min(q.tol, 1e-11));
  return acc.real() / fact(n - 1);
}

double xi_residue_sum(int n, int at, const PrecisionProfile& prec) {
  if (n < 1 || n > 12) throw DomainError("xi_residue_sum: n must be in 1..12");
  if (at != 0 && at != 1) throw DomainError("xi_residue_sum: at must be 0 or 1");
  auto d = xi_derivatives(Complex(static_cast<double>(at), 0.0), n - 1, prec);
  double acc = 0.0;
  for (int k = 0; k <= n - 1; ++k)
    acc += binom_coeff(n - 1, k) * (fact(n) / fact(k + 1)) *
           d[static_cast<size_t>(k)].real();
  double sign = (n % 2) ? -1.0 : 1.0;
  return sign * acc / fact(n - 1);
}

double xi_residue_sum_alternating(int n, int at, const PrecisionProfile& prec) {
  if (n < 1 || n > 12) throw DomainError("xi_residue_sum_alternating: n must be in 1..12");
  auto d = xi_derivatives(Complex(static_cast<double>(at), 0.0), n - 1, prec);
  double acc = 0.0;
  for (int k = 0; k <= n - 1; ++k) {
    double sign = ((n - 1 - k) % 2) ? -1.0 : 1.0;
    acc += sign * binom_coeff(n - 1, k) * (fact(n) / fact(k + 1)) *
           d[static_cast<size_t>(k)].real();
  }
  return acc / fact(n - 1);
}

Complex coeff_xi(int n, Method method, const QuadratureSpec& q, double xi_sign,
                 const PrecisionProfile& prec) {
  if (method == Method::Quadrature) {
    return coeff_direct(FunctionSpec::xi_weighted(), n, q, prec);
  }
  if (method != Method::ThetaIntegral)
    throw DomainError("coeff_xi: method must be quadrature or theta");
  if (std::abs(n) > 12)
    throw DomainError("coeff_xi: |n| <= 12 for the theta route");
  if (n == 0) {
    // a''_0 = Theta(1): the Mellin inversion of xi evaluated at y = 1.
    return Complex(theta_big(1.0, prec), 0.0);
  }
  if (xi_sign == 0.0)
    throw CalibrationRequired("coeff_xi: residue-sum sign not calibrated");
  int m = std::abs(n);
  double I = theta_log_integral_upper(m, q, prec);
  if (n > 0) return Complex(I + xi_sign * xi_residue_sum(m, 1, prec), 0.0);
  return Complex(I - xi_sign * xi_residue_sum_alternating(m, 0, prec), 0.0);
}

// ---------------------------------------------------------------------------
// Tables.
// ---------------------------------------------------------------------------

Complex CoefficientTable::at(int n) const {
  auto it = values.find(n);
  if (it == values.end())
    throw IndexRangeError("CoefficientTable: index " + std::to_string(n) +
                          " outside [" + std::to_string(n_min) + "," +
                          std::to_string(n_max) + "]");
  return it->second;
}

double CoefficientTable::err_at(int n) const {
  auto it = err.find(n);
  return it == err.end() ? 0.0 : it->second;
}

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string table_meta(const FunctionSpec& spec, int n_min, int n_max,
                       Method method, const QuadratureSpec& q,
                       const TableDeps& deps, const PrecisionProfile& prec) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "spec=%s;method=%s;n=[%d,%d];q={nodes=%d,y_max=%.17g,tol=%.17g,"
                "scheme=%s};prec={em=%d,bern=%d,r=%.17g,dn=%d,tol=%.17g};zeros=%zu",
                spec.id().c_str(), method_name(method).c_str(), n_min, n_max,
                q.nodes, q.y_max, q.tol,
                q.scheme == Scheme::TanhSinh ? "tanh-sinh" : "gauss-legendre-composite",
                prec.em_terms, prec.em_bernoulli, prec.deriv_radius,
                prec.deriv_nodes, prec.series_tol,
                deps.zeros ? deps.zeros->count() : size_t{0});
  std::string m = buf;
  if (deps.calib) m += ";calib=" + calibration_signature(*deps.calib);
  return m;
}

}  // namespace

CoefficientTable build_table(const FunctionSpec& spec, int n_min, int n_max,
                             Method method, const QuadratureSpec& q,
                             const TableDeps& deps, const PrecisionProfile& prec) {
  if (n_min > n_max) throw DomainError("build_table: empty index range");
  spec.validate();
  CoefficientTable t;
  t.spec = spec;
  t.n_min = n_min;
  t.n_max = n_max;
  t.method = method;
  t.meta = table_meta(spec, n_min, n_max, method, q, deps, prec);
  t.meta_hash = fnv1a(t.meta);

  auto compute_one = [&](int n) -> std::pair<Complex, double> {
    switch (method) {
      case Method::Quadrature: {
        CoeffValue cv = coeff_direct_full(spec, n, q, prec);
        return {cv.value, cv.err_est};
      }
      case Method::Residue: {
        if (spec.kind == Kind::InvZeta) {
          if (!deps.calib) throw CalibrationRequired("residue table needs calibration");
          return {coeff_bar(spec.sigma, n, deps.calib->bar, prec), 1e-10};
        }
        if (spec.kind == Kind::InvZetaConj) {
          if (!deps.calib || !deps.zeros)
            throw CalibrationRequired("hat residue table needs zeros + calibration");
          double tb = 0.0;
          Complex v = coeff_hat(spec.sigma, n, *deps.zeros, 30, deps.calib->bar,
                                deps.calib->hat_sign, 1e-2, &tb, prec);
          return {v, tb};
        }
        throw DomainError("residue method applies to inv-zeta kinds only");
      }
      case Method::WhittakerSeries: {
        if (spec.kind != Kind::ZetaCosV || spec.variant != WeightVariant::HalfAngle)
          throw DomainError("whittaker method applies to zeta-cos-v (half-angle) only");
        if (n < 1)
          throw DomainError("whittaker series form is n >= 1 only");
        TildeSeriesResult r = coeff_tilde_series(spec.sigma, spec.v, n, 10000,
                                                 std::max(q.tol, 1e-9), prec);
        return {r.value, r.err_est};
      }
      case Method::ThetaIntegral: {
        if (spec.kind != Kind::XiWeighted)
          throw DomainError("theta method applies to xi-weighted only");
        if (!deps.calib) throw CalibrationRequired("theta table needs calibration");
        return {coeff_xi(n, Method::ThetaIntegral, q, deps.calib->xi_sign, prec),
                1e-9};
      }
    }
    throw DomainError("build_table: bad method");
  };

  // warm the shared grids before fanning out
  if (method == Method::Quadrature) (void)coeff_direct_full(spec, 0, q, prec);

  const int count = n_max - n_min + 1;
  unsigned nthreads = std::min<unsigned>(
      std::max(1u, std::thread::hardware_concurrency()), 8u);
  std::vector<std::future<std::vector<std::pair<Complex, double>>>> futs;
  int chunk = (count + static_cast<int>(nthreads) - 1) / static_cast<int>(nthreads);
  for (int lo = n_min; lo <= n_max; lo += chunk) {
    int hi = std::min(n_max, lo + chunk - 1);
    futs.push_back(std::async(std::launch::async, [&, lo, hi] {
      std::vector<std::pair<Complex, double>> vals;
      for (int n = lo; n <= hi; ++n) vals.push_back(compute_one(n));
      return vals;
    }));
  }
  int lo = n_min;
  for (auto& f : futs) {
    auto vals = f.get();
    for (size_t i = 0; i < vals.size(); ++i) {
      t.values[lo + static_cast<int>(i)] = vals[i].first;
      t.err[lo + static_cast<int>(i)] = vals[i].second;
    }
    lo += static_cast<int>(vals.size());
  }
  return t;
}

}  // namespace zf
