#include "zf/whittaker.hpp"

#include <cmath>
#include <vector>

#include "zf/gammafn.hpp"

namespace zf {
namespace {

bool near_int(double x, double tol = 1e-9) { return std::abs(x - std::round(x)) < tol; }

bool is_real_nonpos_int(Complex a, double tol = 1e-11) {
  return std::abs(a.imag()) < tol && a.real() < 0.5 && near_int(a.real(), tol);
}

Complex pochhammer(Complex x, int n) {
  Complex p(1.0, 0.0);
  for (int i = 0; i < n; ++i) p *= x + static_cast<double>(i);
  return p;
}

// --- terminating branch: 1/2 + mu - gamma = -m ------------------------------
// (2mu+1)_r vanishes at some r <= m, which makes the finite series singular.
bool terminating_is_singular(Complex mu, int m) {
  Complex b = 2.0 * mu + 1.0;
  return is_real_nonpos_int(b) && -std::lround(b.real()) <= m - 1;
}

Complex w_terminating(Complex g, Complex mu, double z, int m) {
  // W = [prod_{j=1..m} (-2mu - j)] z^{mu+1/2} e^{-z/2} 1F1(-m; 2mu+1; z)
  Complex b = 2.0 * mu + 1.0;
  if (terminating_is_singular(mu, m))
    throw DegenerateParamError("whittaker_w: singular Gamma prefactor without cancelling companion");
  Complex coeff(1.0, 0.0);
  for (int j = 1; j <= m; ++j) coeff *= -2.0 * mu - static_cast<double>(j);
  Complex sum(0.0, 0.0), term(1.0, 0.0);
  for (int r = 0; r <= m; ++r) {
    if (r > 0) term *= (static_cast<double>(-m + r - 1)) / (b + static_cast<double>(r - 1)) * z / static_cast<double>(r);
    sum += term;
  }
  return coeff * std::exp((mu + 0.5) * std::log(z) - 0.5 * z) * sum;
}

// --- M-combination (generic mu) ---------------------------------------------
Complex w_mcomb(Complex g, Complex mu, double z, double* cancellation) {
  Complex a1 = mu - g + 0.5, b1 = 2.0 * mu + 1.0;
  Complex a2 = -mu - g + 0.5, b2 = -2.0 * mu + 1.0;
  Complex c1 = gamma(-2.0 * mu) * gamma_reciprocal(0.5 - mu - g);
  Complex c2 = gamma(2.0 * mu) * gamma_reciprocal(0.5 + mu - g);
  Complex m1 = std::exp((mu + 0.5) * std::log(z) - 0.5 * z) * hyp1f1(a1, b1, z);
  Complex m2 = std::exp((-mu + 0.5) * std::log(z) - 0.5 * z) * hyp1f1(a2, b2, z);
  Complex w = c1 * m1 + c2 * m2;
  if (cancellation) {
    double big = std::max(std::abs(c1 * m1), std::abs(c2 * m2));
    *cancellation = big / std::max(std::abs(w), 1e-300);
  }
  return w;
}

// --- logarithmic U-series at integer b --------------------------------------
// U(a, n+1, z), n >= 0 integer, a not a nonpositive integer:
//   U = (-1)^{n+1}/(n! Gamma(a-n)) sum_{r>=0} (a)_r/((n+1)_r r!) z^r
//         * [ln z + psi(a+r) - psi(1+r) - psi(n+1+r)]
//     + (n-1)!/Gamma(a) z^{-n} sum_{r=0}^{n-1} (a-n)_r/((1-n)_r r!) z^r
// (second line absent for n = 0).
Complex hypu_int_b(Complex a, int n, double z) {
  const double lz = std::log(z);
  Complex front = gamma_reciprocal(a - static_cast<double>(n)) *
                  ((n % 2 == 0) ? -1.0 : 1.0);
  double nfact = 1.0;
  for (int i = 2; i <= n; ++i) nfact *= i;
  front /= nfact;

  Complex series(0.0, 0.0);
  Complex term(1.0, 0.0);
  Complex psi_a = digamma(a);
  double psi_1 = -0.57721566490153286061;  // psi(1)
  double psi_n1 = psi_1;
  for (int i = 1; i <= n; ++i) psi_n1 += 1.0 / i;  // psi(n+1)
  Complex pa = psi_a;
  double p1 = psi_1, pn = psi_n1;
  for (int r = 0; r < 400; ++r) {
    if (r > 0) {
      term *= (a + static_cast<double>(r - 1)) * z /
              ((static_cast<double>(n) + static_cast<double>(r)) * static_cast<double>(r));
      pa += 1.0 / (a + static_cast<double>(r - 1));
      p1 += 1.0 / static_cast<double>(r);
      pn += 1.0 / (static_cast<double>(n) + static_cast<double>(r));
    }
    Complex contrib = term * (lz + pa - p1 - pn);
    series += contrib;
    if (r > 4 && std::abs(contrib) < 1e-17 * (std::abs(series) + 1.0) && z < 2.0 * r) break;
  }
  Complex u = front * series;

  if (n >= 1) {
    double nm1fact = 1.0;
    for (int i = 2; i <= n - 1; ++i) nm1fact *= i;
    Complex tail(0.0, 0.0), t2(1.0, 0.0);
    for (int r = 0; r <= n - 1; ++r) {
      if (r > 0)
        t2 *= (a - static_cast<double>(n) + static_cast<double>(r - 1)) * z /
              ((static_cast<double>(1 - n) + static_cast<double>(r - 1)) * static_cast<double>(r));
      tail += t2;
    }
    u += nm1fact * gamma_reciprocal(a) * std::pow(z, -static_cast<double>(n)) * tail;
  }
  return u;
}

Complex w_ulog(Complex g, Complex mu, double z) {
  // W = e^{-z/2} z^{mu+1/2} U(mu - g + 1/2, 1 + 2mu, z); for integer
  // b = 1 + 2mu <= 0 reflect with U(a,b,z) = z^{1-b} U(a-b+1, 2-b, z).
  Complex a = mu - g + 0.5;
  long b = std::lround(2.0 * mu.real()) + 1;
  Complex u;
  if (b >= 1) {
    u = hypu_int_b(a, static_cast<int>(b - 1), z);
  } else {
    Complex a2 = a - static_cast<double>(b) + 1.0;
    u = std::pow(z, static_cast<double>(1 - b)) * hypu_int_b(a2, static_cast<int>(1 - b), z);
  }
  return std::exp(-0.5 * z + (mu + 0.5) * std::log(z)) * u;
}

// --- optimally truncated large-z series -------------------------------------
Complex w_asymptotic(Complex g, Complex mu, double z, double* relerr) {
  Complex sum(1.0, 0.0), term(1.0, 0.0), best_sum(1.0, 0.0);
  double min_term = 1.0;
  Complex mu2 = mu * mu;
  for (int j = 1; j < 80; ++j) {
    Complex f = g - static_cast<double>(j) + 0.5;
    term *= (mu2 - f * f) / (static_cast<double>(j) * z);
    double at = std::abs(term);
    sum += term;
    if (at < min_term) {
      min_term = at;
      best_sum = sum;
    } else if (at > 4.0 * min_term) {
      break;
    }
  }
  if (relerr) *relerr = min_term / std::max(std::abs(best_sum), 1e-300);
  return std::exp(-0.5 * z + g * std::log(z)) * best_sum;
}

// --- rescaled ODE march ------------------------------------------------------
struct State {
  Complex w, dw;
};

Complex w_march(Complex g, Complex mu, double z) {
  const double ag = std::abs(g);
  const double z0 = std::max({45.0, (ag + 1.5) * (ag + 1.5) + 20.0, 1.3 * z});
  // seed from the rescaled asymptotic series What = sum c_j z^-j
  Complex mu2 = mu * mu;
  std::vector<Complex> c{Complex(1.0, 0.0)};
  for (int j = 1; j < 40; ++j) {
    Complex f = g - static_cast<double>(j) + 0.5;
    c.push_back(c.back() * (mu2 - f * f) / static_cast<double>(j));
  }
  Complex y(1.0, 0.0), dy(0.0, 0.0);
  double prev_mag = 1.0;
  for (int j = 1; j < 40; ++j) {
    double mag = std::abs(c[static_cast<size_t>(j)]) / std::pow(z0, j);
    if (mag > prev_mag) break;
    y += c[static_cast<size_t>(j)] / std::pow(z0, j);
    dy += -static_cast<double>(j) * c[static_cast<size_t>(j)] / std::pow(z0, j + 1);
    prev_mag = mag;
  }

  auto rhs = [&](double zz, const State& s) {
    State d;
    d.w = s.dw;
    d.dw = -(2.0 * g / zz - 1.0) * s.dw -
           ((g - 0.5) * (g - 0.5) - mu2) / (zz * zz) * s.w;
    return d;
  };
  State s{y, dy};
  double zz = z0;
  while (zz > z) {
    double h = std::min({0.002, zz - z, zz / 400.0});
    auto k1 = rhs(zz, s);
    State s2{s.w - 0.5 * h * k1.w, s.dw - 0.5 * h * k1.dw};
    auto k2 = rhs(zz - 0.5 * h, s2);
    State s3{s.w - 0.5 * h * k2.w, s.dw - 0.5 * h * k2.dw};
    auto k3 = rhs(zz - 0.5 * h, s3);
    State s4{s.w - h * k3.w, s.dw - h * k3.dw};
    auto k4 = rhs(zz - h, s4);
    s.w -= h / 6.0 * (k1.w + 2.0 * k2.w + 2.0 * k3.w + k4.w);
    s.dw -= h / 6.0 * (k1.dw + 2.0 * k2.dw + 2.0 * k3.dw + k4.dw);
    zz -= h;
  }
  return s.w * std::exp(-0.5 * z + g * std::log(z));
}

}  // namespace

Complex hyp1f1(Complex a, Complex b, double z) {
  Complex sum(1.0, 0.0), term(1.0, 0.0);
  for (int k = 0; k < 2000; ++k) {
    Complex bk = b + static_cast<double>(k);
    if (std::abs(bk) < 1e-12) {
      if (std::abs(a + static_cast<double>(k)) < 1e-12) return sum;  // terminated first
      throw DegenerateParamError("hyp1f1: nonpositive integer denominator parameter");
    }
    term *= (a + static_cast<double>(k)) / bk * z / (k + 1.0);
    sum += term;
    if (std::abs(term) < 1e-17 * (std::abs(sum) + 1.0) && z < 2.0 * (k + 1.0)) break;
  }
  return sum;
}

Complex whittaker_w(Complex g, Complex mu, double z, const PrecisionProfile&) {
  if (!(z > 0.0)) throw DomainError("whittaker_w: z must be > 0");

  // Terminating cases (either mu sign); exact, including degenerate 2mu.
  // Prefer whichever mirror has a nonsingular finite series.
  Complex a_plus = mu - g + 0.5;
  Complex a_minus = -mu - g + 0.5;
  int m_plus = is_real_nonpos_int(a_plus) ? -static_cast<int>(std::lround(a_plus.real())) : -1;
  int m_minus = is_real_nonpos_int(a_minus) ? -static_cast<int>(std::lround(a_minus.real())) : -1;
  if (m_plus >= 0 && !terminating_is_singular(mu, m_plus))
    return w_terminating(g, mu, z, m_plus);
  if (m_minus >= 0 && !terminating_is_singular(-mu, m_minus))
    return w_terminating(g, -mu, z, m_minus);
  if (m_plus >= 0 || m_minus >= 0)
    throw DegenerateParamError(
        "whittaker_w: singular Gamma prefactor without cancelling companion");

  const bool degenerate =
      std::abs(mu.imag()) < 1e-9 && near_int(2.0 * mu.real());

  if (z > 30.0) {
    double rel;
    Complex w = w_asymptotic(g, mu, z, &rel);
    if (rel < 1e-11) return w;
    return w_march(g, mu, z);
  }
  if (z <= 12.0) {
    if (degenerate) return w_ulog(g, mu, z);
    double canc;
    Complex w = w_mcomb(g, mu, z, &canc);
    if (canc < 1e5) return w;
    return w_march(g, mu, z);
  }
  return w_march(g, mu, z);
}

}  // namespace zf
