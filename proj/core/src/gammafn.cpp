#include "zf/gammafn.hpp"

#include <cmath>

namespace zf {
namespace {

// Lanczos, g = 607/128, 15 coefficients (Godfrey). ~1e-14 relative on Re z >= 0.5.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log Gamma on Re z >= 0.5 via the Lanczos sum. The sum A(z) stays in the
// right half plane there, so the principal log is branch-safe.
Complex log_gamma_right(Complex z) {
  Complex zm1 = z - 1.0;
  Complex a(kLanczos[0], 0.0);
  for (int i = 1; i < 15; ++i) a += kLanczos[i] / (zm1 + static_cast<double>(i));
  Complex t = zm1 + kLanczosG + 0.5;
  return kLogSqrt2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(a);
}

// log sin(pi z) for Im z >= 0, via the exact identity
//   sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2i),
// which never overflows on the upper half plane.
Complex log_sin_pi_upper(Complex z) {
  const Complex i_pi_z = Complex(0.0, kPi) * z;
  return -i_pi_z + std::log(1.0 - std::exp(2.0 * i_pi_z)) +
         Complex(-0.69314718055994530942, 0.5 * kPi);
}

Complex log_gamma_upper(Complex z) {
  if (z.real() >= 0.5) return log_gamma_right(z);
  return std::log(kPi) - log_sin_pi_upper(z) - log_gamma_right(1.0 - z);
}

}  // namespace

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at nonpositive integer");
  if (z.imag() < 0.0) return std::conj(log_gamma_upper(std::conj(z)));
  return log_gamma_upper(z);
}

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at nonpositive integer");
  if (z.imag() < 0.0) return std::conj(gamma(std::conj(z)));
  return std::exp(log_gamma_upper(z));
}

Complex gamma_reciprocal(Complex z) {
  if (is_nonpositive_integer(z)) return Complex(0.0, 0.0);
  if (z.imag() < 0.0) return std::conj(gamma_reciprocal(std::conj(z)));
  return std::exp(-log_gamma_upper(z));
}

Complex digamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError("digamma: pole at nonpositive integer");
  if (z.imag() < 0.0) return std::conj(digamma(std::conj(z)));
  if (z.real() < 0.5) {
    Complex pz = kPi * z;
    return digamma(1.0 - z) - kPi * std::cos(pz) / std::sin(pz);
  }
  Complex acc(0.0, 0.0);
  while (z.real() < 12.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  // psi(z) ~ ln z - 1/(2z) - sum_n B_{2n}/(2n) z^{-2n}
  static const double b[] = {1.0 / 12,  -1.0 / 120,      1.0 / 252, -1.0 / 240,
                             1.0 / 132, -691.0 / 32760,  1.0 / 12};
  Complex inv2 = 1.0 / (z * z);
  Complex p = std::log(z) - 0.5 / z;
  Complex zp = inv2;
  for (double bn : b) {
    p -= bn * zp;
    zp *= inv2;
  }
  return acc + p;
}

}  // namespace zf
