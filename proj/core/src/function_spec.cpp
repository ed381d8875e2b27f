#include "zf/function_spec.hpp"

#include <cmath>
#include <cstdio>

#include "zf/xifn.hpp"
#include "zf/zetafn.hpp"

namespace zf {
namespace {

// mobius(k), k = 1..64, for the 1/zeta local Dirichlet model
constexpr int kMobius[64] = {
    1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0, -1, 0, -1, 0, 1, 1,
    -1, 0, 0, 1, 0, 0, -1, -1, -1, 0, 1, 1, 1, 0, -1, 1, 1, 0, -1, -1, -1, 0,
    0, 1, -1, 0, 0, 0, 1, 0, -1, 0, 1, 0, 1, 1, -1, 0, -1, 1, 0, 0};
constexpr int kModelK = 64;

bool v_is_negative_even_integer(Complex v) {
  if (std::abs(v.imag()) > 1e-12) return false;
  double r = v.real();
  return r < 0.0 && std::abs(r - 2.0 * std::round(r / 2.0)) < 1e-12;
}

bool v_is_integer(Complex v) {
  return std::abs(v.imag()) < 1e-12 &&
         std::abs(v.real() - std::round(v.real())) < 1e-12;
}

double weight_double(double y) {
  return (1.0 - 4.0 * y * y) / (1.0 + 4.0 * y * y);
}

Complex weight_pow(const FunctionSpec& s, double y) {
  if (s.variant == WeightVariant::HalfAngle) {
    // (1+4y^2)^{-v/2}; positive base, any complex v
    return std::exp(-0.5 * s.v * std::log(1.0 + 4.0 * y * y));
  }
  double w = weight_double(y);
  long vi = std::lround(s.v.real());
  double p = 1.0;
  for (long i = 0; i < std::labs(vi); ++i) p *= w;
  return Complex(vi >= 0 ? p : 1.0 / p, 0.0);
}

}  // namespace

FunctionSpec FunctionSpec::inv_zeta(double sigma) {
  FunctionSpec s;
  s.kind = Kind::InvZeta;
  s.sigma = sigma;
  return s;
}
FunctionSpec FunctionSpec::inv_zeta_conj(double sigma) {
  FunctionSpec s;
  s.kind = Kind::InvZetaConj;
  s.sigma = sigma;
  return s;
}
FunctionSpec FunctionSpec::zeta_cos_v(double sigma, Complex v, WeightVariant w) {
  FunctionSpec s;
  s.kind = Kind::ZetaCosV;
  s.sigma = sigma;
  s.v = v;
  s.variant = w;
  return s;
}
FunctionSpec FunctionSpec::xi_weighted() {
  FunctionSpec s;
  s.kind = Kind::XiWeighted;
  return s;
}
FunctionSpec FunctionSpec::make_custom(std::function<Complex(double)> f,
                                       std::string name) {
  FunctionSpec s;
  s.kind = Kind::Custom;
  s.custom = std::move(f);
  s.custom_name = std::move(name);
  return s;
}

void FunctionSpec::validate() const {
  if (zeta_based()) {
    if (!(sigma > 0.5 && sigma < 1.0))
      throw DomainError("FunctionSpec: sigma must lie strictly in (1/2, 1)");
  }
  if (kind == Kind::ZetaCosV) {
    if (v_is_negative_even_integer(v))
      throw DomainError("FunctionSpec: v may not be a negative even integer");
    if (variant == WeightVariant::DoubleAngle && !v_is_integer(v))
      throw DomainError(
          "FunctionSpec: the double-angle weight is negative on |y|>1/2, so "
          "non-integer v has no single-valued power; use an integer v");
  }
  if (kind == Kind::Custom && !custom)
    throw DomainError("FunctionSpec: custom kind without a callable");
}

Complex FunctionSpec::c_infinity() const {
  switch (kind) {
    case Kind::InvZeta:
    case Kind::InvZetaConj:
      return Complex(1.0, 0.0);
    case Kind::ZetaCosV:
      if (variant == WeightVariant::DoubleAngle) {
        long vi = std::lround(v.real());
        return Complex((vi % 2 == 0) ? 1.0 : -1.0, 0.0);
      }
      return Complex(0.0, 0.0);
    default:
      return Complex(0.0, 0.0);
  }
}

std::string FunctionSpec::id() const {
  char buf[160];
  switch (kind) {
    case Kind::InvZeta:
      std::snprintf(buf, sizeof buf, "inv-zeta(sigma=%.17g)", sigma);
      break;
    case Kind::InvZetaConj:
      std::snprintf(buf, sizeof buf, "inv-zeta-conj(sigma=%.17g)", sigma);
      break;
    case Kind::ZetaCosV:
      std::snprintf(buf, sizeof buf, "zeta-cos-v(sigma=%.17g,v=%.17g%+.17gi,%s)",
                    sigma, v.real(), v.imag(),
                    variant == WeightVariant::HalfAngle ? "half" : "double");
      break;
    case Kind::XiWeighted:
      std::snprintf(buf, sizeof buf, "xi-weighted");
      break;
    default:
      std::snprintf(buf, sizeof buf, "custom(%s)", custom_name.c_str());
  }
  return buf;
}

Complex eval_spec(const FunctionSpec& s, double y, const PrecisionProfile& prec) {
  switch (s.kind) {
    case Kind::InvZeta:
      return 1.0 / zeta(Complex(s.sigma, y), prec);
    case Kind::InvZetaConj:
      return 1.0 / zeta(Complex(s.sigma, -y), prec);
    case Kind::ZetaCosV:
      return zeta(Complex(s.sigma, y), prec) * weight_pow(s, y);
    case Kind::XiWeighted:
      return Complex((0.25 + y * y) * xi_critical(y, prec), 0.0);
    default:
      return s.custom(y);
  }
}

Complex eval_spec_subtracted_from_zeta(const FunctionSpec& s, double y,
                                       Complex zeta_val) {
  switch (s.kind) {
    case Kind::InvZeta:
      return 1.0 / zeta_val - 1.0;
    case Kind::InvZetaConj:
      return 1.0 / std::conj(zeta_val) - 1.0;
    case Kind::ZetaCosV:
      return zeta_val * weight_pow(s, y) - s.c_infinity();
    default:
      throw DomainError("eval_spec_subtracted_from_zeta: not a zeta-based kind");
  }
}

double spec_envelope(const FunctionSpec& s, double y) {
  if (s.kind != Kind::ZetaCosV) return 0.0;
  if (s.variant == WeightVariant::HalfAngle) {
    // k = 1 part: 1 * (1+4y^2)^{-v/2}; only the real part of v matters for
    // magnitude, and the built-in calibrations use real v
    return std::exp(-0.5 * s.v.real() * std::log(1.0 + 4.0 * y * y));
  }
  // w^v - (-1)^v decays like v/(2 y^2) for integer v
  long vi = std::lround(s.v.real());
  double w = weight_double(y);
  double p = 1.0;
  for (long i = 0; i < std::labs(vi); ++i) p *= w;
  if (vi < 0) p = 1.0 / p;
  return p - ((vi % 2 == 0) ? 1.0 : -1.0);
}

int spec_osc_model(const FunctionSpec& s, std::vector<double>& tau,
                   std::vector<Complex>& d, double& exponent_sign) {
  tau.clear();
  d.clear();
  exponent_sign = -1.0;
  if (!s.zeta_based()) return 0;
  for (int k = 2; k <= kModelK; ++k) {
    double amp = std::pow(static_cast<double>(k), -s.sigma);
    Complex dk;
    switch (s.kind) {
      case Kind::InvZeta:
      case Kind::InvZetaConj:
        if (kMobius[k - 1] == 0) continue;
        dk = Complex(kMobius[k - 1] * amp, 0.0);
        break;
      default:  // ZetaCosV: plain Dirichlet coefficients of zeta
        dk = Complex(amp, 0.0);
        break;
    }
    tau.push_back(std::log(static_cast<double>(k)));
    d.push_back(dk);
  }
  exponent_sign = (s.kind == Kind::InvZetaConj) ? +1.0 : -1.0;
  return static_cast<int>(tau.size());
}

}  // namespace zf
