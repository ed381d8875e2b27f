#pragma once

#include <functional>
#include <string>

#include "zf/types.hpp"

namespace zf {

enum class Kind { InvZeta, InvZetaConj, ZetaCosV, XiWeighted, Custom };
enum class WeightVariant { HalfAngle, DoubleAngle };

// The function being expanded in the basis e^{-2in arctan(2x)}.
//   InvZeta:     1/zeta(sigma + iy)
//   InvZetaConj: 1/zeta(sigma - iy)
//   ZetaCosV:    zeta(sigma + iy) * cos^v(arctan 2y)         (HalfAngle)
//                zeta(sigma + iy) * cos^v(2 arctan 2y)       (DoubleAngle)
//   XiWeighted:  (1/4 + y^2) Xi(y)
//   Custom:      caller-supplied callable
struct FunctionSpec {
  Kind kind = Kind::Custom;
  double sigma = 0.75;
  Complex v = Complex(1.0, 0.0);
  WeightVariant variant = WeightVariant::HalfAngle;
  std::function<Complex(double)> custom;
  std::string custom_name = "custom";

  static FunctionSpec inv_zeta(double sigma);
  static FunctionSpec inv_zeta_conj(double sigma);
  static FunctionSpec zeta_cos_v(double sigma, Complex v, WeightVariant w);
  static FunctionSpec xi_weighted();
  static FunctionSpec make_custom(std::function<Complex(double)> f, std::string name);

  void validate() const;
  bool conj_symmetric() const { return kind != Kind::Custom; }
  bool zeta_based() const {
    return kind == Kind::InvZeta || kind == Kind::InvZetaConj || kind == Kind::ZetaCosV;
  }
  // Constant split off before quadrature so the remainder decays or
  // oscillates; its coefficient (c_inf * delta_{n0}) is added back exactly.
  Complex c_infinity() const;
  std::string id() const;  // canonical text form, used for hashing and reports
};

// Point evaluation (standalone).
Complex eval_spec(const FunctionSpec& s, double y, const PrecisionProfile& prec = {});

// Same minus c_infinity, reusing an externally computed zeta(sigma + iy)
// (grid path; only valid for zeta-based kinds).
Complex eval_spec_subtracted_from_zeta(const FunctionSpec& s, double y, Complex zeta_val);

// Non-oscillatory envelope of f - c_inf (the k = 1 Dirichlet part); zero for
// kinds without one. Used for the analytic tail completion.
double spec_envelope(const FunctionSpec& s, double y);

// Local Dirichlet model of the oscillatory part near |y| = Y:
// f - c_inf ~ envelope_factor(y) * sum_k d_k e^{-i sgn y log k}.
// Returns the number of modelled k (0 when no model applies).
int spec_osc_model(const FunctionSpec& s, std::vector<double>& tau,
                   std::vector<Complex>& d, double& exponent_sign);

}  // namespace zf
