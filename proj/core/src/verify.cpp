#include "zf/verify.hpp"

#include <cmath>

#include "zf/analysis.hpp"
#include "zf/basis.hpp"
#include "zf/coefficients.hpp"
#include "zf/theta.hpp"
#include "zf/xifn.hpp"
#include "zf/zetafn.hpp"

namespace zf {

const ZeroTable& VerifyContext::need_zeros() {
  if (!zeros) {
    auto betas = parse_zero_file(cfg.zeros_path);
    if (static_cast<int>(betas.size()) > cfg.zeros_count)
      betas.resize(static_cast<size_t>(cfg.zeros_count));
    zeros = make_zero_table(std::move(betas), cfg.precision());
  }
  return *zeros;
}

const CalibrationResult& VerifyContext::need_calib() {
  if (!calib) {
    const ZeroTable* z = nullptr;
    try {
      z = &need_zeros();
    } catch (const Error&) {
      z = nullptr;  // suites that need the zeros will fail loudly later
    }
    calib = calibrate(z, cfg.precision());
  }
  return *calib;
}

namespace {

void add(VerifyReport& r, const std::string& name, double lhs, double rhs,
         double tol, bool info = false, const std::string& note = {}) {
  Check c;
  c.name = name;
  c.lhs = lhs;
  c.rhs = rhs;
  c.tol = tol;
  c.pass = std::abs(lhs - rhs) <= tol;
  c.informational = info;
  c.note = note;
  r.checks.push_back(c);
}

VerifyReport suite_orthonormality(VerifyContext& ctx) {
  VerifyReport r;
  QuadratureSpec q = ctx.cfg.quadrature();
  PrecisionProfile prec = ctx.cfg.precision();
  (void)prec;
  // <e_m, e_n> depends on m - n only; sweep the difference across the full
  // |m|,|n| <= 20 range and spot-check literal pairs.
  double worst = 0.0;
  for (int d = 0; d <= 40; ++d) {
    auto f = [d](double y) { return basis_e(d, y); };
    auto g = [](double y) { return basis_e(0, y); };
    Complex ip = inner_product(f, g, q, std::max(8, 4 * d));
    double dev = std::abs(ip - Complex(d == 0 ? 1.0 : 0.0, 0.0));
    worst = std::max(worst, dev);
  }
  for (auto [m, n] : {std::pair{20, -20}, {7, 3}, {-5, -5}, {12, -1}}) {
    auto f = [m = m](double y) { return basis_e(m, y); };
    auto g = [n = n](double y) { return basis_e(n, y); };
    Complex ip = inner_product(f, g, q, 4 * (std::abs(m) + std::abs(n)) + 8);
    double dev = std::abs(ip - Complex(m == n ? 1.0 : 0.0, 0.0));
    worst = std::max(worst, dev);
  }
  add(r, "orthonormality.max_deviation", worst, 0.0, 1e-9);

  // kernel identity: sum_{|n|<=N} e^{inx} = D_N(x)
  double kworst = 0.0;
  for (int N : {0, 3, 8}) {
    for (double x = -3.0; x <= 3.0; x += 0.37) {
      Complex s(0.0, 0.0);
      for (int n = -N; n <= N; ++n) s += Complex(std::cos(n * x), std::sin(n * x));
      kworst = std::max(kworst, std::abs(s - Complex(dirichlet_kernel(N, x), 0.0)));
    }
  }
  add(r, "orthonormality.dirichlet_kernel_identity", kworst, 0.0, 1e-12);
  return r;
}

VerifyReport suite_theorem11(VerifyContext& ctx) {
  VerifyReport r;
  QuadratureSpec q = ctx.cfg.quadrature();
  PrecisionProfile prec = ctx.cfg.precision();
  const CalibrationResult& cal = ctx.need_calib();
  const ZeroTable& zeros = ctx.need_zeros();
  const double sigma = 0.75;

  FunctionSpec inv = FunctionSpec::inv_zeta(sigma);
  for (int n = 0; n <= 6; ++n) {
    Complex ref = coeff_direct(inv, n, q, prec);
    Complex got = coeff_bar(sigma, n, cal.bar, prec);
    add(r, "theorem11.bar_vs_quadrature.n=" + std::to_string(n),
        got.real(), ref.real(), 1e-7);
  }
  for (int n = -1; n >= -6; --n) {
    Complex ref = coeff_direct(inv, n, q, prec);
    add(r, "theorem11.one_sided.n=" + std::to_string(n), std::abs(ref), 0.0, 1e-7);
  }
  FunctionSpec conj = FunctionSpec::inv_zeta_conj(sigma);
  for (int n = -4; n <= 4; ++n) {
    Complex ref = coeff_direct(conj, n, q, prec);
    double tail = 0.0;
    Complex got = coeff_hat(sigma, n, zeros, 30, cal.bar, cal.hat_sign, 1e-2,
                            &tail, prec);
    add(r, "theorem11.hat_vs_quadrature.n=" + std::to_string(n),
        std::abs(got - ref), 0.0, tail);
    if (n != 0)
      add(r, "theorem11.hat_tail_bound.n=" + std::to_string(n), tail, 0.0, 1e-3);
  }
  return r;
}

VerifyReport suite_theorem12(VerifyContext& ctx) {
  VerifyReport r;
  QuadratureSpec q = ctx.cfg.quadrature();
  PrecisionProfile prec = ctx.cfg.precision();
  const CalibrationResult& cal = ctx.need_calib();

  // n >= 1 Whittaker series vs half-angle quadrature at sigma = 0.9, v = 1
  const double s9 = 0.9;
  FunctionSpec half = FunctionSpec::zeta_cos_v(s9, Complex(1.0, 0.0),
                                               WeightVariant::HalfAngle);
  for (int n = 1; n <= 3; ++n) {
    CoeffValue ref = coeff_direct_full(half, n, q, prec);
    TildeSeriesResult ser =
        coeff_tilde_series(s9, Complex(1.0, 0.0), n, ctx.cfg.series_k_max, 1e-8, prec);
    double combined = std::min(1e-5, ser.err_est + ref.err_est + 1e-7);
    add(r, "theorem12.series_vs_quadrature.n=" + std::to_string(n),
        ser.value.real(), ref.value.real(), combined,
        false, "combined tolerance = " + std::to_string(combined));
  }

  // n < 0 closed form vs its calibrated weight variant at sigma = 0.75
  const double s7 = 0.75;
  FunctionSpec calv = FunctionSpec::zeta_cos_v(s7, Complex(1.0, 0.0), cal.tilde_variant);
  const double zhalf = zeta(Complex(s7 + 0.5, 0.0), prec).real();
  for (int n = -1; n >= -4; --n) {
    Complex quad = coeff_direct(calv, n, q, prec);
    double offset = (n == -1) ? cal.tilde_neg1_offset * zhalf : 0.0;
    double lhs = cal.tilde_sign * (quad.real() - offset);
    add(r, "theorem12.closed_form_vs_quadrature.n=" + std::to_string(n), lhs,
        coeff_tilde_negative(s7, n), 1e-7);
  }
  // the other variant's mismatch, reported rather than silently dropped
  {
    WeightVariant other_v = cal.tilde_variant == WeightVariant::DoubleAngle
                                ? WeightVariant::HalfAngle
                                : WeightVariant::DoubleAngle;
    FunctionSpec other = FunctionSpec::zeta_cos_v(s7, Complex(1.0, 0.0), other_v);
    Complex quad = coeff_direct(other, -2, q, prec);
    add(r, "theorem12.other_variant_mismatch.n=-2",
        std::abs(std::abs(quad.real()) - coeff_tilde_negative(s7, -2)), 0.0, 1e300,
        true,
        "closed form matches only the calibrated weight variant; this entry "
        "records the other variant's deviation");
  }
  add(r, "theorem12.calibrated_variant",
      cal.tilde_variant == WeightVariant::DoubleAngle ? 1.0 : 0.0, 1.0, 0.5, true,
      "1 = double-angle weight matched the closed form");
  return r;
}

VerifyReport suite_theorem31(VerifyContext& ctx) {
  VerifyReport r;
  QuadratureSpec q = ctx.cfg.quadrature();
  PrecisionProfile prec = ctx.cfg.precision();
  const CalibrationResult& cal = ctx.need_calib();

  for (int n : {1, 2, 3, 4, -1, -2, -3, -4}) {
    Complex quad = coeff_xi(n, Method::Quadrature, q, 0.0, prec);
    Complex theta = coeff_xi(n, Method::ThetaIntegral, q, cal.xi_sign, prec);
    add(r, "theorem31.routes.n=" + std::to_string(n), theta.real(), quad.real(),
        1e-6);
  }
  for (int n = 1; n <= 6; ++n) {
    Complex p = coeff_xi(n, Method::Quadrature, q, 0.0, prec);
    Complex m = coeff_xi(-n, Method::Quadrature, q, 0.0, prec);
    add(r, "theorem31.even_real.n=" + std::to_string(n),
        std::max(std::abs(p - m), std::abs(p.imag())), 0.0, 1e-8);
  }
  double a0 = coeff_xi(0, Method::Quadrature, q, 0.0, prec).real();
  add(r, "theorem31.a0_equals_theta1", a0, theta_big(1.0, prec), 1e-8);
  add(r, "theorem31.a0_vs_stated_zero", a0, 0.0, 1e300, true,
      "the constant coefficient is Theta(1) ~ 0.8934, not 0 as sometimes "
      "stated; recorded as data");

  // Coffey symmetry xi^(k)(0) = (-1)^k xi^(k)(1)
  auto d0 = xi_derivatives(Complex(0.0, 0.0), 6, prec);
  auto d1 = xi_derivatives(Complex(1.0, 0.0), 6, prec);
  double worst = 0.0;
  for (int k = 0; k <= 6; ++k) {
    double sign = (k % 2) ? -1.0 : 1.0;
    worst = std::max(worst, std::abs(d0[static_cast<size_t>(k)] -
                                     sign * d1[static_cast<size_t>(k)]));
  }
  add(r, "theorem31.coffey_symmetry_k0..6", worst, 0.0, 1e-8);
  return r;
}

VerifyReport suite_parseval(VerifyContext& ctx) {
  VerifyReport r;
  QuadratureSpec q = ctx.cfg.quadrature();
  PrecisionProfile prec = ctx.cfg.precision();
  const int N = 12;

  for (const FunctionSpec& spec :
       {FunctionSpec::inv_zeta(0.75), FunctionSpec::xi_weighted()}) {
    CoefficientTable t =
        build_table(spec, -N, N, Method::Quadrature, q, {}, prec);
    ParsevalReport p = parseval_check(spec, t, N, q, prec);
    add(r, "parseval." + spec.id() + ".identity",
        std::abs(p.lhs - p.rhs_partial), 0.0, p.tail_bound + 2e-9);
    // Bessel at every N
    double running = 0.0;
    bool bessel = true;
    for (int nn = 0; nn <= N; ++nn) {
      running += std::norm(t.at(nn)) + (nn ? std::norm(t.at(-nn)) : 0.0);
      if (running > p.lhs + q.tol + 1e-9) bessel = false;
    }
    add(r, "parseval." + spec.id() + ".bessel", bessel ? 0.0 : 1.0, 0.0, 0.5);
  }
  return r;
}

VerifyReport suite_fejer(VerifyContext& ctx) {
  VerifyReport r;
  QuadratureSpec q = ctx.cfg.quadrature();
  PrecisionProfile prec = ctx.cfg.precision();
  const double sigma = 0.75, x0 = 1.0;
  FunctionSpec spec = FunctionSpec::inv_zeta(sigma);
  Complex target = 1.0 / zeta(Complex(sigma, 0.5 * std::tan(0.5 * x0)), prec);

  CoefficientTable t = build_table(spec, -64, 64, Method::Quadrature, q, {}, prec);
  double prev = 1e300;
  for (int N : {8, 16, 32, 64}) {
    Complex mean = fejer_mean_cesaro(t, x0, N);
    double err = std::abs(mean - target);
    add(r, "fejer.error_decreasing.N=" + std::to_string(N),
        err <= prev * 1.05 ? 0.0 : 1.0, 0.0, 0.5, false,
        "err=" + std::to_string(err));
    if (N == 64) add(r, "fejer.error_at_64", err, 0.0, 1e-2);
    prev = err;
  }
  // dual route: kernel integral vs (C,1) average
  Complex kern = fejer_mean(spec, x0, 16, q, prec);
  Complex ces = fejer_mean_cesaro(t, x0, 16);
  add(r, "fejer.kernel_vs_cesaro.N=16", std::abs(kern - ces), 0.0, 1e-7);
  return r;
}

}  // namespace

VerifyReport verify_suite(const std::string& suite, VerifyContext& ctx) {
  if (suite == "orthonormality") return suite_orthonormality(ctx);
  if (suite == "theorem11") return suite_theorem11(ctx);
  if (suite == "theorem12") return suite_theorem12(ctx);
  if (suite == "theorem31") return suite_theorem31(ctx);
  if (suite == "parseval") return suite_parseval(ctx);
  if (suite == "fejer") return suite_fejer(ctx);
  if (suite == "all") {
    VerifyReport all;
    for (const char* s :
         {"orthonormality", "theorem11", "theorem12", "theorem31", "parseval", "fejer"}) {
      VerifyReport r = verify_suite(s, ctx);
      all.checks.insert(all.checks.end(), r.checks.begin(), r.checks.end());
    }
    return all;
  }
  throw ConfigError("unknown verify suite: " + suite);
}

}  // namespace zf
