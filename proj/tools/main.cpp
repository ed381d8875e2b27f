// zetafourier: Fourier coefficients of zeta-related functions in the
// orthonormal basis e^{-2in arctan(2x)} of L^2(mu), with cross-validating
// evaluation routes and machine-readable reports.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "zf/analysis.hpp"
#include "zf/calibration.hpp"
#include "zf/coefficients.hpp"
#include "zf/config.hpp"
#include "zf/table_io.hpp"
#include "zf/verify.hpp"
#include "zf/zeros.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
};

zf::RunConfig resolve_config(const GlobalOpts& g) {
  zf::RunConfig cfg;
  if (!g.config_path.empty()) cfg = zf::load_config(g.config_path);
  for (const auto& [k, v] : g.overrides) cfg.set(k, v);
  cfg.validate();
  return cfg;
}

void add_config_flags(CLI::App* app, GlobalOpts& g) {
  app->add_option("--config", g.config_path, "key=value configuration file");
  static const char* keys[] = {
      "quadrature.nodes", "quadrature.y_max", "quadrature.tol",
      "zeta.em_terms",    "zeta.em_bernoulli", "deriv.radius",
      "deriv.nodes",      "series.k_max",      "zeros.count",
      "zeros.path",       "cache.dir"};
  for (const char* k : keys) {
    app->add_option_function<std::string>(
        std::string("--") + k,
        [&g, k](const std::string& v) { g.overrides.emplace_back(k, v); },
        "override config key " + std::string(k));
  }
}

bool parse_range(const std::string& s, int& lo, int& hi) {
  size_t dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(s);
      return true;
    }
    lo = std::stoi(s.substr(0, dots));
    hi = std::stoi(s.substr(dots + 2));
    return lo <= hi;
  } catch (const std::exception&) {
    return false;
  }
}

zf::FunctionSpec spec_from_flags(const std::string& fn, double sigma, double v_re,
                                 double v_im, const std::string& variant) {
  zf::WeightVariant wv = variant == "double" ? zf::WeightVariant::DoubleAngle
                                             : zf::WeightVariant::HalfAngle;
  if (fn == "inv-zeta") return zf::FunctionSpec::inv_zeta(sigma);
  if (fn == "inv-zeta-conj") return zf::FunctionSpec::inv_zeta_conj(sigma);
  if (fn == "zeta-cos-v")
    return zf::FunctionSpec::zeta_cos_v(sigma, zf::Complex(v_re, v_im), wv);
  if (fn == "xi-weighted") return zf::FunctionSpec::xi_weighted();
  throw zf::ConfigError("unknown --function '" + fn + "'");
}

json checks_to_json(const zf::VerifyReport& rep, uint64_t config_hash) {
  json out;
  out["config_hash"] = zf::hash_hex(config_hash);
  out["checks"] = json::array();
  for (const auto& c : rep.checks) {
    json jc{{"name", c.name}, {"lhs", c.lhs},   {"rhs", c.rhs},
            {"tol", c.tol},   {"pass", c.pass}};
    if (c.informational) jc["informational"] = true;
    if (!c.note.empty()) jc["note"] = c.note;
    out["checks"].push_back(jc);
  }
  return out;
}

void emit(const std::string& out_path, const std::string& bytes) {
  if (out_path.empty() || out_path == "-") {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return;
  }
  zf::atomic_write(out_path, bytes);
}

int run(int argc, char** argv) {
  CLI::App app{"Fourier coefficients of zeta-related functions in the basis "
               "e^{-2in arctan(2x)} of L^2(mu)"};
  app.require_subcommand(1);
  GlobalOpts g;

  // ---- zeros-import ----------------------------------------------------
  auto* zi = app.add_subcommand("zeros-import",
                                "validate a zero-ordinate file and cache it "
                                "with zeta'(rho) computed");
  std::string zi_path;
  zi->add_option("path", zi_path, "text file, one ordinate per line")->required();
  add_config_flags(zi, g);

  // ---- coeffs ------------------------------------------------------------
  auto* co = app.add_subcommand("coeffs", "emit a coefficient table as CSV");
  std::string co_fn, co_range = "0..8", co_method = "quadrature", co_out = "-";
  std::string co_variant = "half";
  double co_sigma = 0.75, co_vre = 1.0, co_vim = 0.0;
  bool co_no_cache = false;
  co->add_option("--function", co_fn,
                 "inv-zeta | inv-zeta-conj | zeta-cos-v | xi-weighted")
      ->required();
  co->add_option("--sigma", co_sigma, "sigma in (1/2, 1) for zeta-based kinds");
  co->add_option("--v", co_vre, "real part of v (zeta-cos-v)");
  co->add_option("--v-imag", co_vim, "imaginary part of v");
  co->add_option("--variant", co_variant, "half | double (cos weight)");
  co->add_option("--n", co_range, "index range, e.g. -6..6");
  co->add_option("--method", co_method, "quadrature | residue | whittaker | theta");
  co->add_option("--out", co_out, "output file ('-' = stdout)");
  co->add_flag("--no-cache", co_no_cache, "bypass the result cache");
  add_config_flags(co, g);

  // ---- verify --------------------------------------------------------------
  auto* ve = app.add_subcommand("verify", "run a verification suite, emit JSON");
  std::string ve_suite, ve_out = "-";
  ve->add_option("suite", ve_suite,
                 "orthonormality | theorem11 | theorem12 | theorem31 | "
                 "parseval | fejer | all")
      ->required();
  ve->add_option("--out", ve_out, "output file ('-' = stdout)");
  add_config_flags(ve, g);

  // ---- reconstruct -----------------------------------------------------------
  auto* re = app.add_subcommand("reconstruct",
                                "partial-sum reconstruction report as JSON");
  std::string re_fn = "inv-zeta", re_grid = "-2:2:41", re_out = "-";
  std::string re_variant = "half";
  double re_sigma = 0.75, re_vre = 1.0, re_vim = 0.0;
  int re_N = 8;
  re->add_option("--function", re_fn, "function kind");
  re->add_option("--sigma", re_sigma, "sigma");
  re->add_option("--v", re_vre, "real part of v");
  re->add_option("--v-imag", re_vim, "imaginary part of v");
  re->add_option("--variant", re_variant, "half | double");
  re->add_option("--N", re_N, "truncation order");
  re->add_option("--grid", re_grid, "a:b:count sample grid in x");
  re->add_option("--out", re_out, "output file ('-' = stdout)");
  add_config_flags(re, g);

  CLI11_PARSE(app, argc, argv);
  zf::RunConfig cfg = resolve_config(g);

  if (*zi) {
    auto betas = zf::parse_zero_file(zi_path);
    if (static_cast<int>(betas.size()) > cfg.zeros_count)
      betas.resize(static_cast<size_t>(cfg.zeros_count));
    zf::ZeroTable t = zf::make_zero_table(std::move(betas), cfg.precision());
    uint64_t key = zf::fnv1a_hash("zeros|" + cfg.canonical() + "|" + zi_path);
    std::string cache = cfg.cache_dir + "/zeros_" + zf::hash_hex(key) + ".csv";
    zf::write_zero_cache(t, cache);
    std::printf("imported %zu zeros; first=%.9f last=%.9f; cached at %s\n",
                t.count(), t.betas.front(), t.betas.back(), cache.c_str());
    return 0;
  }

  if (*co) {
    int lo = 0, hi = 0;
    if (!parse_range(co_range, lo, hi))
      throw CLI::ValidationError("--n", "expected A..B with A <= B");
    zf::Method method = zf::method_from_name(co_method);
    zf::FunctionSpec spec = spec_from_flags(co_fn, co_sigma, co_vre, co_vim, co_variant);
    spec.validate();
    if (method == zf::Method::WhittakerSeries && lo < 1)
      throw CLI::ValidationError("--n", "the whittaker series form is n >= 1 only");
    if (method == zf::Method::ThetaIntegral && spec.kind != zf::Kind::XiWeighted)
      throw CLI::ValidationError("--method", "theta applies to xi-weighted only");
    if (method == zf::Method::Residue && !(spec.kind == zf::Kind::InvZeta ||
                                           spec.kind == zf::Kind::InvZetaConj))
      throw CLI::ValidationError("--method", "residue applies to inv-zeta kinds");

    uint64_t key = zf::fnv1a_hash("coeffs|" + cfg.canonical() + "|" + spec.id() +
                                  "|" + co_method + "|" + std::to_string(lo) +
                                  ".." + std::to_string(hi));
    std::string bytes;
    if (!co_no_cache && zf::cache_lookup(cfg.cache_dir, key, bytes)) {
      emit(co_out, bytes);
      return 0;
    }
    zf::TableDeps deps;
    zf::ZeroTable zeros;
    zf::CalibrationResult calib;
    if (method == zf::Method::Residue || method == zf::Method::ThetaIntegral) {
      auto betas = zf::parse_zero_file(cfg.zeros_path);
      if (static_cast<int>(betas.size()) > cfg.zeros_count)
        betas.resize(static_cast<size_t>(cfg.zeros_count));
      zeros = zf::make_zero_table(std::move(betas), cfg.precision());
      calib = zf::calibrate(&zeros, cfg.precision(), /*quick=*/true);
      deps.zeros = &zeros;
      deps.calib = &calib;
    }
    zf::CoefficientTable t = zf::build_table(spec, lo, hi, method,
                                             cfg.quadrature(), deps, cfg.precision());
    bytes = zf::table_to_csv(t, cfg.hash());
    if (!co_no_cache) zf::cache_store(cfg.cache_dir, key, bytes);
    emit(co_out, bytes);
    return 0;
  }

  if (*ve) {
    zf::VerifyContext ctx;
    ctx.cfg = cfg;
    zf::VerifyReport rep = zf::verify_suite(ve_suite, ctx);
    json out = checks_to_json(rep, cfg.hash());
    emit(ve_out, out.dump(2) + "\n");
    if (!rep.all_pass()) {
      for (const auto& c : rep.checks)
        if (!c.pass && !c.informational)
          std::fprintf(stderr, "FAILED check: %s (lhs=%.12g rhs=%.12g tol=%.3g)\n",
                       c.name.c_str(), c.lhs, c.rhs, c.tol);
      return 2;
    }
    return 0;
  }

  if (*re) {
    zf::FunctionSpec spec = spec_from_flags(re_fn, re_sigma, re_vre, re_vim, re_variant);
    spec.validate();
    double a = 0.0, b = 0.0;
    int count = 0;
    if (std::sscanf(re_grid.c_str(), "%lg:%lg:%d", &a, &b, &count) != 3 || count < 2)
      throw CLI::ValidationError("--grid", "expected a:b:count");
    std::vector<double> grid(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
      grid[static_cast<size_t>(i)] = a + (b - a) * i / (count - 1);
    zf::CoefficientTable t = zf::build_table(spec, -re_N, re_N, zf::Method::Quadrature,
                                             cfg.quadrature(), {}, cfg.precision());
    zf::ReconstructionReport rep = zf::reconstruction_report(
        spec, t, grid, re_N, cfg.quadrature(), cfg.precision());
    json out;
    out["config_hash"] = zf::hash_hex(cfg.hash());
    out["spec"] = rep.spec_id;
    out["N"] = rep.N;
    out["sup_error"] = rep.sup_error;
    out["l2_error"] = rep.l2_error;
    out["rows"] = json::array();
    for (size_t i = 0; i < rep.grid.size(); ++i) {
      out["rows"].push_back({{"x", rep.grid[i]},
                             {"f_re", rep.f_values[i].real()},
                             {"s_re", rep.partial_values[i].real()},
                             {"error", rep.truncation_error[i]}});
    }
    emit(re_out, out.dump(2) + "\n");
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 1;
  } catch (const zf::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const zf::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 3;
  } catch (const zf::ConfigError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 1;
  } catch (const zf::DomainError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 1;
  } catch (const zf::Error& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
