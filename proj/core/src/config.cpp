#include "zf/config.hpp"

#include <cstdio>
#include <fstream>

namespace zf {

uint64_t fnv1a_hash(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

int to_int(const std::string& k, const std::string& v) {
  try {
    size_t used = 0;
    int r = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer for " + k + ": '" + v + "'");
  }
}
long to_long(const std::string& k, const std::string& v) {
  try {
    size_t used = 0;
    long r = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer for " + k + ": '" + v + "'");
  }
}
double to_double(const std::string& k, const std::string& v) {
  try {
    size_t used = 0;
    double r = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw ConfigError("config: bad number for " + k + ": '" + v + "'");
  }
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "quadrature.nodes") quadrature_nodes = to_int(key, value);
  else if (key == "quadrature.y_max") quadrature_y_max = to_double(key, value);
  else if (key == "quadrature.tol") quadrature_tol = to_double(key, value);
  else if (key == "zeta.em_terms") zeta_em_terms = to_int(key, value);
  else if (key == "zeta.em_bernoulli") zeta_em_bernoulli = to_int(key, value);
  else if (key == "deriv.radius") deriv_radius = to_double(key, value);
  else if (key == "deriv.nodes") deriv_nodes = to_int(key, value);
  else if (key == "series.k_max") series_k_max = to_long(key, value);
  else if (key == "zeros.count") zeros_count = to_int(key, value);
  else if (key == "zeros.path") zeros_path = value;
  else if (key == "cache.dir") cache_dir = value;
  else throw ConfigError("config: unknown key '" + key + "'");
}

void RunConfig::validate() const {
  if (quadrature_nodes <= 0 || zeta_em_terms <= 0 || zeta_em_bernoulli <= 0 ||
      deriv_nodes <= 0 || series_k_max <= 0 || zeros_count <= 0)
    throw ConfigError("config: counts must be positive");
  if (!(quadrature_y_max > 0.0) || !(quadrature_tol > 0.0) || !(deriv_radius > 0.0))
    throw ConfigError("config: numeric values must be positive");
  quadrature().validate();
  precision().validate();
}

QuadratureSpec RunConfig::quadrature() const {
  QuadratureSpec q;
  q.nodes = quadrature_nodes;
  q.y_max = quadrature_y_max;
  q.tol = quadrature_tol;
  q.scheme = Scheme::TanhSinh;
  return q;
}

PrecisionProfile RunConfig::precision() const {
  PrecisionProfile p;
  p.em_terms = zeta_em_terms;
  p.em_bernoulli = zeta_em_bernoulli;
  p.deriv_radius = deriv_radius;
  p.deriv_nodes = deriv_nodes;
  return p;
}

std::string RunConfig::canonical() const {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "quadrature.nodes=%d\nquadrature.y_max=%.17g\nquadrature.tol=%.17g\n"
                "zeta.em_terms=%d\nzeta.em_bernoulli=%d\nderiv.radius=%.17g\n"
                "deriv.nodes=%d\nseries.k_max=%ld\nzeros.count=%d\nzeros.path=%s\n"
                "cache.dir=%s\n",
                quadrature_nodes, quadrature_y_max, quadrature_tol, zeta_em_terms,
                zeta_em_bernoulli, deriv_radius, deriv_nodes, series_k_max,
                zeros_count, zeros_path.c_str(), cache_dir.c_str());
  return buf;
}

uint64_t RunConfig::hash() const { return fnv1a_hash(canonical()); }

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t h = line.find('#');
    if (h != std::string::npos) line.erase(h);
    size_t b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r\n");
    std::string body = line.substr(b, e - b + 1);
    size_t eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = body.substr(0, eq);
    std::string val = body.substr(eq + 1);
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t z = s.find_last_not_of(" \t");
      return (a == std::string::npos) ? std::string() : s.substr(a, z - a + 1);
    };
    cfg.set(trim(key), trim(val));
  }
  cfg.validate();
  return cfg;
}

}  // namespace zf
