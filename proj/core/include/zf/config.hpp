#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "zf/types.hpp"

namespace zf {

// key=value run configuration; flag names match the keys verbatim.
struct RunConfig {
  int quadrature_nodes = 32;       // quadrature.nodes
  double quadrature_y_max = 5000;  // quadrature.y_max
  double quadrature_tol = 1e-10;   // quadrature.tol
  int zeta_em_terms = 50;          // zeta.em_terms
  int zeta_em_bernoulli = 25;      // zeta.em_bernoulli
  double deriv_radius = 0.2;       // deriv.radius
  int deriv_nodes = 64;            // deriv.nodes
  long series_k_max = 10000;       // series.k_max
  int zeros_count = 100;           // zeros.count
  std::string zeros_path = "data/zeros100.txt";  // zeros.path
  std::string cache_dir = ".zfcache";            // cache.dir

  void set(const std::string& key, const std::string& value);  // ConfigError on unknown key
  void validate() const;

  QuadratureSpec quadrature() const;
  PrecisionProfile precision() const;

  std::string canonical() const;  // deterministic key=value dump
  uint64_t hash() const;          // FNV-1a of canonical()
};

// Parse a config file of key=value lines ('#' comments allowed) on top of
// defaults.
RunConfig load_config(const std::string& path);

uint64_t fnv1a_hash(const std::string& s);
std::string hash_hex(uint64_t h);

}  // namespace zf
