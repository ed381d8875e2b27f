#pragma once

#include <string>

#include "zf/coefficients.hpp"
#include "zf/config.hpp"

namespace zf {

// Coefficient CSV: a '# config_hash=...' provenance comment, then the header
// n,re,im,method,abs_err_est and one row per index (17 significant digits,
// deterministic ordering). Returns the exact bytes written.
std::string table_to_csv(const CoefficientTable& t, uint64_t config_hash);

// Atomic write: temp file in the target directory, then rename.
void atomic_write(const std::string& path, const std::string& bytes);

std::string read_file(const std::string& path);  // IoError if missing

// Cache: bytes stored under dir/<hash16>.csv.
std::string cache_path(const std::string& dir, uint64_t key_hash);
bool cache_lookup(const std::string& dir, uint64_t key_hash, std::string& bytes);
void cache_store(const std::string& dir, uint64_t key_hash, const std::string& bytes);

}  // namespace zf
