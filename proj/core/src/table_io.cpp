#include "zf/table_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace zf {

std::string table_to_csv(const CoefficientTable& t, uint64_t config_hash) {
  std::ostringstream out;
  out << "# config_hash=" << hash_hex(config_hash) << " table_hash="
      << hash_hex(t.meta_hash) << "\n";
  out << "n,re,im,method,abs_err_est\n";
  char buf[160];
  for (int n = t.n_min; n <= t.n_max; ++n) {
    Complex v = t.at(n);
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%s,%.3g\n", n, v.real(),
                  v.imag(), method_name(t.method).c_str(), t.err_at(n));
    out << buf;
  }
  return out.str();
}

void atomic_write(const std::string& path, const std::string& bytes) {
  namespace fs = std::filesystem;
  fs::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
  }
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, p, ec);
  if (ec) throw IoError("rename failed for " + path + ": " + ec.message());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string cache_path(const std::string& dir, uint64_t key_hash) {
  return dir + "/" + hash_hex(key_hash) + ".csv";
}

bool cache_lookup(const std::string& dir, uint64_t key_hash, std::string& bytes) {
  std::string p = cache_path(dir, key_hash);
  if (!std::filesystem::exists(p)) return false;
  bytes = read_file(p);
  return true;
}

void cache_store(const std::string& dir, uint64_t key_hash, const std::string& bytes) {
  atomic_write(cache_path(dir, key_hash), bytes);
}

}  // namespace zf
