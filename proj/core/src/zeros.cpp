#include "zf/zeros.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "zf/cauchy.hpp"
#include "zf/zetafn.hpp"

namespace zf {

void ZeroTable::validate() const {
  if (betas.empty()) throw SanityError("ZeroTable: empty");
  if (std::abs(betas.front() - 14.1347) > 1e-3)
    throw SanityError("ZeroTable: first ordinate is not ~14.1347");
  for (size_t i = 1; i < betas.size(); ++i)
    if (!(betas[i] > betas[i - 1])) throw OrderError("ZeroTable: ordinates not ascending");
  for (size_t i = 0; i < zeta_prime.size(); ++i)
    if (std::abs(zeta_prime[i]) < 1e-6)
      throw SanityError("ZeroTable: zeta'(rho) suspiciously small at index " +
                        std::to_string(i));
}

std::vector<double> parse_zero_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zero file: " + path);
  std::vector<double> betas;
  std::string line;
  int lineno = 0;
  bool any_data = false;
  while (std::getline(in, line)) {
    ++lineno;
    size_t h = line.find('#');
    if (h != std::string::npos) line.erase(h);
    // trim
    size_t b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r\n");
    std::string tok = line.substr(b, e - b + 1);
    try {
      size_t used = 0;
      double v = std::stod(tok, &used);
      if (used != tok.size())
        throw ParseError("zero file line " + std::to_string(lineno) +
                         ": trailing characters after number");
      if (!(v > 0.0) || !std::isfinite(v))
        throw ParseError("zero file line " + std::to_string(lineno) +
                         ": ordinate must be a positive finite number");
      betas.push_back(v);
      any_data = true;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("zero file line " + std::to_string(lineno) +
                       ": not a number: '" + tok + "'");
    }
  }
  if (!any_data) throw ParseError("zero file contains no data lines: " + path);
  for (size_t i = 1; i < betas.size(); ++i)
    if (!(betas[i] > betas[i - 1]))
      throw OrderError("zero file: ordinates not strictly ascending near entry " +
                       std::to_string(i + 1));
  if (std::abs(betas.front() - 14.1347) > 1e-3)
    throw SanityError("zero file: first ordinate " + std::to_string(betas.front()) +
                      " is not ~14.1347");
  return betas;
}

ZeroTable make_zero_table(std::vector<double> betas, const PrecisionProfile& prec) {
  ZeroTable t;
  t.betas = std::move(betas);
  t.zeta_prime.reserve(t.betas.size());
  auto f = [&prec](Complex z) { return zeta(z, prec); };
  for (double b : t.betas) {
    auto d = cauchy_derivatives(f, Complex(0.5, b), 0.1, 1,
                                std::max(prec.deriv_nodes, 32));
    t.zeta_prime.push_back(d[1]);
  }
  t.validate();
  return t;
}

void write_zero_cache(const ZeroTable& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write zero cache: " + path);
  out << "beta,zp_re,zp_im\n";
  char buf[128];
  for (size_t i = 0; i < t.betas.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", t.betas[i],
                  t.zeta_prime[i].real(), t.zeta_prime[i].imag());
    out << buf;
  }
}

ZeroTable read_zero_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zero cache: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "beta,zp_re,zp_im")
    throw ParseError("zero cache: bad header in " + path);
  ZeroTable t;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double b, re, im;
    if (std::sscanf(line.c_str(), "%lg,%lg,%lg", &b, &re, &im) != 3)
      throw ParseError("zero cache: bad row '" + line + "'");
    t.betas.push_back(b);
    t.zeta_prime.push_back(Complex(re, im));
  }
  t.validate();
  return t;
}

}  // namespace zf
