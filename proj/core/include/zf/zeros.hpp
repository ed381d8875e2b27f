#pragma once

#include <string>
#include <vector>

#include "zf/types.hpp"

namespace zf {

// Ordinates of nontrivial zeros (positive imaginary parts, ascending) plus
// zeta'(1/2 + i beta) computed on load. Immutable once built.
struct ZeroTable {
  std::vector<double> betas;
  std::vector<Complex> zeta_prime;
  size_t count() const { return betas.size(); }

  void validate() const;  // ascending, first ~ 14.1347, derivatives nonzero
};

// Parse a zero file: UTF-8 text, one ordinate per line, '#' comments.
// ParseError (with line number), OrderError, SanityError per the contracts.
std::vector<double> parse_zero_file(const std::string& path);

// Build the table: validate ordinates and evaluate zeta'(rho) by a Cauchy
// circle of radius 0.1 around each zero.
ZeroTable make_zero_table(std::vector<double> betas,
                          const PrecisionProfile& prec = {});

// CSV round trip for the enriched table (beta,zp_re,zp_im with full digits).
void write_zero_cache(const ZeroTable& t, const std::string& path);
ZeroTable read_zero_cache(const std::string& path);

}  // namespace zf
