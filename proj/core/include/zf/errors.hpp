#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zf {

// Base class for every failure this library raises on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ToleranceError : Error { using Error::Error; };
struct ZeroDivisionError : Error { using Error::Error; };
struct DegenerateParamError : Error { using Error::Error; };
struct TailTooLarge : Error { using Error::Error; };
struct SlowConvergence : Error { using Error::Error; };
struct IndexRangeError : Error { using Error::Error; };
struct ConventionUnvalidated : Error { using Error::Error; };
struct CalibrationRequired : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct OrderError : Error { using Error::Error; };
struct SanityError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct NumericError : Error { using Error::Error; };

// Raised when two independent evaluation routes disagree beyond tolerance.
// Carries both values so callers can report them.
struct RouteDisagreement : Error {
  std::complex<double> route_a;
  std::complex<double> route_b;
  RouteDisagreement(const std::string& msg,
                    std::complex<double> a, std::complex<double> b)
      : Error(msg), route_a(a), route_b(b) {}
};

}  // namespace zf
