#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace helmprop {

using Complex = std::complex<double>;

inline constexpr Complex kImag{0.0, 1.0};

/// Failure categories. Every error carries one so that callers (and the CLI,
/// which maps them to exit codes) can react without parsing message text.
enum class ErrorKind {
  Domain,            // argument outside the mathematical domain
  Shape,             // mismatched grids / dimensions
  Coverage,          // requested feature does not fit the grid
  Format,            // malformed file or field header
  Io,                // OS-level read/write failure
  Singularity,       // evaluation at a degenerate (caustic) configuration
  MicrolocalSupport, // spectral mass leaks outside the assumed sheet
  Convergence,       // iterative solve did not converge
  NotInRange,        // no preimage / value outside the reachable set
  Config,            // inconsistent run parameters
  Resolution,        // grid too coarse for the requested analysis
  Wraparound,        // periodic-boundary contamination above threshold
  Usage,             // bad command line
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Coverage: return "coverage";
    case ErrorKind::Format: return "format";
    case ErrorKind::Io: return "io";
    case ErrorKind::Singularity: return "singularity";
    case ErrorKind::MicrolocalSupport: return "microlocal-support";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::NotInRange: return "not-in-range";
    case ErrorKind::Config: return "config";
    case ErrorKind::Resolution: return "resolution";
    case ErrorKind::Wraparound: return "wraparound";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

}  // namespace helmprop
