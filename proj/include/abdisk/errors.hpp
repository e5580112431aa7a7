#pragma once

#include <stdexcept>
#include <string>

namespace abdisk {

// Structured failure modes. Every throw in the library goes through Error so
// callers (and the CLI exit-code mapping) can dispatch on kind().
enum class ErrorKind {
  domain,          // argument outside the documented domain
  pole,            // gamma-function pole / bound-state divergence
  seam,            // angular separation on the branch seam |dphi| = pi
  branch_cut,      // theta within branch_cut_eps of a horocyclic cut
  convergence,     // series, quadrature or mode sum failed to converge
  quantum_number,  // inadmissible (n, l) for the requested level family
  edge,            // evaluation exactly on a spectral-edge singularity
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace abdisk
