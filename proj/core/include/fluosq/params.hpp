#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace fluosq {

// Policy for the cross-damping between the two linearly polarized decay
// channels.  Auto resolves to -sqrt(gamma1*gamma2) = -gamma/3 (the antiparallel
// dipoles share vacuum modes); Off sets it to zero; Explicit uses a caller
// value within the Cauchy-Schwarz bound.
enum class Gamma12Policy { Auto, Off, Explicit };

// Physical inputs of the driven J=1/2 <-> J=1/2 atom, in units of the total
// excited-state decay rate gamma.  The branching ratios are fixed by the
// level scheme: gamma1 = gamma2 = gamma/3 (linear channels) and
// gamma_sigma = 2*gamma/3 (circular channels).
struct SystemParams {
  double gamma = 1.0;    // total excited-state decay rate (the global scale)
  double omega_a = 0.0;  // Rabi frequency of the linearly polarized drive
  double omega_b = 0.0;  // Rabi frequency of the circularly polarized drive
  double delta = 0.0;    // drive detuning from atomic resonance
  double phi = 0.0;      // relative phase between the two drives
  double theta = 0.0;    // detected quadrature phase

  Gamma12Policy gamma12_policy = Gamma12Policy::Auto;
  double gamma12_value = 0.0;  // only read when policy == Explicit

  double gamma1() const { return gamma / 3.0; }
  double gamma2() const { return gamma / 3.0; }
  double gamma_sigma() const { return 2.0 * gamma / 3.0; }

  double gamma12() const {
    switch (gamma12_policy) {
      case Gamma12Policy::Auto:
        return -std::sqrt(gamma1() * gamma2());
      case Gamma12Policy::Off:
        return 0.0;
      case Gamma12Policy::Explicit:
        return gamma12_value;
    }
    return 0.0;
  }

  bool vic_enabled() const { return gamma12() != 0.0; }

  SystemParams with_gamma12(Gamma12Policy policy, double value = 0.0) const {
    SystemParams p = *this;
    p.gamma12_policy = policy;
    p.gamma12_value = value;
    return p;
  }

  void validate() const {
    if (!(std::isfinite(gamma) && gamma > 0.0))
      throw std::invalid_argument("SystemParams: gamma must be finite and > 0");
    if (!(std::isfinite(omega_a) && omega_a >= 0.0))
      throw std::invalid_argument("SystemParams: omega_a must be finite and >= 0");
    if (!(std::isfinite(omega_b) && omega_b >= 0.0))
      throw std::invalid_argument("SystemParams: omega_b must be finite and >= 0");
    if (!std::isfinite(delta) || !std::isfinite(phi) || !std::isfinite(theta))
      throw std::invalid_argument("SystemParams: delta/phi/theta must be finite");
    const double bound = std::sqrt(gamma1() * gamma2());
    if (std::abs(gamma12()) > bound * (1.0 + 1e-12))
      throw std::invalid_argument("SystemParams: |gamma12| exceeds sqrt(gamma1*gamma2)");
  }
};

inline std::string to_string(Gamma12Policy p) {
  switch (p) {
    case Gamma12Policy::Auto: return "auto";
    case Gamma12Policy::Off: return "off";
    case Gamma12Policy::Explicit: return "explicit";
  }
  return "?";
}

}  // namespace fluosq
