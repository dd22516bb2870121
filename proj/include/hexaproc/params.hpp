#ifndef HEXAPROC_PARAMS_HPP
#define HEXAPROC_PARAMS_HPP

#include <complex>
#include <stdexcept>

#include "hexaproc/linalg.hpp"

namespace hexaproc {

/// Physical constants of a run: hbar, particle mass, time step epsilon.
/// gamma = (1+i) sqrt(3 hbar eps / 8 m) is the complex hop amplitude shared
/// by every formula; hop_scale is its real modulus factor.
struct PhysicalParams {
  double hbar;
  double mass;
  double epsilon;
  Complex gamma;

  PhysicalParams(double hbar_, double mass_, double epsilon_)
      : hbar(hbar_), mass(mass_), epsilon(epsilon_) {
    if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be > 0");
    if (!(mass > 0.0)) throw std::invalid_argument("mass must be > 0");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
    gamma = Complex(1.0, 1.0) * hop_scale();
  }

  /// sqrt(3 hbar eps / 8 m), the real spatial scale of one hop.
  double hop_scale() const { return std::sqrt(3.0 * hbar * epsilon / (8.0 * mass)); }

  /// Same physics, different time step.
  PhysicalParams with_epsilon(double eps) const { return {hbar, mass, eps}; }
};

}  // namespace hexaproc

#endif
