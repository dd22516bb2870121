#ifndef HEXAPROC_STATISTICS_HPP
#define HEXAPROC_STATISTICS_HPP

#include <span>

#include "hexaproc/process.hpp"

namespace hexaproc {

enum class Axis { x = 0, y = 1, z = 2 };

/// Real positions and forward-difference momenta of the six processes over
/// one block n = 6q..6q+5, plus the two extra rows the shifted products need.
struct WindowSample {
  long q = 0;
  std::array<std::array<Vec3d, 6>, 8> r;  // r[k][j], k = n - 6q in 0..7
  std::array<std::array<Vec3d, 6>, 7> p;  // p[k][j] = m (r[k+1]-r[k]) / eps
  std::array<Vec3d, 8> r_tilde;           // mean over j per row
  Vec3d v_tilde;                          // block drift (r_tilde[1]-r_tilde[0])/eps
};

/// Slice one block out of a simulated trajectory (real parts). The
/// trajectory must cover steps 6q..6q+7; shorter input is a domain error.
WindowSample make_window(std::span<const ProcessState> trajectory, long q,
                         const PhysicalParams& params);

/// Mean angular momentum of the block: orbital part r_tilde ^ m v_tilde
/// plus the permutation's intrinsic spin. Agrees exactly with the direct
/// 1/36 double sum of r ^ p over the block.
Vec3d mean_angular_momentum(const WindowSample& sample, const Permutation& s,
                            const PhysicalParams& params);

/// RMS deviation over j of the positions from their mean along one axis at
/// step n; equals sqrt(hbar*eps/2m) * sqrt(|w|) with n = 6q + w.
double position_spread(long n, const Permutation& s, const PhysicalParams& params,
                       Axis axis = Axis::x);

/// RMS deviation of the forward-difference momenta; sqrt(hbar*m/2eps),
/// independent of n and axis.
double momentum_spread(long n, const Permutation& s, const PhysicalParams& params,
                       Axis axis = Axis::x);

/// position_spread * momentum_spread = (hbar/2) sqrt(|w|); >= hbar/2 off the
/// basic trajectory, 0 on it.
double heisenberg_product(long n, const Permutation& s, const PhysicalParams& params,
                          Axis axis = Axis::x);

/// (1+i)^2-weighted block mean of p(t+eps) x(t) - x(t+eps) p(t) over the
/// centered fluctuations. For axis_pos == axis_mom the value is exactly
/// -i hbar for every permutation, eps and drift.
Complex commutator_expectation(Axis axis_pos, Axis axis_mom, const Permutation& s,
                               const PhysicalParams& params,
                               const WindowSample& sample);

}  // namespace hexaproc

#endif
