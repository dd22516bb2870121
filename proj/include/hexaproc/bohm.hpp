#ifndef HEXAPROC_BOHM_HPP
#define HEXAPROC_BOHM_HPP

#include <cstdint>
#include <vector>

#include "hexaproc/errors.hpp"
#include "hexaproc/params.hpp"
#include "hexaproc/schrodinger.hpp"

namespace hexaproc {

/// Relative |psi| below which a point counts as a node (phase undefined).
inline constexpr double kNodeThreshold = 1e-8;

/// grad S / m at x, with S = hbar * unwrapped phase; cubic interpolation in
/// x. Throws NodeError inside a node region.
double bohm_velocity(const WaveField& psi, double x, const PhysicalParams& params);

/// (grad S - i (hbar/2) grad log rho) / m; the real part is bohm_velocity.
Complex complex_velocity(const WaveField& psi, double x, const PhysicalParams& params);

struct TrajectoryPath {
  std::vector<double> t;
  std::vector<double> x;  // one sample per movie frame
  bool truncated = false;
  double t_truncated = 0.0;
};

/// Integrate dX/dt = bohm_velocity through a uniformly spaced movie of
/// frames with RK4 (velocity linear in t between frames, cubic in x).
/// Entering a node region truncates the path and flags it.
TrajectoryPath integrate_trajectory(const std::vector<WaveField>& movie, double x0,
                                    const PhysicalParams& params,
                                    int substeps_per_frame = 4);

struct TrajectoryEnsemble {
  std::vector<TrajectoryPath> paths;
  std::vector<double> x0;
  std::uint64_t seed = 0;
  int noise_bins = 0;
  double noise_floor = 0.0;  // L1(initial sample histogram, |psi0|^2)
};

/// Deterministic low-discrepancy ensemble: stratified inverse-CDF samples of
/// |psi(.,0)|^2 with a seed-derived rotation, one trajectory each.
TrajectoryEnsemble make_ensemble(const std::vector<WaveField>& movie, int n_samples,
                                 std::uint64_t seed, int bins,
                                 const PhysicalParams& params,
                                 int substeps_per_frame = 4);

/// L1 distance between the ensemble position histogram at t_check (nearest
/// frame) and |psi(., t_check)|^2 binned the same way.
double continuity_check(const TrajectoryEnsemble& ensemble,
                        const std::vector<WaveField>& movie, double t_check, int bins);

/// eps = h / (6 m v^2) from identifying the 6-eps internal period with the
/// de Broglie period; v must be positive.
double de_broglie_epsilon(double speed, double mass, double planck_h);

}  // namespace hexaproc

#endif
