#ifndef HEXAPROC_PROCESS_HPP
#define HEXAPROC_PROCESS_HPP

#include <functional>
#include <span>
#include <vector>

#include "hexaproc/geometry.hpp"
#include "hexaproc/linalg.hpp"
#include "hexaproc/params.hpp"

namespace hexaproc {

/// Complex drift sampled at block times 6(q+1)eps; assumed C^1 in t.
using VelocityField = std::function<Vec3c(double)>;

inline VelocityField zero_field() {
  return [](double) { return Vec3c{}; };
}

/// The six complex positions Z^j and the basic trajectory at step n.
struct ProcessState {
  long step_index = 0;
  std::array<Vec3c, 6> z{};
  Vec3c z_basic{};
  int permutation_id = 1;

  double time(const PhysicalParams& params) const {
    return static_cast<double>(step_index) * params.epsilon;
  }
};

ProcessState initial_state(const Vec3c& z0, const Permutation& s);

/// One step of the six-process recursion: common drift held over each
/// 6-step block plus the permutation hop gamma*(s^(n+1)u - s^n u).
ProcessState step(const ProcessState& state, const Permutation& s,
                  const VelocityField& drift, const PhysicalParams& params);

/// Full trajectory, n_steps+1 states starting with all positions at z0.
std::vector<ProcessState> simulate(const Vec3c& z0, const Permutation& s,
                                   const VelocityField& drift,
                                   const PhysicalParams& params, long n_steps);

/// Max over j of |z[j] - z_basic - gamma*(s^n u^j - u^j)| / max(1, |z_basic|):
/// how far the recursion has drifted off the closed-form offset identity.
double offset_identity_residual(const ProcessState& state, const Permutation& s,
                                const PhysicalParams& params);

/// Where the six real positions sit relative to the block cube (n mod 6):
/// coincident (0), face centers (1, 5), edge midpoints (2, 4), vertices (3).
enum class BlockPhase { coincident, face_centers, edge_midpoints, vertices };
BlockPhase phase_of(long n);

/// Signed offset w with n = 6q + w and |w| <= 3 (ties at 3 resolved to +3).
int signed_block_offset(long n);

/// Solution of dZ/dt = V(t) by classical RK4 with n_substeps uniform steps;
/// error is O((t/n_substeps)^4) for smooth fields.
Vec3c ode_reference(const Vec3c& z0, const VelocityField& drift, double t,
                    int n_substeps = 4096);

struct ConvergenceRow {
  double epsilon;
  double max_deviation;   // max over steps and j of |Z^j - Z_ode|
  double estimated_order; // log2(prev/this) for successive rungs; 0 on first
};

/// Deviation of the six processes from the smooth ODE trajectory over a
/// ladder of strictly decreasing eps; each t_final/(6 eps) must be integral.
std::vector<ConvergenceRow> convergence_rate(const Vec3c& z0, const Permutation& s,
                                             const VelocityField& drift,
                                             const PhysicalParams& base,
                                             double t_final,
                                             std::span<const double> epsilon_ladder);

/// Least-squares slope of log(deviation) vs log(eps) for a ladder result.
double fitted_order(std::span<const ConvergenceRow> rows);

}  // namespace hexaproc

#endif
