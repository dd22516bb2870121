#ifndef HEXAPROC_ACTION_HPP
#define HEXAPROC_ACTION_HPP

#include <functional>

#include "hexaproc/geometry.hpp"
#include "hexaproc/linalg.hpp"
#include "hexaproc/params.hpp"
#include "hexaproc/schrodinger.hpp"

namespace hexaproc {

/// Complex action S(Z, t) = a + b.Z + (1/2) Z.CZ with C complex symmetric.
/// The quadratic family is closed under the recurrence for potentials of
/// degree <= 2, and the complex minimum over the drift is exact there.
struct QuadraticAction {
  Complex a{};
  Vec3c b{};
  Mat3c C{};
  double t = 0.0;

  QuadraticAction() = default;
  QuadraticAction(Complex a_, Vec3c b_, Mat3c C_, double t_);

  Complex eval(const Vec3c& z) const { return a + dot(b, z) + 0.5 * dot(z, C * z); }
  Vec3c gradient(const Vec3c& z) const { return b + C * z; }
  Complex laplacian() const { return trace(C); }
};

/// Potential of degree <= 2: V(Z) = v0 + v1.Z + (1/2) Z.v2 Z.
struct Potential {
  enum class Kind { free, linear, harmonic };

  Kind kind = Kind::free;
  Complex v0{};
  Vec3c v1{};
  Mat3c v2{};

  static Potential free_space();
  static Potential linear(const Vec3c& gradient);
  /// V = (1/2) k |X|^2
  static Potential harmonic(double k);

  Complex eval(const Vec3c& z) const { return v0 + dot(v1, z) + 0.5 * dot(z, v2 * z); }
  double eval_real(double x) const;  // x-axis restriction, imaginary part must vanish
};

/// One 6-eps block of the least-action recurrence: six sub-steps, each the
/// exact quadratic image of  min over V of  E_j S(Z - V eps - gamma D_j)
/// + L(Z, V) eps, where D_j are the arrival offsets u^j - s^5 u^j and
/// L = (1/2) m V^2 - V(Z). The offset mean contributes i (hbar/2m) eps tr C
/// through the permutation's exact covariance.
QuadraticAction recurrence_step(const QuadraticAction& action, const Permutation& s,
                                const Potential& potential, const PhysicalParams& params);

/// Time-indexed quadratic action, e.g. the Riccati flow.
using QuadraticActionPath = std::function<QuadraticAction(double)>;

/// Independent route to the same dynamics: RK4 integration of the complex
/// Hamilton-Jacobi coefficient ODEs
///   a' = -b.b/2m - v0 + i (hbar/2m) tr C
///   b' = -(C b)/m - v1
///   C' = -C^2/m  - v2.
QuadraticAction riccati_reference(const QuadraticAction& initial, const Potential& potential,
                                  const PhysicalParams& params, double t_final,
                                  int n_substeps = 4096);

/// Callable wrapper around riccati_reference (fresh integration per call).
QuadraticActionPath riccati_path(const QuadraticAction& initial, const Potential& potential,
                                 const PhysicalParams& params, int n_substeps = 4096);

/// dS/dt + (grad S)^2/2m + V - i (hbar/2m) lap S at (z, t), with the time
/// derivative taken by five-point central differences along the path so the
/// residual is an independent check of the path, not an identity.
Complex hj_residual(const QuadraticActionPath& path, const Potential& potential,
                    const Vec3c& z, double t, const PhysicalParams& params,
                    double dt_fd = 1e-3);

/// psi(x) = exp(i S(x e1, t) / hbar) sampled on the grid (real probes only).
/// Exponents beyond +-700 are clamped and counted in the result.
WaveField to_wavefunction(const QuadraticAction& action, const Grid& grid,
                          const PhysicalParams& params);

/// Same map for explicitly sampled S values.
WaveField to_wavefunction(const std::vector<Complex>& action_values, const Grid& grid,
                          double t, const PhysicalParams& params);

}  // namespace hexaproc

#endif
