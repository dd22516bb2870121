#ifndef HEXAPROC_SCHRODINGER_HPP
#define HEXAPROC_SCHRODINGER_HPP

#include <functional>
#include <utility>
#include <vector>

#include "hexaproc/linalg.hpp"
#include "hexaproc/params.hpp"

namespace hexaproc {

/// Uniform 1-D spatial mesh.
struct Grid {
  double x_min = -10.0;
  double x_max = 10.0;
  int n = 1001;

  double dx() const { return (x_max - x_min) / (n - 1); }
  double x(int i) const { return x_min + dx() * i; }
};

/// Discretized complex wavefunction on a grid at one time.
struct WaveField {
  Grid grid;
  std::vector<Complex> psi;
  double t = 0.0;
  int clamped_count = 0;  // nodes clamped during exp overflow (see action)
};

/// Normalized Gaussian packet, center x0, width sigma0, momentum p0.
WaveField gaussian_packet(const Grid& grid, double x0, double sigma0, double p0,
                          double hbar);

double l2_norm(const WaveField& psi);

/// Mean and variance of x under |psi|^2 (trapezoid weights).
std::pair<double, double> position_moments(const WaveField& psi);

struct PropagationReport {
  double norm_drift_max = 0.0;    // max |norm(t)/norm(0) - 1| over the run
  double boundary_leak_max = 0.0; // max |psi| at the edges / max |psi|
  bool boundary_warning = false;  // leak exceeded 1e-8
};

struct SchrodingerResult {
  std::vector<WaveField> frames;  // first frame is psi0; uniform spacing
  PropagationReport report;
};

/// Crank-Nicolson propagation of i hbar psi_t = -(hbar^2/2m) psi_xx + V psi
/// with Dirichlet ends. The Cayley form is unitary, so the discrete norm is
/// conserved to solver roundoff. snapshot_stride 0 keeps only first + last.
SchrodingerResult schrodinger_propagate(const WaveField& psi0,
                                        const std::function<double(double)>& potential,
                                        const PhysicalParams& params, double dt,
                                        long n_steps, long snapshot_stride = 0);

/// Final frame only.
WaveField schrodinger_reference(const WaveField& psi0,
                                const std::function<double(double)>& potential,
                                const PhysicalParams& params, double dt, long n_steps);

/// Phase of psi unwrapped by nearest-branch continuation outward from the
/// peak of |psi|^2 (the deterministic convention shared by the S-extraction
/// and the trajectory machinery).
std::vector<double> unwrapped_phase(const WaveField& psi);

/// (S, rho) with psi = sqrt(rho) exp(i S / hbar); S uses unwrapped_phase.
std::pair<std::vector<double>, std::vector<double>> phase_density_split(
    const WaveField& psi, double hbar);

/// psi from (S, rho) samples.
WaveField compose_wavefield(const std::vector<double>& S,
                            const std::vector<double>& rho, const Grid& grid,
                            double t, double hbar);

/// Evaluate a separable 3-D product of 1-D fields at (x, y, z).
Complex separable_product(const std::array<WaveField, 3>& fields, const Vec3d& point);

}  // namespace hexaproc

#endif
