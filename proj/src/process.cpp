#include "hexaproc/process.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace hexaproc {

ProcessState initial_state(const Vec3c& z0, const Permutation& s) {
  ProcessState st;
  st.step_index = 0;
  st.z.fill(z0);
  st.z_basic = z0;
  st.permutation_id = s.id();
  return st;
}

ProcessState step(const ProcessState& state, const Permutation& s,
                  const VelocityField& drift, const PhysicalParams& params) {
  const long n = state.step_index;
  const long q = n / 6;
  const double eps = params.epsilon;
  const Vec3c v = drift(6.0 * static_cast<double>(q + 1) * eps);

  ProcessState next;
  next.step_index = n + 1;
  next.permutation_id = state.permutation_id;
  next.z_basic = state.z_basic + eps * v;
  for (int j = 0; j < 6; ++j) {
    next.z[static_cast<std::size_t>(j)] =
        state.z[static_cast<std::size_t>(j)] + eps * v +
        params.gamma * to_vec3c(s.hop(j, n));
  }
#ifndef NDEBUG
  assert(offset_identity_residual(next, s, params) < 1e-12);
#endif
  return next;
}

std::vector<ProcessState> simulate(const Vec3c& z0, const Permutation& s,
                                   const VelocityField& drift,
                                   const PhysicalParams& params, long n_steps) {
  if (n_steps < 0) throw std::invalid_argument("n_steps must be >= 0");
  std::vector<ProcessState> traj;
  traj.reserve(static_cast<std::size_t>(n_steps) + 1);
  traj.push_back(initial_state(z0, s));
  for (long n = 0; n < n_steps; ++n) traj.push_back(step(traj.back(), s, drift, params));
  return traj;
}

double offset_identity_residual(const ProcessState& state, const Permutation& s,
                                const PhysicalParams& params) {
  const double scale = std::max(1.0, norm(state.z_basic));
  double worst = 0.0;
  for (int j = 0; j < 6; ++j) {
    const Vec3c expected =
        state.z_basic + params.gamma * to_vec3c(s.offset(j, state.step_index));
    worst = std::max(worst, norm(state.z[static_cast<std::size_t>(j)] - expected));
  }
  return worst / scale;
}

BlockPhase phase_of(long n) {
  switch (n % 6) {
    case 0: return BlockPhase::coincident;
    case 1: case 5: return BlockPhase::face_centers;
    case 2: case 4: return BlockPhase::edge_midpoints;
    default: return BlockPhase::vertices;
  }
}

int signed_block_offset(long n) {
  const long r = n % 6;
  return r <= 3 ? static_cast<int>(r) : static_cast<int>(r - 6);
}

Vec3c ode_reference(const Vec3c& z0, const VelocityField& drift, double t,
                    int n_substeps) {
  if (t < 0.0) throw std::invalid_argument("t must be >= 0");
  if (n_substeps < 1) throw std::invalid_argument("n_substeps must be >= 1");
  const double h = t / n_substeps;
  Vec3c z = z0;
  for (int k = 0; k < n_substeps; ++k) {
    const double tk = h * k;
    // RHS independent of z, so RK4 reduces to Simpson quadrature of V
    const Vec3c k1 = drift(tk);
    const Vec3c k2 = drift(tk + 0.5 * h);
    const Vec3c k4 = drift(tk + h);
    z = z + (h / 6.0) * (k1 + 4.0 * k2 + k4);
  }
  return z;
}

std::vector<ConvergenceRow> convergence_rate(const Vec3c& z0, const Permutation& s,
                                             const VelocityField& drift,
                                             const PhysicalParams& base,
                                             double t_final,
                                             std::span<const double> epsilon_ladder) {
  if (epsilon_ladder.empty()) throw std::invalid_argument("empty epsilon ladder");
  for (std::size_t i = 0; i + 1 < epsilon_ladder.size(); ++i)
    if (!(epsilon_ladder[i] > epsilon_ladder[i + 1]))
      throw std::domain_error("epsilon ladder must be strictly decreasing");

  std::vector<ConvergenceRow> rows;
  for (const double eps : epsilon_ladder) {
    const double blocks = t_final / (6.0 * eps);
    if (std::abs(blocks - std::round(blocks)) > 1e-9 * std::max(1.0, blocks))
      throw std::domain_error("t_final/(6 eps) must be an integer for every rung");
    const long n_steps = std::lround(blocks) * 6;
    const PhysicalParams params = base.with_epsilon(eps);

    ProcessState st = initial_state(z0, s);
    Vec3c z_ode = z0;
    double dev = 0.0;
    for (long n = 0; n < n_steps; ++n) {
      st = step(st, s, drift, params);
      // refine the smooth reference over this substep
      const int sub = 16;
      const double h = eps / sub;
      for (int k = 0; k < sub; ++k) {
        const double tk = static_cast<double>(n) * eps + h * k;
        const Vec3c k1 = drift(tk);
        const Vec3c k2 = drift(tk + 0.5 * h);
        const Vec3c k4 = drift(tk + h);
        z_ode = z_ode + (h / 6.0) * (k1 + 4.0 * k2 + k4);
      }
      for (int j = 0; j < 6; ++j)
        dev = std::max(dev, norm(st.z[static_cast<std::size_t>(j)] - z_ode));
    }
    ConvergenceRow row{eps, dev, 0.0};
    if (!rows.empty())
      row.estimated_order = std::log(rows.back().max_deviation / dev) /
                            std::log(rows.back().epsilon / eps);
    rows.push_back(row);
  }
  return rows;
}

double fitted_order(std::span<const ConvergenceRow> rows) {
  if (rows.size() < 2) throw std::invalid_argument("need at least two rungs");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(rows.size());
  for (const auto& r : rows) {
    const double x = std::log(r.epsilon), y = std::log(r.max_deviation);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace hexaproc
