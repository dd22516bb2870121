#include "hexaproc/statistics.hpp"

#include <cmath>
#include <stdexcept>

namespace hexaproc {

WindowSample make_window(std::span<const ProcessState> trajectory, long q,
                         const PhysicalParams& params) {
  if (q < 0) throw std::domain_error("block index must be >= 0");
  const long first = 6 * q;
  if (trajectory.size() < static_cast<std::size_t>(first + 8))
    throw std::domain_error("trajectory does not cover the full block");

  WindowSample w;
  w.q = q;
  for (int k = 0; k < 8; ++k) {
    const auto& st = trajectory[static_cast<std::size_t>(first + k)];
    if (st.step_index != first + k)
      throw std::domain_error("trajectory steps are not consecutive from 0");
    Vec3d mean{};
    for (int j = 0; j < 6; ++j) {
      w.r[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
          real(st.z[static_cast<std::size_t>(j)]);
      mean = mean + w.r[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    }
    w.r_tilde[static_cast<std::size_t>(k)] = (1.0 / 6.0) * mean;
  }
  for (int k = 0; k < 7; ++k)
    for (int j = 0; j < 6; ++j)
      w.p[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
          (params.mass / params.epsilon) *
          (w.r[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(j)] -
           w.r[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
  w.v_tilde = (1.0 / params.epsilon) * (w.r_tilde[1] - w.r_tilde[0]);
  return w;
}

Vec3d mean_angular_momentum(const WindowSample& sample, const Permutation& s,
                            const PhysicalParams& params) {
  Vec3d r_bar{};
  for (int k = 0; k < 6; ++k) r_bar = r_bar + sample.r_tilde[static_cast<std::size_t>(k)];
  r_bar = (1.0 / 6.0) * r_bar;
  return cross(r_bar, params.mass * sample.v_tilde) + intrinsic_spin(s, params);
}

namespace {

double rms_offset(const Permutation& s, long n, int axis, bool momentum) {
  std::int64_t sum_sq = 0;
  for (int j = 0; j < 6; ++j) {
    const Vec3i d = momentum ? s.hop(j, n) : s.offset(j, n);
    sum_sq += d[axis] * d[axis];
  }
  return std::sqrt(static_cast<double>(sum_sq) / 6.0);
}

}  // namespace

double position_spread(long n, const Permutation& s, const PhysicalParams& params,
                       Axis axis) {
  return params.hop_scale() * rms_offset(s, n, static_cast<int>(axis), false);
}

double momentum_spread(long n, const Permutation& s, const PhysicalParams& params,
                       Axis axis) {
  const double scale = params.mass * params.hop_scale() / params.epsilon;
  return scale * rms_offset(s, n, static_cast<int>(axis), true);
}

double heisenberg_product(long n, const Permutation& s, const PhysicalParams& params,
                          Axis axis) {
  return position_spread(n, s, params, axis) * momentum_spread(n, s, params, axis);
}

Complex commutator_expectation(Axis axis_pos, Axis axis_mom, const Permutation& s,
                               const PhysicalParams& params,
                               const WindowSample& sample) {
  (void)s;
  (void)params;
  const int a = static_cast<int>(axis_pos);
  const int b = static_cast<int>(axis_mom);
  const Complex weight = Complex(1.0, 1.0) * Complex(1.0, 1.0);

  // centered fluctuations: the drift carries no quantum content and its
  // contribution is not eps-free, so the expectation is over r - r_bar,
  // p - p_bar
  std::array<std::array<double, 6>, 8> dr;  // position axis a
  std::array<std::array<double, 6>, 7> dm;  // momentum axis b
  for (int k = 0; k < 8; ++k) {
    double mean_r = 0.0;
    for (int j = 0; j < 6; ++j)
      mean_r += sample.r[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)][a];
    mean_r /= 6.0;
    for (int j = 0; j < 6; ++j)
      dr[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
          sample.r[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)][a] - mean_r;
  }
  for (int k = 0; k < 7; ++k) {
    double mean_p = 0.0;
    for (int j = 0; j < 6; ++j)
      mean_p += sample.p[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)][b];
    mean_p /= 6.0;
    for (int j = 0; j < 6; ++j)
      dm[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
          sample.p[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)][b] - mean_p;
  }

  double acc = 0.0;
  for (int k = 0; k < 6; ++k)
    for (int j = 0; j < 6; ++j)
      acc += dm[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(j)] *
                 dr[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] -
             dr[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(j)] *
                 dm[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
  return weight * (acc / 36.0);
}

}  // namespace hexaproc
