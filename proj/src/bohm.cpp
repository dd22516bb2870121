#include "hexaproc/bohm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hexaproc {

namespace {

/// Per-frame cache: unwrapped S, log rho, node mask.
struct PhaseFrame {
  Grid grid;
  double t = 0.0;
  std::vector<double> S;
  std::vector<double> log_rho;
  std::vector<char> node;
};

PhaseFrame prepare(const WaveField& psi, double hbar) {
  PhaseFrame f;
  f.grid = psi.grid;
  f.t = psi.t;
  f.S = unwrapped_phase(psi);
  for (auto& s : f.S) s *= hbar;
  double peak = 0.0;
  for (const auto& v : psi.psi) peak = std::max(peak, std::abs(v));
  const double cut = kNodeThreshold * peak;
  f.log_rho.resize(psi.psi.size());
  f.node.resize(psi.psi.size());
  for (std::size_t i = 0; i < psi.psi.size(); ++i) {
    const double m = std::abs(psi.psi[i]);
    f.node[i] = m < cut;
    f.log_rho[i] = f.node[i] ? 0.0 : 2.0 * std::log(m);
  }
  return f;
}

/// Derivative of the Catmull-Rom interpolant of the samples at x.
/// Throws NodeError if the stencil touches a node point.
double cubic_derivative(const PhaseFrame& frame, const std::vector<double>& samples,
                        double x) {
  const Grid& g = frame.grid;
  if (x < g.x_min || x > g.x_max) throw NodeError("position left the grid");
  const double dx = g.dx();
  const double u_all = (x - g.x_min) / dx;
  int i = std::clamp(static_cast<int>(std::floor(u_all)), 1, g.n - 3);
  const double u = u_all - i;

  const int im = i - 1, ip = i + 1, ipp = i + 2;
  for (int k : {im, i, ip, ipp})
    if (frame.node[static_cast<std::size_t>(k)])
      throw NodeError("wavefunction node inside interpolation stencil");

  const double f0 = samples[static_cast<std::size_t>(im)];
  const double f1 = samples[static_cast<std::size_t>(i)];
  const double f2 = samples[static_cast<std::size_t>(ip)];
  const double f3 = samples[static_cast<std::size_t>(ipp)];
  // Catmull-Rom: f(u) = f1 + 0.5u(f2-f0) + u^2(f0 - 2.5f1 + 2f2 - 0.5f3)
  //                    + u^3(-0.5f0 + 1.5f1 - 1.5f2 + 0.5f3)
  const double c1 = 0.5 * (f2 - f0);
  const double c2 = f0 - 2.5 * f1 + 2.0 * f2 - 0.5 * f3;
  const double c3 = -0.5 * f0 + 1.5 * f1 - 1.5 * f2 + 0.5 * f3;
  return (c1 + 2.0 * c2 * u + 3.0 * c3 * u * u) / dx;
}

double frame_velocity(const PhaseFrame& frame, double x, const PhysicalParams& p) {
  return cubic_derivative(frame, frame.S, x) / p.mass;
}

void check_uniform_movie(const std::vector<WaveField>& movie) {
  if (movie.size() < 2) throw std::invalid_argument("movie needs at least two frames");
  const double dt = movie[1].t - movie[0].t;
  if (!(dt > 0.0)) throw std::invalid_argument("movie frames must advance in time");
  for (std::size_t k = 1; k < movie.size(); ++k) {
    const double step = movie[k].t - movie[k - 1].t;
    if (std::abs(step - dt) > 1e-9 * dt)
      throw std::invalid_argument("movie frames must be uniformly spaced");
  }
}

}  // namespace

double bohm_velocity(const WaveField& psi, double x, const PhysicalParams& params) {
  return frame_velocity(prepare(psi, params.hbar), x, params);
}

Complex complex_velocity(const WaveField& psi, double x, const PhysicalParams& params) {
  const PhaseFrame frame = prepare(psi, params.hbar);
  const double v_re = frame_velocity(frame, x, params);
  const double dlog_rho = cubic_derivative(frame, frame.log_rho, x);
  return Complex(v_re, -0.5 * params.hbar * dlog_rho / params.mass);
}

namespace {

TrajectoryPath integrate_prepared(const std::vector<PhaseFrame>& frames, double x0,
                                  const PhysicalParams& params, int substeps) {
  const double dt_frame = frames[1].t - frames[0].t;
  TrajectoryPath path;
  path.t.push_back(frames[0].t);
  path.x.push_back(x0);

  double x = x0;
  for (std::size_t k = 0; k + 1 < frames.size(); ++k) {
    const PhaseFrame& a = frames[k];
    const PhaseFrame& b = frames[k + 1];
    auto vel = [&](double x_at, double theta) {
      return (1.0 - theta) * frame_velocity(a, x_at, params) +
             theta * frame_velocity(b, x_at, params);
    };
    const double h = dt_frame / substeps;
    try {
      for (int s = 0; s < substeps; ++s) {
        const double th0 = static_cast<double>(s) / substeps;
        const double th_half = (s + 0.5) / substeps;
        const double th1 = static_cast<double>(s + 1) / substeps;
        const double k1 = vel(x, th0);
        const double k2 = vel(x + 0.5 * h * k1, th_half);
        const double k3 = vel(x + 0.5 * h * k2, th_half);
        const double k4 = vel(x + h * k3, th1);
        x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
    } catch (const NodeError&) {
      path.truncated = true;
      path.t_truncated = a.t;
      break;
    }
    path.t.push_back(b.t);
    path.x.push_back(x);
  }
  return path;
}

}  // namespace

TrajectoryPath integrate_trajectory(const std::vector<WaveField>& movie, double x0,
                                    const PhysicalParams& params, int substeps_per_frame) {
  check_uniform_movie(movie);
  if (substeps_per_frame < 1) throw std::invalid_argument("substeps must be >= 1");
  std::vector<PhaseFrame> frames;
  frames.reserve(movie.size());
  for (const auto& f : movie) frames.push_back(prepare(f, params.hbar));
  return integrate_prepared(frames, x0, params, substeps_per_frame);
}

namespace {

std::vector<double> histogram_l1_density(const std::vector<double>& xs, const Grid& grid,
                                         int bins) {
  std::vector<double> h(static_cast<std::size_t>(bins), 0.0);
  const double width = (grid.x_max - grid.x_min) / bins;
  for (const double x : xs) {
    int b = static_cast<int>((x - grid.x_min) / width);
    b = std::clamp(b, 0, bins - 1);
    h[static_cast<std::size_t>(b)] += 1.0;
  }
  for (auto& v : h) v /= static_cast<double>(xs.size());
  return h;
}

std::vector<double> density_bin_masses(const WaveField& psi, int bins) {
  // Riemann mass of |psi|^2 per bin, normalized to 1
  std::vector<double> mass(static_cast<std::size_t>(bins), 0.0);
  const double width = (psi.grid.x_max - psi.grid.x_min) / bins;
  double total = 0.0;
  for (int i = 0; i < psi.grid.n; ++i) {
    const double rho = std::norm(psi.psi[static_cast<std::size_t>(i)]);
    int b = static_cast<int>((psi.grid.x(i) - psi.grid.x_min) / width);
    b = std::clamp(b, 0, bins - 1);
    mass[static_cast<std::size_t>(b)] += rho;
    total += rho;
  }
  for (auto& v : mass) v /= total;
  return mass;
}

double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
  return acc;
}

}  // namespace

TrajectoryEnsemble make_ensemble(const std::vector<WaveField>& movie, int n_samples,
                                 std::uint64_t seed, int bins,
                                 const PhysicalParams& params, int substeps_per_frame) {
  check_uniform_movie(movie);
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  if (bins < 2) throw std::invalid_argument("bins must be >= 2");

  const WaveField& psi0 = movie.front();
  const int n = psi0.grid.n;
  const double dx = psi0.grid.dx();

  // cumulative distribution of |psi0|^2 on the grid (trapezoid)
  std::vector<double> cdf(static_cast<std::size_t>(n), 0.0);
  for (int i = 1; i < n; ++i) {
    const double rho_a = std::norm(psi0.psi[static_cast<std::size_t>(i - 1)]);
    const double rho_b = std::norm(psi0.psi[static_cast<std::size_t>(i)]);
    cdf[static_cast<std::size_t>(i)] =
        cdf[static_cast<std::size_t>(i - 1)] + 0.5 * (rho_a + rho_b) * dx;
  }
  const double total = cdf.back();
  for (auto& c : cdf) c /= total;

  // stratified u_i with a Cranley-Patterson rotation from the seed
  std::uint64_t mixed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  mixed ^= mixed >> 33;
  const double rotation = static_cast<double>(mixed >> 11) * 0x1.0p-53;

  TrajectoryEnsemble ens;
  ens.seed = seed;
  ens.noise_bins = bins;
  ens.x0.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    double u = (i + 0.5) / n_samples + rotation;
    u -= std::floor(u);
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const std::size_t hi = std::min<std::size_t>(
        std::max<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), 1), static_cast<std::size_t>(n - 1));
    const double c0 = cdf[hi - 1], c1 = cdf[hi];
    const double w = (c1 > c0) ? (u - c0) / (c1 - c0) : 0.5;
    ens.x0.push_back(psi0.grid.x(static_cast<int>(hi - 1)) + w * dx);
  }
  std::sort(ens.x0.begin(), ens.x0.end());

  ens.noise_floor = l1_distance(histogram_l1_density(ens.x0, psi0.grid, bins),
                                density_bin_masses(psi0, bins));

  std::vector<PhaseFrame> frames;
  frames.reserve(movie.size());
  for (const auto& f : movie) frames.push_back(prepare(f, params.hbar));
  ens.paths.reserve(ens.x0.size());
  for (const double x0 : ens.x0)
    ens.paths.push_back(integrate_prepared(frames, x0, params, substeps_per_frame));
  return ens;
}

double continuity_check(const TrajectoryEnsemble& ensemble,
                        const std::vector<WaveField>& movie, double t_check, int bins) {
  check_uniform_movie(movie);
  const double dt = movie[1].t - movie[0].t;
  const long frame = std::lround((t_check - movie[0].t) / dt);
  if (frame < 0 || frame >= static_cast<long>(movie.size()))
    throw std::invalid_argument("t_check outside the movie");

  std::vector<double> xs;
  xs.reserve(ensemble.paths.size());
  for (const auto& p : ensemble.paths) {
    if (static_cast<std::size_t>(frame) < p.x.size())
      xs.push_back(p.x[static_cast<std::size_t>(frame)]);
  }
  if (xs.empty()) throw std::invalid_argument("no trajectories reach t_check");

  const WaveField& psi = movie[static_cast<std::size_t>(frame)];
  return l1_distance(histogram_l1_density(xs, psi.grid, bins),
                     density_bin_masses(psi, bins));
}

double de_broglie_epsilon(double speed, double mass, double planck_h) {
  if (!(speed > 0.0)) throw std::domain_error("speed must be > 0 (period diverges)");
  if (!(mass > 0.0)) throw std::domain_error("mass must be > 0");
  if (!(planck_h > 0.0)) throw std::domain_error("planck constant must be > 0");
  return planck_h / (6.0 * mass * speed * speed);
}

}  // namespace hexaproc
