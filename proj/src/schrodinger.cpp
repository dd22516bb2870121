#include "hexaproc/schrodinger.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hexaproc {

WaveField gaussian_packet(const Grid& grid, double x0, double sigma0, double p0,
                          double hbar) {
  if (!(sigma0 > 0.0)) throw std::invalid_argument("sigma0 must be > 0");
  WaveField f;
  f.grid = grid;
  f.psi.resize(static_cast<std::size_t>(grid.n));
  const double norm_const = std::pow(2.0 * std::numbers::pi * sigma0 * sigma0, -0.25);
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    const double arg = -(x - x0) * (x - x0) / (4.0 * sigma0 * sigma0);
    f.psi[static_cast<std::size_t>(i)] =
        norm_const * std::exp(arg) * std::exp(Complex(0.0, p0 * (x - x0) / hbar));
  }
  return f;
}

double l2_norm(const WaveField& psi) {
  const double dx = psi.grid.dx();
  double acc = 0.0;
  for (int i = 0; i < psi.grid.n; ++i) {
    const double w = (i == 0 || i == psi.grid.n - 1) ? 0.5 : 1.0;
    acc += w * std::norm(psi.psi[static_cast<std::size_t>(i)]);
  }
  return std::sqrt(acc * dx);
}

std::pair<double, double> position_moments(const WaveField& psi) {
  const double dx = psi.grid.dx();
  double mass = 0.0, m1 = 0.0, m2 = 0.0;
  for (int i = 0; i < psi.grid.n; ++i) {
    const double w = (i == 0 || i == psi.grid.n - 1) ? 0.5 : 1.0;
    const double rho = std::norm(psi.psi[static_cast<std::size_t>(i)]);
    const double x = psi.grid.x(i);
    mass += w * rho;
    m1 += w * rho * x;
    m2 += w * rho * x * x;
  }
  mass *= dx;
  m1 *= dx;
  m2 *= dx;
  const double mean = m1 / mass;
  return {mean, m2 / mass - mean * mean};
}

SchrodingerResult schrodinger_propagate(const WaveField& psi0,
                                        const std::function<double(double)>& potential,
                                        const PhysicalParams& params, double dt,
                                        long n_steps, long snapshot_stride) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
  if (n_steps < 0) throw std::invalid_argument("n_steps must be >= 0");
  const int n = psi0.grid.n;
  const double dx = psi0.grid.dx();
  const double kin = params.hbar * params.hbar / (2.0 * params.mass * dx * dx);

  // H tridiagonal: diag_i = 2*kin + V(x_i), off = -kin
  std::vector<double> diag(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    diag[static_cast<std::size_t>(i)] = 2.0 * kin + potential(psi0.grid.x(i));
  const double off = -kin;

  // Cayley: (1 + i a H) psi' = (1 - i a H) psi, a = dt / (2 hbar)
  const double a = dt / (2.0 * params.hbar);
  const Complex ia(0.0, a);

  SchrodingerResult out;
  out.frames.push_back(psi0);

  std::vector<Complex> psi = psi0.psi;
  std::vector<Complex> rhs(static_cast<std::size_t>(n));
  std::vector<Complex> c_prime(static_cast<std::size_t>(n));
  std::vector<Complex> d_prime(static_cast<std::size_t>(n));

  const double norm0 = l2_norm(psi0);
  double peak0 = 0.0;
  for (const auto& v : psi) peak0 = std::max(peak0, std::abs(v));

  for (long s = 1; s <= n_steps; ++s) {
    // rhs = (1 - i a H) psi
    for (int i = 0; i < n; ++i) {
      Complex h_psi = diag[static_cast<std::size_t>(i)] * psi[static_cast<std::size_t>(i)];
      if (i > 0) h_psi += off * psi[static_cast<std::size_t>(i - 1)];
      if (i < n - 1) h_psi += off * psi[static_cast<std::size_t>(i + 1)];
      rhs[static_cast<std::size_t>(i)] = psi[static_cast<std::size_t>(i)] - ia * h_psi;
    }
    // Thomas solve of (1 + i a H) psi = rhs
    const Complex off_c = ia * off;
    Complex b0 = 1.0 + ia * diag[0];
    c_prime[0] = off_c / b0;
    d_prime[0] = rhs[0] / b0;
    for (int i = 1; i < n; ++i) {
      const Complex bi = 1.0 + ia * diag[static_cast<std::size_t>(i)];
      const Complex denom = bi - off_c * c_prime[static_cast<std::size_t>(i - 1)];
      c_prime[static_cast<std::size_t>(i)] = off_c / denom;
      d_prime[static_cast<std::size_t>(i)] =
          (rhs[static_cast<std::size_t>(i)] -
           off_c * d_prime[static_cast<std::size_t>(i - 1)]) / denom;
    }
    psi[static_cast<std::size_t>(n - 1)] = d_prime[static_cast<std::size_t>(n - 1)];
    for (int i = n - 2; i >= 0; --i)
      psi[static_cast<std::size_t>(i)] =
          d_prime[static_cast<std::size_t>(i)] -
          c_prime[static_cast<std::size_t>(i)] * psi[static_cast<std::size_t>(i + 1)];

    WaveField frame;
    frame.grid = psi0.grid;
    frame.t = psi0.t + dt * static_cast<double>(s);
    frame.psi = psi;

    out.report.norm_drift_max =
        std::max(out.report.norm_drift_max, std::abs(l2_norm(frame) / norm0 - 1.0));
    const double leak = std::max(std::abs(psi.front()), std::abs(psi.back())) / peak0;
    out.report.boundary_leak_max = std::max(out.report.boundary_leak_max, leak);

    if ((snapshot_stride > 0 && s % snapshot_stride == 0) || s == n_steps) {
      if (out.frames.back().t < frame.t) out.frames.push_back(std::move(frame));
    }
  }
  out.report.boundary_warning = out.report.boundary_leak_max > 1e-8;
  return out;
}

WaveField schrodinger_reference(const WaveField& psi0,
                                const std::function<double(double)>& potential,
                                const PhysicalParams& params, double dt, long n_steps) {
  return schrodinger_propagate(psi0, potential, params, dt, n_steps).frames.back();
}

std::vector<double> unwrapped_phase(const WaveField& psi) {
  const int n = psi.grid.n;
  std::vector<double> theta(static_cast<std::size_t>(n));
  int peak = 0;
  double best = -1.0;
  for (int i = 0; i < n; ++i) {
    const double m = std::abs(psi.psi[static_cast<std::size_t>(i)]);
    if (m > best) {
      best = m;
      peak = i;
    }
  }
  theta[static_cast<std::size_t>(peak)] = std::arg(psi.psi[static_cast<std::size_t>(peak)]);
  const double two_pi = 2.0 * std::numbers::pi;
  auto continue_from = [&](int from, int to) {
    const double raw = std::arg(psi.psi[static_cast<std::size_t>(to)]);
    double delta = raw - theta[static_cast<std::size_t>(from)];
    delta -= two_pi * std::round(delta / two_pi);
    theta[static_cast<std::size_t>(to)] = theta[static_cast<std::size_t>(from)] + delta;
  };
  for (int i = peak + 1; i < n; ++i) continue_from(i - 1, i);
  for (int i = peak - 1; i >= 0; --i) continue_from(i + 1, i);
  return theta;
}

std::pair<std::vector<double>, std::vector<double>> phase_density_split(
    const WaveField& psi, double hbar) {
  std::vector<double> S = unwrapped_phase(psi);
  for (auto& s : S) s *= hbar;
  std::vector<double> rho(static_cast<std::size_t>(psi.grid.n));
  for (int i = 0; i < psi.grid.n; ++i)
    rho[static_cast<std::size_t>(i)] = std::norm(psi.psi[static_cast<std::size_t>(i)]);
  return {std::move(S), std::move(rho)};
}

WaveField compose_wavefield(const std::vector<double>& S,
                            const std::vector<double>& rho, const Grid& grid,
                            double t, double hbar) {
  if (S.size() != static_cast<std::size_t>(grid.n) || rho.size() != S.size())
    throw std::invalid_argument("S/rho size must match the grid");
  WaveField f;
  f.grid = grid;
  f.t = t;
  f.psi.resize(S.size());
  for (std::size_t i = 0; i < S.size(); ++i)
    f.psi[i] = std::sqrt(rho[i]) * std::exp(Complex(0.0, S[i] / hbar));
  return f;
}

Complex separable_product(const std::array<WaveField, 3>& fields, const Vec3d& point) {
  Complex prod = 1.0;
  for (int k = 0; k < 3; ++k) {
    const auto& f = fields[static_cast<std::size_t>(k)];
    const double u = (point[k] - f.grid.x_min) / f.grid.dx();
    const int i = std::clamp(static_cast<int>(std::floor(u)), 0, f.grid.n - 2);
    const double w = u - i;
    prod *= (1.0 - w) * f.psi[static_cast<std::size_t>(i)] +
            w * f.psi[static_cast<std::size_t>(i + 1)];
  }
  return prod;
}

}  // namespace hexaproc
