#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hexaproc/schrodinger.hpp"

using namespace hexaproc;

namespace {
const std::function<double(double)> kFree = [](double) { return 0.0; };
}

TEST_CASE("gaussian packet is normalized and centered") {
  const Grid grid{-16.0, 16.0, 1601};
  const auto psi = gaussian_packet(grid, 0.5, 1.0, 0.0, 1.0);
  CHECK(l2_norm(psi) == doctest::Approx(1.0).epsilon(1e-8));
  const auto [mean, var] = position_moments(psi);
  CHECK(mean == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(var == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("norm drift over 1000 steps stays below 1e-9") {
  const Grid grid{-16.0, 16.0, 1201};
  const PhysicalParams params(1.0, 1.0, 0.01);
  const auto psi0 = gaussian_packet(grid, 0.0, 1.0, 0.0, params.hbar);
  const auto res = schrodinger_propagate(psi0, kFree, params, 1e-3, 1000);
  CHECK(res.report.norm_drift_max < 1e-9);
  CHECK_FALSE(res.report.boundary_warning);
}

TEST_CASE("free gaussian width law to 0.1% at the doubling time") {
  const double sigma0 = 1.0, hbar = 1.0, m = 1.0;
  // width doubles when (hbar t / 2 m sigma0^2)^2 = 3
  const double t_double = std::sqrt(3.0) * 2.0 * m * sigma0 * sigma0 / hbar;
  const Grid grid{-24.0, 24.0, 3001};
  const PhysicalParams params(hbar, m, 0.01);
  const auto psi0 = gaussian_packet(grid, 0.0, sigma0, 0.0, hbar);
  const long steps = 3000;
  const auto psi = schrodinger_reference(psi0, kFree, params, t_double / steps, steps);
  const auto [mean, var] = position_moments(psi);
  const double predicted =
      sigma0 * sigma0 *
      (1.0 + std::pow(hbar * t_double / (2.0 * m * sigma0 * sigma0), 2));
  CHECK(std::abs(mean) < 1e-8);
  CHECK(std::abs(var / predicted - 1.0) < 1e-3);
}

TEST_CASE("harmonic coherent state oscillates with period 2 pi sqrt(m/k)") {
  const double k = 2.0, m = 1.0, hbar = 1.0;
  const double omega = std::sqrt(k / m);
  const double period = 2.0 * std::numbers::pi / omega;
  const double sigma_ground = std::sqrt(hbar / (2.0 * m * omega));
  const double x_c = 1.0;

  const Grid grid{-10.0, 10.0, 1501};
  const PhysicalParams params(hbar, m, 0.01);
  const auto psi0 = gaussian_packet(grid, x_c, sigma_ground, 0.0, hbar);
  const std::function<double(double)> pot = [k](double x) { return 0.5 * k * x * x; };

  const long steps = 4000;
  const double dt = 1.5 * period / steps;
  const auto res = schrodinger_propagate(psi0, pot, params, dt, steps, 1);

  // measure the period from downward zero crossings of <x>(t)
  std::vector<double> crossings;
  for (std::size_t i = 1; i < res.frames.size(); ++i) {
    const double a = position_moments(res.frames[i - 1]).first;
    const double b = position_moments(res.frames[i]).first;
    if (a > 0.0 && b <= 0.0) {
      const double t0 = res.frames[i - 1].t;
      crossings.push_back(t0 + dt * a / (a - b));
    }
  }
  REQUIRE(crossings.size() >= 2);
  const double measured = crossings[1] - crossings[0];
  CHECK(std::abs(measured / period - 1.0) < 1e-3);
}

TEST_CASE("phase unwrap: plane-wave modulated gaussian has linear phase") {
  const Grid grid{-12.0, 12.0, 1201};
  const double p0 = 3.0, hbar = 0.7;
  const auto psi = gaussian_packet(grid, 0.0, 1.5, p0, hbar);
  const auto S = unwrapped_phase(psi);
  // d(theta)/dx = p0/hbar everywhere, far beyond the principal branch
  for (int i = 10; i + 10 < grid.n; i += 50) {
    const double slope = (S[static_cast<std::size_t>(i + 1)] - S[static_cast<std::size_t>(i - 1)]) /
                         (2.0 * grid.dx());
    CHECK(slope == doctest::Approx(p0 / hbar).epsilon(1e-10));
  }
}

TEST_CASE("phase/density split round-trips psi") {
  const Grid grid{-12.0, 12.0, 901};
  const double hbar = 1.3;
  const auto psi = gaussian_packet(grid, -0.4, 1.2, 2.1, hbar);
  const auto [S, rho] = phase_density_split(psi, hbar);
  const auto back = compose_wavefield(S, rho, grid, psi.t, hbar);
  for (int i = 0; i < grid.n; ++i)
    CHECK(std::abs(back.psi[static_cast<std::size_t>(i)] - psi.psi[static_cast<std::size_t>(i)]) < 1e-12);
}

TEST_CASE("separable product evaluates 3-D composites") {
  const Grid grid{-8.0, 8.0, 801};
  const auto gx = gaussian_packet(grid, 0.0, 1.0, 0.0, 1.0);
  const auto gy = gaussian_packet(grid, 1.0, 0.5, 0.0, 1.0);
  const auto gz = gaussian_packet(grid, -1.0, 2.0, 0.0, 1.0);
  const Complex v = separable_product({gx, gy, gz}, Vec3d{{0.2, 0.8, -0.5}});
  const auto one = [&](const WaveField& f, double x0, double s, double x) {
    return std::pow(2.0 * std::numbers::pi * s * s, -0.25) *
           std::exp(-(x - x0) * (x - x0) / (4.0 * s * s));
  };
  const double expected = one(gx, 0.0, 1.0, 0.2) * one(gy, 1.0, 0.5, 0.8) *
                          one(gz, -1.0, 2.0, -0.5);
  CHECK(std::abs(v - expected) < 1e-5);
}

TEST_CASE("boundary leakage is reported") {
  const Grid grid{-4.0, 4.0, 301};  // too narrow for a long free flight
  const PhysicalParams params(1.0, 1.0, 0.01);
  const auto psi0 = gaussian_packet(grid, 0.0, 1.0, 2.0, params.hbar);
  const auto res = schrodinger_propagate(psi0, kFree, params, 5e-3, 600);
  CHECK(res.report.boundary_warning);
  CHECK(res.report.boundary_leak_max > 1e-8);
}
