#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hexaproc/action.hpp"
#include "hexaproc/bohm.hpp"
#include "hexaproc/process.hpp"

using namespace hexaproc;

namespace {

std::vector<WaveField> free_gaussian_movie(const Grid& grid, double sigma0, double p0,
                                           const PhysicalParams& params, double t_final,
                                           long frames) {
  const auto psi0 = gaussian_packet(grid, 0.0, sigma0, p0, params.hbar);
  const long steps_per_frame = 10;
  const double dt = t_final / static_cast<double>(frames * steps_per_frame);
  return schrodinger_propagate(psi0, [](double) { return 0.0; }, params, dt,
                               frames * steps_per_frame, steps_per_frame)
      .frames;
}

double free_gaussian_width(double sigma0, double t, double hbar, double m) {
  const double r = hbar * t / (2.0 * m * sigma0 * sigma0);
  return sigma0 * std::sqrt(1.0 + r * r);
}

}  // namespace

TEST_CASE("plane wave: velocity p/m everywhere, purely real complex velocity") {
  const Grid grid{-10.0, 10.0, 1001};
  const PhysicalParams params(1.0, 1.4, 0.1);
  const double p0 = 2.3;
  WaveField psi;
  psi.grid = grid;
  psi.psi.resize(static_cast<std::size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i)
    psi.psi[static_cast<std::size_t>(i)] =
        std::exp(Complex(0.0, p0 * grid.x(i) / params.hbar));

  for (const double x : {-7.3, 0.0, 4.9}) {
    CHECK(bohm_velocity(psi, x, params) == doctest::Approx(p0 / params.mass).epsilon(1e-10));
    const Complex cv = complex_velocity(psi, x, params);
    CHECK(cv.real() == doctest::Approx(p0 / params.mass).epsilon(1e-10));
    CHECK(std::abs(cv.imag()) < 1e-9);
  }
}

TEST_CASE("real gaussian: zero bohm velocity, purely imaginary complex velocity") {
  const Grid grid{-10.0, 10.0, 1001};
  const PhysicalParams params(1.0, 1.0, 0.1);
  const double sigma0 = 1.1;
  const auto psi = gaussian_packet(grid, 0.0, sigma0, 0.0, params.hbar);

  for (const double x : {-1.7, 0.4, 2.2}) {
    CHECK(std::abs(bohm_velocity(psi, x, params)) < 1e-10);
    const Complex cv = complex_velocity(psi, x, params);
    // -i (hbar/2m) d log rho = -i (hbar/2m) (-x/sigma0^2)
    const double expected = (params.hbar / (2.0 * params.mass)) * x / (sigma0 * sigma0);
    CHECK(cv.imag() == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("real part of complex_velocity equals bohm_velocity to 1e-12") {
  const Grid grid{-14.0, 14.0, 1401};
  const PhysicalParams params(1.0, 1.0, 0.1);
  const auto movie = free_gaussian_movie(grid, 1.0, 1.2, params, 1.0, 10);
  for (const auto& frame : {movie.front(), movie[5], movie.back()})
    for (const double x : {-2.0, -0.3, 0.9, 3.1})
      CHECK(std::abs(complex_velocity(frame, x, params).real() -
                     bohm_velocity(frame, x, params)) < 1e-12);
}

TEST_CASE("node region raises NodeError") {
  const Grid grid{-10.0, 10.0, 1001};
  const PhysicalParams params(1.0, 1.0, 0.1);
  const auto psi = gaussian_packet(grid, 0.0, 0.5, 0.0, params.hbar);  // tails underflow
  CHECK_THROWS_AS((void)bohm_velocity(psi, 9.5, params), NodeError);
}

TEST_CASE("plane-wave movie: straight-line trajectory") {
  const Grid grid{-20.0, 20.0, 2001};
  const PhysicalParams params(1.0, 1.0, 0.1);
  const double p0 = 1.5, T = 2.0;
  std::vector<WaveField> movie;
  for (int k = 0; k <= 40; ++k) {
    WaveField f;
    f.grid = grid;
    f.t = T * k / 40.0;
    f.psi.resize(static_cast<std::size_t>(grid.n));
    for (int i = 0; i < grid.n; ++i)
      f.psi[static_cast<std::size_t>(i)] = std::exp(
          Complex(0.0, (p0 * grid.x(i) - 0.5 * p0 * p0 * f.t) / params.hbar));
    movie.push_back(std::move(f));
  }
  const auto path = integrate_trajectory(movie, -1.0, params);
  CHECK_FALSE(path.truncated);
  CHECK(path.x.back() == doctest::Approx(-1.0 + p0 * T).epsilon(1e-8));
}

TEST_CASE("free gaussian: center stays, side trajectory follows the width law") {
  const Grid grid{-20.0, 20.0, 2001};
  const PhysicalParams params(1.0, 1.0, 0.1);
  const double sigma0 = 1.0, T = 2.0;
  const auto movie = free_gaussian_movie(grid, sigma0, 0.0, params, T, 200);

  const auto center = integrate_trajectory(movie, 0.0, params);
  CHECK_FALSE(center.truncated);
  CHECK(std::abs(center.x.back()) < 1e-9);

  const auto side = integrate_trajectory(movie, sigma0, params);
  CHECK_FALSE(side.truncated);
  const double expected = free_gaussian_width(sigma0, T, params.hbar, params.mass);
  CHECK(side.x.back() == doctest::Approx(expected).epsilon(1e-4));
}

TEST_CASE("trajectories of the same wavefunction never cross") {
  const Grid grid{-20.0, 20.0, 1601};
  const PhysicalParams params(1.0, 1.0, 0.1);
  const auto movie = free_gaussian_movie(grid, 1.0, 0.8, params, 2.0, 100);
  std::vector<TrajectoryPath> paths;
  for (int k = 0; k < 20; ++k)
    paths.push_back(integrate_trajectory(movie, -2.0 + 4.0 * k / 19.0, params));
  for (std::size_t a = 0; a < paths.size(); ++a)
    for (std::size_t b = a + 1; b < paths.size(); ++b) {
      REQUIRE(paths[a].x.size() == paths[b].x.size());
      for (std::size_t i = 0; i < paths[a].x.size(); ++i)
        CHECK(paths[a].x[i] < paths[b].x[i]);
    }
}

TEST_CASE("ensemble: stratified sampling reproduces rho0 and transports with psi") {
  const Grid grid{-24.0, 24.0, 2401};
  const double sigma0 = 1.0, hbar = 1.0, m = 1.0;
  const PhysicalParams params(hbar, m, 0.1);
  const double t_double = std::sqrt(3.0) * 2.0 * m * sigma0 * sigma0 / hbar;
  const auto movie = free_gaussian_movie(grid, sigma0, 0.0, params, t_double, 120);

  const int bins = 50;
  const auto ens = make_ensemble(movie, 10000, 7, bins, params);
  CHECK(ens.noise_floor < 0.02);

  // t = 0 reproduces the recorded noise floor
  CHECK(continuity_check(ens, movie, 0.0, bins) ==
        doctest::Approx(ens.noise_floor).epsilon(1e-12));

  // packet-width-doubling time
  CHECK(continuity_check(ens, movie, t_double, bins) < 0.05);
}

TEST_CASE("moving packet: same continuity tolerance as the static case") {
  const Grid grid{-24.0, 36.0, 3001};
  const double sigma0 = 1.0, hbar = 1.0, m = 1.0, p0 = 2.0;
  const PhysicalParams params(hbar, m, 0.1);
  const double t_double = std::sqrt(3.0) * 2.0 * m * sigma0 * sigma0 / hbar;
  const auto movie = free_gaussian_movie(grid, sigma0, p0, params, t_double, 120);
  const int bins = 50;
  const auto ens = make_ensemble(movie, 10000, 7, bins, params);
  CHECK(continuity_check(ens, movie, t_double, bins) < 0.05);
}

TEST_CASE("ensemble seed changes samples deterministically") {
  const Grid grid{-16.0, 16.0, 1601};
  const PhysicalParams params(1.0, 1.0, 0.1);
  const auto movie = free_gaussian_movie(grid, 1.0, 0.0, params, 0.5, 5);
  const auto a1 = make_ensemble(movie, 64, 3, 20, params);
  const auto a2 = make_ensemble(movie, 64, 3, 20, params);
  const auto b = make_ensemble(movie, 64, 4, 20, params);
  CHECK(a1.x0 == a2.x0);
  CHECK(a1.x0 != b.x0);
}

TEST_CASE("basic trajectory driven by the complex velocity tracks the bohm path") {
  // V(t) = complex_velocity(psi(t), x_bohm(t)): the real part of the basic
  // trajectory reproduces the bohm trajectory; the imaginary part carries
  // the osmotic term.
  const Grid grid{-20.0, 20.0, 2001};
  const double hbar = 1.0, m = 1.0, sigma0 = 1.0, T = 1.8;
  const PhysicalParams run_params(hbar, m, 0.1);
  const auto movie = free_gaussian_movie(grid, sigma0, 0.0, run_params, T, 180);

  const double x0 = 0.8;
  const auto bohm_path = integrate_trajectory(movie, x0, run_params);
  REQUIRE_FALSE(bohm_path.truncated);

  const double frame_dt = movie[1].t - movie[0].t;
  const VelocityField drift = [&](double t) -> Vec3c {
    long k = std::lround(t / frame_dt);
    k = std::min<long>(std::max<long>(k, 0), static_cast<long>(movie.size()) - 1);
    const double x_at = bohm_path.x[static_cast<std::size_t>(k)];
    const Complex v = complex_velocity(movie[static_cast<std::size_t>(k)], x_at, run_params);
    return Vec3c{{v, 0.0, 0.0}};
  };

  const long blocks = 60;
  const PhysicalParams proc_params(hbar, m, T / (6.0 * blocks));
  const auto traj = simulate(Vec3c{{Complex(x0), 0.0, 0.0}}, permutation_by_id(1), drift,
                             proc_params, 6 * blocks);
  const double x_final = traj.back().z_basic[0].real();
  // O(eps) drift sampling + movie interpolation tolerance
  CHECK(std::abs(x_final - bohm_path.x.back()) < 0.02);
  CHECK(std::abs(traj.back().z_basic[0].imag()) > 0.01);  // osmotic part is real
}

TEST_CASE("de Broglie epsilon: h/(6 m v^2)") {
  CHECK(de_broglie_epsilon(1.0, 1.0, 1.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(de_broglie_epsilon(2.0, 1.0, 1.0) ==
        doctest::Approx(de_broglie_epsilon(1.0, 1.0, 1.0) / 4.0).epsilon(1e-15));
  CHECK(de_broglie_epsilon(1e6, 9.109e-31, 6.62607e-34) ==
        doctest::Approx(1.2124e-16).epsilon(1e-4));
  CHECK_THROWS_AS((void)de_broglie_epsilon(0.0, 1.0, 1.0), std::domain_error);
}
