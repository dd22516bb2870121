#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hexaproc/dynkin.hpp"

using namespace hexaproc;

namespace {

VelocityField constant_field(Complex cx) {
  return [=](double) { return Vec3c{{cx, Complex(0.2, 0.0), Complex(0.0, -0.1)}}; };
}

TestFunction z1_squared() {
  Mat3c C;
  C(0, 0) = 2.0;  // f = z1^2
  return TestFunction::quadratic(0.0, Vec3c{}, C, 0.0);
}

}  // namespace

TEST_CASE("test function derivative closures agree with finite differences") {
  const std::vector<Vec3c> probes = {
      Vec3c{{Complex(0.3, 0.1), Complex(-0.7, 0.4), Complex(1.1, -0.2)}},
      Vec3c{{Complex(-1.0, 0.0), Complex(0.0, 1.0), Complex(0.5, 0.5)}},
  };
  Mat3c C;
  C(0, 0) = Complex(1.0, 0.5);
  C(1, 1) = -2.0;
  C(2, 2) = Complex(0.0, 1.0);
  C(0, 1) = C(1, 0) = 0.3;
  const auto f = TestFunction::quadratic(Complex(0.2, -0.1),
                                         Vec3c{{1.0, Complex(0.0, 2.0), -0.5}}, C,
                                         Complex(0.7, 0.0));
  CHECK(f.check_derivatives(probes, 0.4) < 1e-6);
  CHECK(TestFunction::linear(1.0, Vec3c{{1.0, 2.0, 3.0}}, 0.5)
            .check_derivatives(probes, 0.0) < 1e-6);
}

TEST_CASE("dynkin_apply: constant, coordinate, quadratic") {
  const PhysicalParams params(1.0, 1.0, 0.1);
  const Vec3c z{{Complex(0.4, 0.2), Complex(-0.3, 0.0), Complex(0.0, 0.0)}};
  const Complex c(0.9, -0.3);
  const VelocityField V = constant_field(c);

  CHECK(std::abs(dynkin_apply(TestFunction::constant(3.0), z, 0.0, V, params)) == 0.0);

  // f = z1: V . grad f = c
  const auto lin = TestFunction::linear(0.0, Vec3c{{1.0, 0.0, 0.0}}, 0.0);
  CHECK(std::abs(dynkin_apply(lin, z, 0.0, V, params) - c) < 1e-15);

  // f = z1^2: 2 z1 c - i (hbar/m = 1)
  const Complex expected = 2.0 * z[0] * c - Complex(0.0, 1.0);
  CHECK(std::abs(dynkin_apply(z1_squared(), z, 0.0, V, params) - expected) < 1e-15);
}

TEST_CASE("lemma: linear f gives zero error to round-off") {
  const PhysicalParams params(1.0, 1.0, 0.05);
  const auto f = TestFunction::linear(Complex(0.3, 0.0),
                                      Vec3c{{Complex(1.0, 0.5), -0.7, Complex(0.0, 2.0)}},
                                      Complex(0.4, -0.2));
  for (const auto& s : spin_permutations()) {
    const auto res = lemma_check(f, 2, s, constant_field(Complex(1.0, -0.5)), params,
                                 Vec3c{{0.3, 0.1, -0.2}});
    CHECK(res.error < 1e-12 * std::max(1.0, std::abs(res.lhs)));
  }
}

TEST_CASE("lemma: quadratic f converges at second order (ratio about 4)") {
  const Vec3c z0{{Complex(0.2, 0.1), Complex(-0.4, 0.0), Complex(0.0, 0.3)}};
  Mat3c C;
  C(0, 0) = Complex(1.0, 0.3);
  C(1, 1) = 0.7;
  C(2, 2) = Complex(0.0, -0.5);
  C(1, 2) = C(2, 1) = 0.2;
  const auto f = TestFunction::quadratic(0.1, Vec3c{{0.5, Complex(0.0, 1.0), -0.3}}, C,
                                         Complex(0.2, 0.0));
  const VelocityField V = constant_field(Complex(0.8, -0.4));

  std::vector<double> errors;
  for (int k = 0; k < 4; ++k) {
    const PhysicalParams params(1.0, 1.0, 0.1 / std::pow(2.0, k));
    errors.push_back(lemma_check(f, 1, permutation_by_id(1), V, params, z0).error);
  }
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double ratio = errors[i - 1] / errors[i];
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
  }
}

TEST_CASE("offset quadratic term at n = 6q-1 equals i (hbar/2m) eps lap f exactly") {
  // E_j f(z + gamma d_j) - f(z) for f = z1^2 and d_j the n=5 offsets
  for (const auto& s : spin_permutations()) {
    const PhysicalParams params(2.0, 0.7, 0.3);
    const Vec3c z{{Complex(0.5, -0.2), 0.0, 0.0}};
    const auto f = z1_squared();
    Complex mean = 0.0;
    for (int j = 0; j < 6; ++j)
      mean += f.eval(z + params.gamma * to_vec3c(s.offset(j, 5)), 0.0);
    mean /= 6.0;
    const Complex quad_term = mean - f.eval(z, 0.0);
    const Complex expected =
        Complex(0.0, params.hbar / (2.0 * params.mass)) * params.epsilon * 2.0;
    CHECK(std::abs(quad_term - expected) < 1e-14);
  }
}

TEST_CASE("gamma^2 carries the factor i: (1+i)^2 * 3 hbar eps/8m = i 3 hbar eps/4m") {
  const PhysicalParams params(1.7, 0.9, 0.21);
  const Complex gamma_sq = params.gamma * params.gamma;
  const Complex expected(0.0, 3.0 * params.hbar * params.epsilon / (4.0 * params.mass));
  CHECK(std::abs(gamma_sq - expected) < 1e-16 * std::abs(expected));
}

TEST_CASE("per-substep diagnostics exist away from the block boundary") {
  const PhysicalParams params(1.0, 1.0, 0.05);
  const auto f = z1_squared();
  const VelocityField V = constant_field(0.5);
  // the identity is only claimed at n = 6q-1; elsewhere the difference is
  // O(sqrt(eps)) and the diagnostic just reports it
  const auto at_boundary = substep_check(f, 11, permutation_by_id(1), V, params, Vec3c{});
  const auto inside = substep_check(f, 8, permutation_by_id(1), V, params, Vec3c{});
  CHECK(at_boundary.error < inside.error);
}
