#include "hexaproc/dynkin.hpp"

#include <cmath>
#include <stdexcept>

namespace hexaproc {

TestFunction TestFunction::constant(Complex c) {
  TestFunction f;
  f.kind = Kind::constant;
  f.eval = [c](const Vec3c&, double) { return c; };
  f.gradient = [](const Vec3c&, double) { return Vec3c{}; };
  f.laplacian = [](const Vec3c&, double) { return Complex{}; };
  f.time_derivative = [](const Vec3c&, double) { return Complex{}; };
  return f;
}

TestFunction TestFunction::linear(Complex c0, Vec3c b, Complex bt) {
  TestFunction f;
  f.kind = Kind::linear;
  f.eval = [c0, b, bt](const Vec3c& z, double t) { return c0 + dot(b, z) + bt * t; };
  f.gradient = [b](const Vec3c&, double) { return b; };
  f.laplacian = [](const Vec3c&, double) { return Complex{}; };
  f.time_derivative = [bt](const Vec3c&, double) { return bt; };
  return f;
}

TestFunction TestFunction::quadratic(Complex c0, Vec3c b, Mat3c C, Complex bt) {
  if (symmetry_defect(C) > 1e-13 * std::max(1.0, max_abs(C)))
    throw std::invalid_argument("quadratic coefficient matrix must be symmetric");
  TestFunction f;
  f.kind = Kind::quadratic;
  f.eval = [c0, b, C, bt](const Vec3c& z, double t) {
    return c0 + dot(b, z) + 0.5 * dot(z, C * z) + bt * t;
  };
  f.gradient = [b, C](const Vec3c& z, double) { return b + C * z; };
  f.laplacian = [C](const Vec3c&, double) { return trace(C); };
  f.time_derivative = [bt](const Vec3c&, double) { return bt; };
  return f;
}

double TestFunction::check_derivatives(std::span<const Vec3c> probes, double t,
                                       double h) const {
  double worst = 0.0;
  for (const auto& z : probes) {
    const double scale = std::max(1.0, std::abs(eval(z, t)));
    Complex lap_fd = 0.0;
    for (int k = 0; k < 3; ++k) {
      Vec3c zp = z, zm = z;
      zp[k] += h;
      zm[k] -= h;
      const Complex grad_fd = (eval(zp, t) - eval(zm, t)) / (2.0 * h);
      worst = std::max(worst, std::abs(grad_fd - gradient(z, t)[k]) / scale);
      lap_fd += (eval(zp, t) - 2.0 * eval(z, t) + eval(zm, t)) / (h * h);
    }
    worst = std::max(worst, std::abs(lap_fd - laplacian(z, t)) / scale);
  }
  return worst;
}

Complex dynkin_apply(const TestFunction& f, const Vec3c& z, double t,
                     const VelocityField& drift, const PhysicalParams& params) {
  const Complex lap_coeff = Complex(0.0, -1.0) * params.hbar / (2.0 * params.mass);
  return f.time_derivative(z, t) + dot(drift(t), f.gradient(z, t)) +
         lap_coeff * f.laplacian(z, t);
}

namespace {

Complex block_mean(const TestFunction& f, const ProcessState& st, double t) {
  Complex acc = 0.0;
  for (int j = 0; j < 6; ++j) acc += f.eval(st.z[static_cast<std::size_t>(j)], t);
  return acc / 6.0;
}

}  // namespace

LemmaCheckResult substep_check(const TestFunction& f, long n, const Permutation& s,
                               const VelocityField& drift, const PhysicalParams& params,
                               const Vec3c& z0) {
  if (n < 0) throw std::domain_error("step index must be >= 0");
  const auto traj = simulate(z0, s, drift, params, n + 1);
  const auto& before = traj[static_cast<std::size_t>(n)];
  const auto& after = traj[static_cast<std::size_t>(n + 1)];
  const double t_after = after.time(params);

  LemmaCheckResult res;
  res.lhs = block_mean(f, after, t_after) - block_mean(f, before, before.time(params));
  res.rhs = params.epsilon * dynkin_apply(f, after.z_basic, t_after, drift, params);
  res.error = std::abs(res.lhs - res.rhs);
  return res;
}

LemmaCheckResult lemma_check(const TestFunction& f, long q, const Permutation& s,
                             const VelocityField& drift, const PhysicalParams& params,
                             const Vec3c& z0) {
  if (q < 1) throw std::domain_error("block index must be >= 1");
  return substep_check(f, 6 * q - 1, s, drift, params, z0);
}

}  // namespace hexaproc
