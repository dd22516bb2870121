#ifndef HEXAPROC_DYNKIN_HPP
#define HEXAPROC_DYNKIN_HPP

#include <functional>

#include "hexaproc/process.hpp"

namespace hexaproc {

/// C^2 test function f(z, t) with analytic derivatives. The closures keep
/// the one-step identity free of differencing noise; finite differences are
/// only a cross-check (see check_derivatives).
struct TestFunction {
  enum class Kind { constant, linear, quadratic, general };

  std::function<Complex(const Vec3c&, double)> eval;
  std::function<Vec3c(const Vec3c&, double)> gradient;
  std::function<Complex(const Vec3c&, double)> laplacian;
  std::function<Complex(const Vec3c&, double)> time_derivative;
  Kind kind = Kind::general;

  static TestFunction constant(Complex c);
  /// f = c0 + b.z + bt*t
  static TestFunction linear(Complex c0, Vec3c b, Complex bt);
  /// f = c0 + b.z + (1/2) z.Cz + bt*t, C symmetric
  static TestFunction quadratic(Complex c0, Vec3c b, Mat3c C, Complex bt);

  /// Largest relative mismatch of gradient and laplacian against central
  /// finite differences of eval at the given probes.
  double check_derivatives(std::span<const Vec3c> probes, double t,
                           double h = 1e-4) const;
};

/// D f = df/dt + V.grad f - i (hbar/2m) lap f at (z, t).
Complex dynkin_apply(const TestFunction& f, const Vec3c& z, double t,
                     const VelocityField& drift, const PhysicalParams& params);

struct LemmaCheckResult {
  Complex lhs;   // Y(n+1 eps) - Y(n eps), block mean of f over the six processes
  Complex rhs;   // eps * D f at the arrival basic point
  double error;  // |lhs - rhs|
};

/// One-step identity at the block boundary: Y(6q eps) - Y((6q-1) eps)
/// against eps * D f at the basic trajectory, q >= 1.
LemmaCheckResult lemma_check(const TestFunction& f, long q, const Permutation& s,
                             const VelocityField& drift, const PhysicalParams& params,
                             const Vec3c& z0);

/// Same difference for an arbitrary step n -> n+1 (diagnostic; the identity
/// is only claimed at n = 6q - 1).
LemmaCheckResult substep_check(const TestFunction& f, long n, const Permutation& s,
                               const VelocityField& drift, const PhysicalParams& params,
                               const Vec3c& z0);

}  // namespace hexaproc

#endif
