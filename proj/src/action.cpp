#include "hexaproc/action.hpp"

#include <cmath>
#include <stdexcept>

namespace hexaproc {

QuadraticAction::QuadraticAction(Complex a_, Vec3c b_, Mat3c C_, double t_)
    : a(a_), b(b_), C(C_), t(t_) {
  if (symmetry_defect(C) > 1e-13 * std::max(1.0, max_abs(C)))
    throw std::invalid_argument("quadratic action matrix must be symmetric");
}

Potential Potential::free_space() { return Potential{}; }

Potential Potential::linear(const Vec3c& gradient) {
  Potential v;
  v.kind = Kind::linear;
  v.v1 = gradient;
  return v;
}

Potential Potential::harmonic(double k) {
  Potential v;
  v.kind = Kind::harmonic;
  v.v2 = Mat3c::diagonal(k, k, k);
  return v;
}

double Potential::eval_real(double x) const {
  const Complex val = eval(Vec3c{{Complex(x), Complex(0.0), Complex(0.0)}});
  if (std::abs(val.imag()) > 1e-12 * std::max(1.0, std::abs(val.real())))
    throw std::invalid_argument("potential is not real on the x axis");
  return val.real();
}

namespace {

/// One eps sub-step of the recurrence in closed form. Completing the square
/// in the drift gives argmin m V = grad S at the departure point, i.e.
/// V* = (mI + eps C)^(-1) (b + C Z), and the updated coefficients below.
QuadraticAction substep(const QuadraticAction& S, const Permutation& s,
                        const Potential& pot, const PhysicalParams& p) {
  const double eps = p.epsilon;
  const Mat3c K = inverse(Mat3c::diagonal(p.mass, p.mass, p.mass) + eps * S.C);

  // mean of S over the six displaced points, via the exact covariance of the
  // arrival offsets (8/6) delta_kl; gamma^2 = i 3 hbar eps / 4m
  const auto cov6 = offset_covariance6(s, 5);
  const Complex gamma_sq = p.gamma * p.gamma;
  Complex hop_term = 0.0;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      hop_term += S.C(k, l) * static_cast<double>(cov6[static_cast<std::size_t>(3 * k + l)]);
  hop_term *= 0.5 * gamma_sq / 6.0;

  QuadraticAction out;
  out.t = S.t + eps;
  const Mat3c CK = S.C * K;
  out.C = S.C - eps * (CK * S.C) - eps * pot.v2;
  out.b = S.b - eps * (CK * S.b) - eps * pot.v1;
  out.a = S.a - 0.5 * eps * dot(S.b, K * S.b) - eps * pot.v0 + hop_term;
  return out;
}

}  // namespace

QuadraticAction recurrence_step(const QuadraticAction& action, const Permutation& s,
                                const Potential& potential, const PhysicalParams& params) {
  if (symmetry_defect(action.C) > 1e-13 * std::max(1.0, max_abs(action.C)))
    throw std::domain_error("recurrence_step requires a symmetric quadratic action");
  QuadraticAction cur = action;
  for (int r = 0; r < 6; ++r) cur = substep(cur, s, potential, params);
  return cur;
}

namespace {

struct CoeffState {
  Complex a;
  Vec3c b;
  Mat3c C;
};

CoeffState rhs(const CoeffState& y, const Potential& pot, const PhysicalParams& p) {
  CoeffState d;
  d.C = Complex(-1.0 / p.mass) * (y.C * y.C) - pot.v2;
  d.b = Complex(-1.0 / p.mass) * (y.C * y.b) - pot.v1;
  d.a = -dot(y.b, y.b) / (2.0 * p.mass) - pot.v0 +
        Complex(0.0, p.hbar / (2.0 * p.mass)) * trace(y.C);
  return d;
}

CoeffState axpy(const CoeffState& y, double h, const CoeffState& d) {
  return CoeffState{y.a + h * d.a, y.b + h * d.b, y.C + Complex(h) * d.C};
}

}  // namespace

QuadraticAction riccati_reference(const QuadraticAction& initial, const Potential& potential,
                                  const PhysicalParams& params, double t_final,
                                  int n_substeps) {
  if (n_substeps < 1) throw std::invalid_argument("n_substeps must be >= 1");
  const double h = (t_final - initial.t) / n_substeps;
  CoeffState y{initial.a, initial.b, initial.C};
  for (int k = 0; k < n_substeps; ++k) {
    const CoeffState k1 = rhs(y, potential, params);
    const CoeffState k2 = rhs(axpy(y, 0.5 * h, k1), potential, params);
    const CoeffState k3 = rhs(axpy(y, 0.5 * h, k2), potential, params);
    const CoeffState k4 = rhs(axpy(y, h, k3), potential, params);
    y.a += (h / 6.0) * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a);
    y.b = y.b + (h / 6.0) * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b);
    y.C = y.C + Complex(h / 6.0) * (k1.C + Complex(2.0) * k2.C + Complex(2.0) * k3.C + k4.C);
  }
  QuadraticAction out;
  out.a = y.a;
  out.b = y.b;
  out.C = y.C;
  out.t = t_final;
  return out;
}

QuadraticActionPath riccati_path(const QuadraticAction& initial, const Potential& potential,
                                 const PhysicalParams& params, int n_substeps) {
  return [=](double t) {
    return riccati_reference(initial, potential, params, t, n_substeps);
  };
}

Complex hj_residual(const QuadraticActionPath& path, const Potential& potential,
                    const Vec3c& z, double t, const PhysicalParams& params,
                    double dt_fd) {
  const auto value = [&](double tt) { return path(tt).eval(z); };
  const Complex dS_dt = (-value(t + 2.0 * dt_fd) + 8.0 * value(t + dt_fd) -
                         8.0 * value(t - dt_fd) + value(t - 2.0 * dt_fd)) /
                        (12.0 * dt_fd);
  const QuadraticAction S = path(t);
  const Vec3c grad = S.gradient(z);
  return dS_dt + dot(grad, grad) / (2.0 * params.mass) + potential.eval(z) -
         Complex(0.0, params.hbar / (2.0 * params.mass)) * S.laplacian();
}

WaveField to_wavefunction(const QuadraticAction& action, const Grid& grid,
                          const PhysicalParams& params) {
  std::vector<Complex> values(static_cast<std::size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    values[static_cast<std::size_t>(i)] =
        action.eval(Vec3c{{Complex(x), Complex(0.0), Complex(0.0)}});
  }
  return to_wavefunction(values, grid, action.t, params);
}

WaveField to_wavefunction(const std::vector<Complex>& action_values, const Grid& grid,
                          double t, const PhysicalParams& params) {
  if (action_values.size() != static_cast<std::size_t>(grid.n))
    throw std::invalid_argument("action sample count must match the grid");
  WaveField f;
  f.grid = grid;
  f.t = t;
  f.psi.resize(action_values.size());
  for (std::size_t i = 0; i < action_values.size(); ++i) {
    Complex expo = Complex(0.0, 1.0) * action_values[i] / params.hbar;
    if (expo.real() > 700.0) {
      expo = Complex(700.0, expo.imag());
      ++f.clamped_count;
    }
    f.psi[i] = std::exp(expo);
  }
  return f;
}

}  // namespace hexaproc
