#ifndef HEXAPROC_CMINPLUS_HPP
#define HEXAPROC_CMINPLUS_HPP

#include <functional>
#include <span>
#include <vector>

#include "hexaproc/errors.hpp"
#include "hexaproc/linalg.hpp"

namespace hexaproc {

using CVec = std::vector<Complex>;

/// f : C^n -> C. If holomorphic and a derivative (gradient) closure is
/// present, minimization runs damped Newton on f' = 0; otherwise a grid
/// min-max scan of Re f (dimension 1 only).
struct ComplexFunction {
  int dim = 1;
  bool holomorphic = false;
  std::function<Complex(const CVec&)> eval;
  std::function<CVec(const CVec&)> derivative;  // may be empty

  /// Largest Cauchy-Riemann residual of the derivative closure at probes:
  /// compares d/dx against -i d/dy of eval by central differences.
  double cauchy_riemann_residual(std::span<const CVec> probes, double h = 1e-6) const;
};

/// Real box in C^n: bounds on Re z_k and Im z_k separately.
struct Box {
  std::vector<double> re_lo, re_hi, im_lo, im_hi;

  static Box centered(int dim, double half_width);
  static Box around(const CVec& center, double half_width);
  int dim() const { return static_cast<int>(re_lo.size()); }
  bool contains(const CVec& z, double slack = 0.0) const;
};

struct SaddleCertificate {
  int samples_per_axis = 0;
  /// Worst violation of P(x0,y) <= P(x0,y0) <= P(x,y0) over the samples;
  /// <= 0 means every sampled pair satisfied the inequality strictly.
  double max_violation = 0.0;
};

struct SaddleResult {
  CVec argmin;
  Complex value;
  SaddleCertificate certificate;
};

/// Several distinct certified saddles: the complex minimum is multivalued.
struct MultivaluedMinError : NumericalError {
  explicit MultivaluedMinError(std::vector<SaddleResult> all)
      : NumericalError("complex minimum is multivalued"), saddles(std::move(all)) {}
  std::vector<SaddleResult> saddles;
};

struct MinOptions {
  int cert_samples = 33;     // certification samples per axis
  int starts_per_axis = 3;   // Newton multistart grid density
  double newton_tol = 1e-12;
  int max_newton_iter = 100;
  double cert_tol = 1e-9;    // allowed saddle-inequality violation (relative)
  int grid_resolution = 129; // min-max fallback scan density
};

/// The minimum of f over the box in the min-plus sense: f at a saddle point
/// of P = Re f (min along real directions, max along imaginary ones).
/// Throws NoSaddleError if nothing certifies, MultivaluedMinError if several
/// distinct saddles certify.
SaddleResult complex_min(const ComplexFunction& f, const Box& box,
                         const MinOptions& options = {});

/// max_z (p.z - f(z)) in the same saddle sense (max orientation).
Complex complex_fenchel(const ComplexFunction& f, const CVec& p, const Box& box,
                        const MinOptions& options = {});

struct ConvexityReport {
  bool cconvex = false;
  double min_re_curvature = 0.0;  // most concave sampled second difference along x
  double max_im_curvature = 0.0;  // most convex sampled second difference along y
  int samples = 0;
};

/// Sampled test of complex convexity: P convex along every real coordinate
/// slice and concave along every imaginary one.
ConvexityReport is_cconvex(const ComplexFunction& f, const Box& box,
                           int grid_resolution = 17);

}  // namespace hexaproc

#endif
