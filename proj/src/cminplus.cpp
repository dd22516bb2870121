#include "hexaproc/cminplus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hexaproc {

namespace {

/// Deterministic uniform samples for certification and convexity probing.
struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
  double next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) * 0x1.0p-53;
  }
};

double re_span(const Box& box, int k) {
  return box.re_hi[static_cast<std::size_t>(k)] - box.re_lo[static_cast<std::size_t>(k)];
}
double im_span(const Box& box, int k) {
  return box.im_hi[static_cast<std::size_t>(k)] - box.im_lo[static_cast<std::size_t>(k)];
}

double box_scale(const Box& box) {
  double s = 0.0;
  for (int k = 0; k < box.dim(); ++k) {
    s = std::max({s, std::abs(box.re_lo[static_cast<std::size_t>(k)]),
                  std::abs(box.re_hi[static_cast<std::size_t>(k)]),
                  std::abs(box.im_lo[static_cast<std::size_t>(k)]),
                  std::abs(box.im_hi[static_cast<std::size_t>(k)])});
  }
  return std::max(1.0, s);
}

/// Solve the dense complex n x n system J dz = rhs by partial-pivot
/// elimination; n is at most a handful here.
CVec solve_dense(std::vector<CVec> J, CVec rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(J[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
          std::abs(J[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]))
        piv = r;
    if (std::abs(J[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]) < 1e-300)
      throw std::domain_error("singular Newton Jacobian");
    std::swap(J[static_cast<std::size_t>(piv)], J[static_cast<std::size_t>(col)]);
    std::swap(rhs[static_cast<std::size_t>(piv)], rhs[static_cast<std::size_t>(col)]);
    for (int r = col + 1; r < n; ++r) {
      const Complex f = J[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                        J[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      for (int c = col; c < n; ++c)
        J[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * J[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
      rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(col)];
    }
  }
  CVec x(static_cast<std::size_t>(n));
  for (int r = n - 1; r >= 0; --r) {
    Complex acc = rhs[static_cast<std::size_t>(r)];
    for (int c = r + 1; c < n; ++c)
      acc -= J[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
    x[static_cast<std::size_t>(r)] = acc / J[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
  }
  return x;
}

double fnorm(const CVec& v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return std::sqrt(s);
}

/// Damped Newton on derivative(z) = 0; returns true on convergence.
bool newton_root(const ComplexFunction& f, CVec& z, const Box& box,
                 const MinOptions& opt) {
  const double scale = box_scale(box);
  const double h = 1e-6 * scale;
  CVec F = f.derivative(z);
  for (int it = 0; it < opt.max_newton_iter; ++it) {
    const double r = fnorm(F);
    if (r <= opt.newton_tol * scale) return box.contains(z, 1e-9 * scale);
    std::vector<CVec> J(static_cast<std::size_t>(f.dim));
    for (auto& row : J) row.resize(static_cast<std::size_t>(f.dim));
    for (int c = 0; c < f.dim; ++c) {
      CVec zp = z, zm = z;
      zp[static_cast<std::size_t>(c)] += h;
      zm[static_cast<std::size_t>(c)] -= h;
      const CVec Fp = f.derivative(zp);
      const CVec Fm = f.derivative(zm);
      for (int rr = 0; rr < f.dim; ++rr)
        J[static_cast<std::size_t>(rr)][static_cast<std::size_t>(c)] =
            (Fp[static_cast<std::size_t>(rr)] - Fm[static_cast<std::size_t>(rr)]) / (2.0 * h);
    }
    CVec dz;
    try {
      dz = solve_dense(J, F);
    } catch (const std::domain_error&) {
      return false;
    }
    double lambda = 1.0;
    CVec z_new = z;
    for (;;) {
      for (int k = 0; k < f.dim; ++k)
        z_new[static_cast<std::size_t>(k)] = z[static_cast<std::size_t>(k)] -
                                             lambda * dz[static_cast<std::size_t>(k)];
      const CVec F_new = f.derivative(z_new);
      if (fnorm(F_new) < r || lambda < 1e-8) {
        z = z_new;
        F = F_new;
        break;
      }
      lambda *= 0.5;
    }
  }
  return fnorm(F) <= opt.newton_tol * scale && box.contains(z, 1e-9 * scale);
}

double real_part_at(const ComplexFunction& f, const CVec& z) {
  return f.eval(z).real();
}

/// Sample the two-sided saddle inequality of the min-plus definition around
/// z0; positive violations mean the point is not a saddle of Re f.
SaddleCertificate certify(const ComplexFunction& f, const CVec& z0, const Box& box,
                          const MinOptions& opt) {
  SaddleCertificate cert;
  cert.samples_per_axis = opt.cert_samples;
  const double p0 = real_part_at(f, z0);
  double viol = -1e300;

  // axis slices
  for (int k = 0; k < f.dim; ++k) {
    for (int i = 0; i < opt.cert_samples; ++i) {
      const double u = opt.cert_samples == 1 ? 0.5
                                             : static_cast<double>(i) / (opt.cert_samples - 1);
      CVec zx = z0;
      zx[static_cast<std::size_t>(k)] =
          Complex(box.re_lo[static_cast<std::size_t>(k)] + u * re_span(box, k),
                  z0[static_cast<std::size_t>(k)].imag());
      viol = std::max(viol, p0 - real_part_at(f, zx));  // min along real axes

      CVec zy = z0;
      zy[static_cast<std::size_t>(k)] =
          Complex(z0[static_cast<std::size_t>(k)].real(),
                  box.im_lo[static_cast<std::size_t>(k)] + u * im_span(box, k));
      viol = std::max(viol, real_part_at(f, zy) - p0);  // max along imaginary axes
    }
  }

  // joint samples (only adds information for dim > 1)
  if (f.dim > 1) {
    Lcg rng(12345);
    const int joint = opt.cert_samples * opt.cert_samples;
    for (int i = 0; i < joint; ++i) {
      CVec zx = z0, zy = z0;
      for (int k = 0; k < f.dim; ++k) {
        zx[static_cast<std::size_t>(k)] =
            Complex(box.re_lo[static_cast<std::size_t>(k)] + rng.next() * re_span(box, k),
                    z0[static_cast<std::size_t>(k)].imag());
        zy[static_cast<std::size_t>(k)] =
            Complex(z0[static_cast<std::size_t>(k)].real(),
                    box.im_lo[static_cast<std::size_t>(k)] + rng.next() * im_span(box, k));
      }
      viol = std::max(viol, p0 - real_part_at(f, zx));
      viol = std::max(viol, real_part_at(f, zy) - p0);
    }
  }

  cert.max_violation = viol;
  return cert;
}

}  // namespace

double ComplexFunction::cauchy_riemann_residual(std::span<const CVec> probes,
                                                double h) const {
  double worst = 0.0;
  for (const auto& z : probes) {
    for (int k = 0; k < dim; ++k) {
      CVec zxp = z, zxm = z, zyp = z, zym = z;
      zxp[static_cast<std::size_t>(k)] += h;
      zxm[static_cast<std::size_t>(k)] -= h;
      zyp[static_cast<std::size_t>(k)] += Complex(0.0, h);
      zym[static_cast<std::size_t>(k)] -= Complex(0.0, h);
      const Complex ddx = (eval(zxp) - eval(zxm)) / (2.0 * h);
      const Complex ddy = (eval(zyp) - eval(zym)) / (2.0 * h);
      worst = std::max(worst, std::abs(ddx - Complex(0.0, -1.0) * ddy));
      if (derivative)
        worst = std::max(worst, std::abs(ddx - derivative(z)[static_cast<std::size_t>(k)]));
    }
  }
  return worst;
}

Box Box::centered(int dim, double half_width) {
  Box b;
  b.re_lo.assign(static_cast<std::size_t>(dim), -half_width);
  b.re_hi.assign(static_cast<std::size_t>(dim), half_width);
  b.im_lo.assign(static_cast<std::size_t>(dim), -half_width);
  b.im_hi.assign(static_cast<std::size_t>(dim), half_width);
  return b;
}

Box Box::around(const CVec& center, double half_width) {
  Box b = Box::centered(static_cast<int>(center.size()), half_width);
  for (std::size_t k = 0; k < center.size(); ++k) {
    b.re_lo[k] += center[k].real();
    b.re_hi[k] += center[k].real();
    b.im_lo[k] += center[k].imag();
    b.im_hi[k] += center[k].imag();
  }
  return b;
}

bool Box::contains(const CVec& z, double slack) const {
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (z[k].real() < re_lo[k] - slack || z[k].real() > re_hi[k] + slack) return false;
    if (z[k].imag() < im_lo[k] - slack || z[k].imag() > im_hi[k] + slack) return false;
  }
  return true;
}

SaddleResult complex_min(const ComplexFunction& f, const Box& box,
                         const MinOptions& options) {
  if (!f.eval) throw std::invalid_argument("ComplexFunction has no eval");
  if (box.dim() != f.dim) throw std::invalid_argument("box dimension mismatch");
  const double scale = box_scale(box);

  std::vector<CVec> candidates;

  if (f.holomorphic && f.derivative) {
    // damped Newton from a grid of starts
    const int spa = std::max(1, options.starts_per_axis);
    std::vector<CVec> starts;
    const long total = static_cast<long>(std::pow(spa, 2 * f.dim));
    for (long idx = 0; idx < total; ++idx) {
      long rem = idx;
      CVec z(static_cast<std::size_t>(f.dim));
      for (int k = 0; k < f.dim; ++k) {
        const int ix = static_cast<int>(rem % spa);
        rem /= spa;
        const int iy = static_cast<int>(rem % spa);
        rem /= spa;
        const double ux = (ix + 0.5) / spa;
        const double uy = (iy + 0.5) / spa;
        z[static_cast<std::size_t>(k)] =
            Complex(box.re_lo[static_cast<std::size_t>(k)] + ux * re_span(box, k),
                    box.im_lo[static_cast<std::size_t>(k)] + uy * im_span(box, k));
      }
      starts.push_back(std::move(z));
    }
    for (auto z : starts) {
      if (!newton_root(f, z, box, options)) continue;
      bool dup = false;
      for (const auto& c : candidates) {
        double d = 0.0;
        for (int k = 0; k < f.dim; ++k)
          d = std::max(d, std::abs(z[static_cast<std::size_t>(k)] - c[static_cast<std::size_t>(k)]));
        if (d < 1e-7 * scale) {
          dup = true;
          break;
        }
      }
      if (!dup) candidates.push_back(std::move(z));
    }
  } else {
    if (f.dim != 1)
      throw std::invalid_argument(
          "grid min-max search is implemented for dimension 1 only; provide a "
          "holomorphic derivative for higher dimensions");
    // min over x of max over y of Re f, with zoom refinement
    double xlo = box.re_lo[0], xhi = box.re_hi[0];
    double ylo = box.im_lo[0], yhi = box.im_hi[0];
    const int g = std::max(9, options.grid_resolution);
    double best_x = 0.5 * (xlo + xhi), best_y = 0.5 * (ylo + yhi);
    for (int pass = 0; pass < 7; ++pass) {
      double min_over_x = 1e300;
      for (int i = 0; i < g; ++i) {
        const double x = xlo + (xhi - xlo) * i / (g - 1);
        double max_over_y = -1e300;
        double arg_y = ylo;
        for (int jj = 0; jj < g; ++jj) {
          const double y = ylo + (yhi - ylo) * jj / (g - 1);
          const double p = real_part_at(f, CVec{Complex(x, y)});
          if (p > max_over_y) {
            max_over_y = p;
            arg_y = y;
          }
        }
        if (max_over_y < min_over_x) {
          min_over_x = max_over_y;
          best_x = x;
          best_y = arg_y;
        }
      }
      const double wx = (xhi - xlo) / (g - 1) * 2.0;
      const double wy = (yhi - ylo) / (g - 1) * 2.0;
      xlo = std::max(box.re_lo[0], best_x - wx);
      xhi = std::min(box.re_hi[0], best_x + wx);
      ylo = std::max(box.im_lo[0], best_y - wy);
      yhi = std::min(box.im_hi[0], best_y + wy);
    }
    candidates.push_back(CVec{Complex(best_x, best_y)});
  }

  std::vector<SaddleResult> certified;
  for (const auto& z : candidates) {
    const SaddleCertificate cert = certify(f, z, box, options);
    const double tol = options.cert_tol * std::max(1.0, std::abs(f.eval(z)));
    if (cert.max_violation <= tol)
      certified.push_back(SaddleResult{z, f.eval(z), cert});
  }

  if (certified.empty()) throw NoSaddleError("no certified saddle point in the box");
  if (certified.size() > 1) throw MultivaluedMinError(std::move(certified));
  return certified.front();
}

Complex complex_fenchel(const ComplexFunction& f, const CVec& p, const Box& box,
                        const MinOptions& options) {
  if (static_cast<int>(p.size()) != f.dim)
    throw std::invalid_argument("slope dimension mismatch");
  ComplexFunction neg;  // -(p.z - f(z))
  neg.dim = f.dim;
  neg.holomorphic = f.holomorphic;
  neg.eval = [&f, p](const CVec& z) {
    Complex lin = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) lin += p[k] * z[k];
    return f.eval(z) - lin;
  };
  if (f.derivative) {
    neg.derivative = [&f, p](const CVec& z) {
      CVec d = f.derivative(z);
      for (std::size_t k = 0; k < p.size(); ++k) d[k] -= p[k];
      return d;
    };
  }
  const SaddleResult res = complex_min(neg, box, options);
  return -res.value;
}

ConvexityReport is_cconvex(const ComplexFunction& f, const Box& box,
                           int grid_resolution) {
  if (box.dim() != f.dim) throw std::invalid_argument("box dimension mismatch");
  const int g = std::max(5, grid_resolution);
  ConvexityReport rep;
  rep.min_re_curvature = 1e300;
  rep.max_im_curvature = -1e300;

  Lcg rng(987654321);
  const int n_base = (f.dim == 1) ? g : g * 2;
  double scale = 1.0;

  for (int b = 0; b < n_base; ++b) {
    CVec base(static_cast<std::size_t>(f.dim));
    for (int k = 0; k < f.dim; ++k)
      base[static_cast<std::size_t>(k)] =
          Complex(box.re_lo[static_cast<std::size_t>(k)] + rng.next() * re_span(box, k),
                  box.im_lo[static_cast<std::size_t>(k)] + rng.next() * im_span(box, k));
    scale = std::max(scale, std::abs(f.eval(base)));

    for (int k = 0; k < f.dim; ++k) {
      const double hx = re_span(box, k) / (g - 1);
      const double hy = im_span(box, k) / (g - 1);
      for (int i = 1; i + 1 < g; ++i) {
        // slice along the real part of coordinate k
        CVec zm = base, z0 = base, zp = base;
        const double x = box.re_lo[static_cast<std::size_t>(k)] + i * hx;
        const double y0 = base[static_cast<std::size_t>(k)].imag();
        zm[static_cast<std::size_t>(k)] = Complex(x - hx, y0);
        z0[static_cast<std::size_t>(k)] = Complex(x, y0);
        zp[static_cast<std::size_t>(k)] = Complex(x + hx, y0);
        const double d2x = real_part_at(f, zp) - 2.0 * real_part_at(f, z0) +
                           real_part_at(f, zm);
        rep.min_re_curvature = std::min(rep.min_re_curvature, d2x);

        // slice along the imaginary part
        const double y = box.im_lo[static_cast<std::size_t>(k)] + i * hy;
        const double x0 = base[static_cast<std::size_t>(k)].real();
        zm[static_cast<std::size_t>(k)] = Complex(x0, y - hy);
        z0[static_cast<std::size_t>(k)] = Complex(x0, y);
        zp[static_cast<std::size_t>(k)] = Complex(x0, y + hy);
        const double d2y = real_part_at(f, zp) - 2.0 * real_part_at(f, z0) +
                           real_part_at(f, zm);
        rep.max_im_curvature = std::max(rep.max_im_curvature, d2y);
        rep.samples += 2;
      }
    }
  }

  const double tol = 1e-9 * scale;
  rep.cconvex = rep.min_re_curvature >= -tol && rep.max_im_curvature <= tol;
  return rep;
}

}  // namespace hexaproc
