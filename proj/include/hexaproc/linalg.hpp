#ifndef HEXAPROC_LINALG_HPP
#define HEXAPROC_LINALG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace hexaproc {

using Complex = std::complex<double>;

/// Integer 3-vector. Cube geometry is exact integer arithmetic until the
/// final physical scaling, so wedge sums and offset covariances carry no
/// rounding error.
struct Vec3i {
  std::array<std::int64_t, 3> v{0, 0, 0};

  std::int64_t operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
  std::int64_t& operator[](int i) { return v[static_cast<std::size_t>(i)]; }

  friend Vec3i operator+(Vec3i a, const Vec3i& b) {
    for (int i = 0; i < 3; ++i) a[i] += b[i];
    return a;
  }
  friend Vec3i operator-(Vec3i a, const Vec3i& b) {
    for (int i = 0; i < 3; ++i) a[i] -= b[i];
    return a;
  }
  friend Vec3i operator-(Vec3i a) {
    for (int i = 0; i < 3; ++i) a[i] = -a[i];
    return a;
  }
  friend bool operator==(const Vec3i& a, const Vec3i& b) { return a.v == b.v; }
  friend bool operator<(const Vec3i& a, const Vec3i& b) { return a.v < b.v; }
};

inline Vec3i cross(const Vec3i& a, const Vec3i& b) {
  return Vec3i{{a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0]}};
}

struct Vec3d {
  std::array<double, 3> v{0.0, 0.0, 0.0};

  double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }

  friend Vec3d operator+(Vec3d a, const Vec3d& b) {
    for (int i = 0; i < 3; ++i) a[i] += b[i];
    return a;
  }
  friend Vec3d operator-(Vec3d a, const Vec3d& b) {
    for (int i = 0; i < 3; ++i) a[i] -= b[i];
    return a;
  }
  friend Vec3d operator*(double s, Vec3d a) {
    for (int i = 0; i < 3; ++i) a[i] *= s;
    return a;
  }
};

inline Vec3d to_vec3d(const Vec3i& a) {
  return Vec3d{{static_cast<double>(a[0]), static_cast<double>(a[1]),
                static_cast<double>(a[2])}};
}

inline Vec3d cross(const Vec3d& a, const Vec3d& b) {
  return Vec3d{{a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0]}};
}

inline double norm(const Vec3d& a) {
  return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
}

struct Vec3c {
  std::array<Complex, 3> v{Complex{}, Complex{}, Complex{}};

  Complex operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
  Complex& operator[](int i) { return v[static_cast<std::size_t>(i)]; }

  friend Vec3c operator+(Vec3c a, const Vec3c& b) {
    for (int i = 0; i < 3; ++i) a[i] += b[i];
    return a;
  }
  friend Vec3c operator-(Vec3c a, const Vec3c& b) {
    for (int i = 0; i < 3; ++i) a[i] -= b[i];
    return a;
  }
  friend Vec3c operator*(Complex s, Vec3c a) {
    for (int i = 0; i < 3; ++i) a[i] *= s;
    return a;
  }
  friend Vec3c operator*(double s, Vec3c a) {
    for (int i = 0; i < 3; ++i) a[i] *= s;
    return a;
  }
};

inline Vec3c to_vec3c(const Vec3i& a) {
  return Vec3c{{Complex(static_cast<double>(a[0])),
                Complex(static_cast<double>(a[1])),
                Complex(static_cast<double>(a[2]))}};
}

inline Vec3c to_vec3c(const Vec3d& a) {
  return Vec3c{{Complex(a[0]), Complex(a[1]), Complex(a[2])}};
}

inline Vec3d real(const Vec3c& a) {
  return Vec3d{{a[0].real(), a[1].real(), a[2].real()}};
}

inline Vec3d imag(const Vec3c& a) {
  return Vec3d{{a[0].imag(), a[1].imag(), a[2].imag()}};
}

/// Unconjugated bilinear dot product (the complex mechanics uses z.z, not z.z*).
inline Complex dot(const Vec3c& a, const Vec3c& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double dot(const Vec3d& a, const Vec3d& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3c& a) {
  return std::sqrt(std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]));
}

/// Dense complex 3x3 matrix, row major. Used for quadratic-form coefficient
/// matrices, which are symmetric (not Hermitian) throughout.
struct Mat3c {
  std::array<Complex, 9> m{};

  Complex operator()(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }
  Complex& operator()(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }

  static Mat3c identity() {
    Mat3c I;
    I(0, 0) = I(1, 1) = I(2, 2) = 1.0;
    return I;
  }
  static Mat3c diagonal(Complex d0, Complex d1, Complex d2) {
    Mat3c D;
    D(0, 0) = d0;
    D(1, 1) = d1;
    D(2, 2) = d2;
    return D;
  }

  friend Mat3c operator+(Mat3c a, const Mat3c& b) {
    for (int i = 0; i < 9; ++i) a.m[static_cast<std::size_t>(i)] += b.m[static_cast<std::size_t>(i)];
    return a;
  }
  friend Mat3c operator-(Mat3c a, const Mat3c& b) {
    for (int i = 0; i < 9; ++i) a.m[static_cast<std::size_t>(i)] -= b.m[static_cast<std::size_t>(i)];
    return a;
  }
  friend Mat3c operator*(Complex s, Mat3c a) {
    for (auto& x : a.m) x *= s;
    return a;
  }
  friend Mat3c operator*(const Mat3c& a, const Mat3c& b) {
    Mat3c r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r(i, j) += a(i, k) * b(k, j);
    return r;
  }
  friend Vec3c operator*(const Mat3c& a, const Vec3c& x) {
    Vec3c r;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) r[i] += a(i, k) * x[k];
    return r;
  }
};

inline Complex trace(const Mat3c& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

inline double max_abs(const Mat3c& a) {
  double r = 0.0;
  for (const auto& x : a.m) r = std::max(r, std::abs(x));
  return r;
}

inline double symmetry_defect(const Mat3c& a) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) r = std::max(r, std::abs(a(i, j) - a(j, i)));
  return r;
}

/// Inverse by adjugate; throws std::domain_error on (near-)singular input.
Mat3c inverse(const Mat3c& a);

}  // namespace hexaproc

#endif
