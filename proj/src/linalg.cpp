#include "hexaproc/linalg.hpp"

#include <stdexcept>

namespace hexaproc {

Mat3c inverse(const Mat3c& a) {
  const Complex c00 = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  const Complex c01 = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  const Complex c02 = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  const Complex det = a(0, 0) * c00 + a(0, 1) * c01 + a(0, 2) * c02;
  if (std::abs(det) < 1e-300 * (1.0 + max_abs(a)))
    throw std::domain_error("singular 3x3 matrix");
  const Complex inv_det = 1.0 / det;

  Mat3c r;
  r(0, 0) = c00 * inv_det;
  r(1, 0) = c01 * inv_det;
  r(2, 0) = c02 * inv_det;
  r(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) * inv_det;
  r(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) * inv_det;
  r(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) * inv_det;
  r(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) * inv_det;
  r(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) * inv_det;
  r(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) * inv_det;
  return r;
}

}  // namespace hexaproc
