#include "rows_common.hpp"

namespace heiskit::simd {

namespace {

void kernel_row_scalar(const RowKernel& k, const HPoint& p, const double* qx,
                       const double* qy, const double* qz, std::size_t n,
                       double eps, double* out) {
  for (std::size_t j = 0; j < n; ++j) {
    double dx, dy, dz;
    detail::chord(p, qx[j], qy[j], qz[j], dx, dy, dz);
    out[j] = detail::eval_masked(k, dx, dy, dz, eps);
  }
}

double weighted_sum_scalar(const RowKernel& k, const HPoint& p, const double* qx,
                           const double* qy, const double* qz, const double* w,
                           std::size_t n, double eps) {
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double dx, dy, dz;
    detail::chord(p, qx[j], qy[j], qz[j], dx, dy, dz);
    acc += detail::eval_masked(k, dx, dy, dz, eps) * w[j];
  }
  return acc;
}

void dist_row_scalar(const HPoint& p, const double* qx, const double* qy,
                     const double* qz, std::size_t n, double* out) {
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = detail::dist_of(p, qx[j], qy[j], qz[j]);
  }
}

}  // namespace

const RowBackend& scalar_backend() {
  static const RowBackend backend{
      "scalar",
      &kernel_row_scalar,
      &weighted_sum_scalar,
      &dist_row_scalar,
  };
  return backend;
}

}  // namespace heiskit::simd
