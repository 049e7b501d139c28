#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "heiskit/heis.hpp"
#include "heiskit/kernels.hpp"

namespace heiskit::simd {

// Kernel description lowered for the row backends: family switch plus
// precomputed exponents, so the inner loops stay branch-light. alpha values
// 1, 2 and 4 get square-root-only code paths.
struct RowKernel {
  enum class Op { kAlpha1, kAlpha2, kAlpha4, kAlphaGeneric, kB };
  Op op = Op::kAlpha4;
  double half_alpha = 2.0;       // a/2, generic path only
  double norm_exponent = 1.25;   // (a+1)/4 applied to |p|^4, generic path only

  static RowKernel lower(const KernelSpec& spec);
};

// One row backend: batched primitives against a fixed left point p and
// structure-of-arrays right points q. Every function masks entries with
// d(p, q_j) <= eps to zero (eps = 0 keeps everything except q_j == p, which
// is exactly the diagonal/duplicate case) and writes or accumulates in
// ascending j, so outputs do not depend on how callers partition rows.
struct RowBackend {
  const char* name;

  // out[j] = K(p^-1 q_j) masked by d(p, q_j) > eps.
  void (*kernel_row)(const RowKernel& k, const HPoint& p, const double* qx,
                     const double* qy, const double* qz, std::size_t n,
                     double eps, double* out);

  // sum_j K(p^-1 q_j) * w_j with the same masking, fixed lane order.
  double (*weighted_kernel_row_sum)(const RowKernel& k, const HPoint& p,
                                    const double* qx, const double* qy,
                                    const double* qz, const double* w,
                                    std::size_t n, double eps);

  // out[j] = d(p, q_j).
  void (*dist_row)(const HPoint& p, const double* qx, const double* qy,
                   const double* qz, std::size_t n, double* out);
};

// Reference lane; always present, plain double loops.
const RowBackend& scalar_backend();

// Backends usable on this machine, scalar first.
const std::vector<const RowBackend*>& available_backends();

// The backend used by the library. Defaults to the widest available lane;
// the HEISKIT_SIMD environment variable ("scalar", "avx2", "neon") or
// set_active_backend overrides it.
const RowBackend& active_backend();
bool set_active_backend(const std::string& name);

}  // namespace heiskit::simd
