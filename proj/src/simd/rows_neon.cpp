// NEON lane: 2 doubles per iteration, aarch64 only (where NEON is baseline,
// so no runtime feature check is needed). Mirrors the AVX2 lane; generic
// alpha rows fall back to the scalar helpers.

#include <arm_neon.h>

#include "rows_common.hpp"

namespace heiskit::simd {

namespace {

struct TagA1 {};
struct TagA2 {};
struct TagA4 {};
struct TagB {};

inline float64x2_t eval2(TagA4, float64x2_t n4, float64x2_t dz, float64x2_t /*dx*/) {
  const float64x2_t root = vsqrtq_f64(vsqrtq_f64(n4));
  return vdivq_f64(vmulq_f64(dz, dz), vmulq_f64(n4, root));
}
inline float64x2_t eval2(TagA2, float64x2_t n4, float64x2_t dz, float64x2_t /*dx*/) {
  const float64x2_t root = vsqrtq_f64(vsqrtq_f64(n4));
  return vdivq_f64(vmulq_f64(vabsq_f64(dz), root), n4);
}
inline float64x2_t eval2(TagA1, float64x2_t n4, float64x2_t dz, float64x2_t /*dx*/) {
  return vdivq_f64(vsqrtq_f64(vabsq_f64(dz)), vsqrtq_f64(n4));
}
inline float64x2_t eval2(TagB, float64x2_t n4, float64x2_t /*dz*/, float64x2_t dx) {
  return vdivq_f64(vabsq_f64(dx), vsqrtq_f64(n4));
}

struct Chord2 {
  float64x2_t dx, dz, n4;
  uint64x2_t mask;
};

inline Chord2 chord2(const HPoint& p, const double* qx, const double* qy,
                     const double* qz, std::size_t j, float64x2_t eps) {
  const float64x2_t px = vdupq_n_f64(p.x);
  const float64x2_t py = vdupq_n_f64(p.y);
  const float64x2_t pz = vdupq_n_f64(p.z);
  const float64x2_t half = vdupq_n_f64(0.5);
  const float64x2_t x = vld1q_f64(qx + j);
  const float64x2_t y = vld1q_f64(qy + j);
  const float64x2_t z = vld1q_f64(qz + j);
  const float64x2_t dx = vsubq_f64(x, px);
  const float64x2_t dy = vsubq_f64(y, py);
  const float64x2_t twist =
      vmulq_f64(half, vsubq_f64(vmulq_f64(py, x), vmulq_f64(px, y)));
  const float64x2_t dz = vaddq_f64(vsubq_f64(z, pz), twist);
  const float64x2_t h = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
  const float64x2_t n4 = vaddq_f64(vmulq_f64(h, h), vmulq_f64(dz, dz));
  const float64x2_t gauge = vsqrtq_f64(vsqrtq_f64(n4));
  return {dx, dz, n4, vcgtq_f64(gauge, eps)};
}

template <class Tag>
void kernel_row_t(const RowKernel& k, const HPoint& p, const double* qx,
                  const double* qy, const double* qz, std::size_t n, double eps,
                  double* out) {
  const float64x2_t veps = vdupq_n_f64(eps);
  const float64x2_t zero = vdupq_n_f64(0.0);

  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const Chord2 c = chord2(p, qx, qy, qz, j, veps);
    const float64x2_t val = eval2(Tag{}, c.n4, c.dz, c.dx);
    vst1q_f64(out + j, vbslq_f64(c.mask, val, zero));
  }
  for (; j < n; ++j) {
    double dx, dy, dz;
    detail::chord(p, qx[j], qy[j], qz[j], dx, dy, dz);
    out[j] = detail::eval_masked(k, dx, dy, dz, eps);
  }
}

template <class Tag>
double weighted_sum_t(const RowKernel& k, const HPoint& p, const double* qx,
                      const double* qy, const double* qz, const double* w,
                      std::size_t n, double eps) {
  const float64x2_t veps = vdupq_n_f64(eps);
  const float64x2_t zero = vdupq_n_f64(0.0);
  float64x2_t acc = vdupq_n_f64(0.0);

  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const Chord2 c = chord2(p, qx, qy, qz, j, veps);
    const float64x2_t val = vbslq_f64(c.mask, eval2(Tag{}, c.n4, c.dz, c.dx), zero);
    acc = vaddq_f64(acc, vmulq_f64(val, vld1q_f64(w + j)));
  }

  double sum = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; j < n; ++j) {
    double dx, dy, dz;
    detail::chord(p, qx[j], qy[j], qz[j], dx, dy, dz);
    sum += detail::eval_masked(k, dx, dy, dz, eps) * w[j];
  }
  return sum;
}

void kernel_row_neon(const RowKernel& k, const HPoint& p, const double* qx,
                     const double* qy, const double* qz, std::size_t n,
                     double eps, double* out) {
  switch (k.op) {
    case RowKernel::Op::kAlpha1:
      kernel_row_t<TagA1>(k, p, qx, qy, qz, n, eps, out);
      return;
    case RowKernel::Op::kAlpha2:
      kernel_row_t<TagA2>(k, p, qx, qy, qz, n, eps, out);
      return;
    case RowKernel::Op::kAlpha4:
      kernel_row_t<TagA4>(k, p, qx, qy, qz, n, eps, out);
      return;
    case RowKernel::Op::kB:
      kernel_row_t<TagB>(k, p, qx, qy, qz, n, eps, out);
      return;
    case RowKernel::Op::kAlphaGeneric:
      break;
  }
  for (std::size_t j = 0; j < n; ++j) {
    double dx, dy, dz;
    detail::chord(p, qx[j], qy[j], qz[j], dx, dy, dz);
    out[j] = detail::eval_masked(k, dx, dy, dz, eps);
  }
}

double weighted_sum_neon(const RowKernel& k, const HPoint& p, const double* qx,
                         const double* qy, const double* qz, const double* w,
                         std::size_t n, double eps) {
  switch (k.op) {
    case RowKernel::Op::kAlpha1:
      return weighted_sum_t<TagA1>(k, p, qx, qy, qz, w, n, eps);
    case RowKernel::Op::kAlpha2:
      return weighted_sum_t<TagA2>(k, p, qx, qy, qz, w, n, eps);
    case RowKernel::Op::kAlpha4:
      return weighted_sum_t<TagA4>(k, p, qx, qy, qz, w, n, eps);
    case RowKernel::Op::kB:
      return weighted_sum_t<TagB>(k, p, qx, qy, qz, w, n, eps);
    case RowKernel::Op::kAlphaGeneric:
      break;
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double dx, dy, dz;
    detail::chord(p, qx[j], qy[j], qz[j], dx, dy, dz);
    acc += detail::eval_masked(k, dx, dy, dz, eps) * w[j];
  }
  return acc;
}

void dist_row_neon(const HPoint& p, const double* qx, const double* qy,
                   const double* qz, std::size_t n, double* out) {
  const float64x2_t no_mask = vdupq_n_f64(-1.0);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const Chord2 c = chord2(p, qx, qy, qz, j, no_mask);
    vst1q_f64(out + j, vsqrtq_f64(vsqrtq_f64(c.n4)));
  }
  for (; j < n; ++j) {
    out[j] = detail::dist_of(p, qx[j], qy[j], qz[j]);
  }
}

}  // namespace

const RowBackend& neon_backend() {
  static const RowBackend backend{
      "neon",
      &kernel_row_neon,
      &weighted_sum_neon,
      &dist_row_neon,
  };
  return backend;
}

}  // namespace heiskit::simd
