// AVX2 lane: 4 doubles per iteration. Compiled with -mavx2 and only entered
// after the runtime check in dispatch.cpp. The alpha(1), alpha(2), alpha(4)
// and K_b paths are square-root-only; generic alpha rows fall back to the
// scalar helpers.

#include <immintrin.h>

#include "rows_common.hpp"

namespace heiskit::simd {

namespace {

struct TagA1 {};
struct TagA2 {};
struct TagA4 {};
struct TagB {};

inline __m256d abs_pd(__m256d v) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  return _mm256_andnot_pd(sign, v);
}

// Kernel value for four chords given |chord|^4, the vertical part dz and the
// horizontal part dx. Lanes failing the mask are zeroed by the caller.
inline __m256d eval4(TagA4, __m256d n4, __m256d dz, __m256d /*dx*/) {
  const __m256d root = _mm256_sqrt_pd(_mm256_sqrt_pd(n4));
  return _mm256_div_pd(_mm256_mul_pd(dz, dz), _mm256_mul_pd(n4, root));
}
inline __m256d eval4(TagA2, __m256d n4, __m256d dz, __m256d /*dx*/) {
  const __m256d root = _mm256_sqrt_pd(_mm256_sqrt_pd(n4));
  return _mm256_div_pd(_mm256_mul_pd(abs_pd(dz), root), n4);
}
inline __m256d eval4(TagA1, __m256d n4, __m256d dz, __m256d /*dx*/) {
  return _mm256_div_pd(_mm256_sqrt_pd(abs_pd(dz)), _mm256_sqrt_pd(n4));
}
inline __m256d eval4(TagB, __m256d n4, __m256d /*dz*/, __m256d dx) {
  return _mm256_div_pd(abs_pd(dx), _mm256_sqrt_pd(n4));
}

template <class Tag>
void kernel_row_t(const RowKernel& k, const HPoint& p, const double* qx,
                  const double* qy, const double* qz, std::size_t n, double eps,
                  double* out) {
  const __m256d px = _mm256_set1_pd(p.x);
  const __m256d py = _mm256_set1_pd(p.y);
  const __m256d pz = _mm256_set1_pd(p.z);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d veps = _mm256_set1_pd(eps);

  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d x = _mm256_loadu_pd(qx + j);
    const __m256d y = _mm256_loadu_pd(qy + j);
    const __m256d z = _mm256_loadu_pd(qz + j);
    const __m256d dx = _mm256_sub_pd(x, px);
    const __m256d dy = _mm256_sub_pd(y, py);
    const __m256d twist = _mm256_mul_pd(
        half, _mm256_sub_pd(_mm256_mul_pd(py, x), _mm256_mul_pd(px, y)));
    const __m256d dz = _mm256_add_pd(_mm256_sub_pd(z, pz), twist);
    const __m256d h = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    const __m256d n4 = _mm256_add_pd(_mm256_mul_pd(h, h), _mm256_mul_pd(dz, dz));
    const __m256d gauge = _mm256_sqrt_pd(_mm256_sqrt_pd(n4));
    const __m256d mask = _mm256_cmp_pd(gauge, veps, _CMP_GT_OQ);
    const __m256d val = eval4(Tag{}, n4, dz, dx);
    _mm256_storeu_pd(out + j, _mm256_and_pd(val, mask));
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
  const __m256d px = _mm256_set1_pd(p.x);
  const __m256d py = _mm256_set1_pd(p.y);
  const __m256d pz = _mm256_set1_pd(p.z);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d veps = _mm256_set1_pd(eps);
  __m256d acc = _mm256_setzero_pd();

  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d x = _mm256_loadu_pd(qx + j);
    const __m256d y = _mm256_loadu_pd(qy + j);
    const __m256d z = _mm256_loadu_pd(qz + j);
    const __m256d dx = _mm256_sub_pd(x, px);
    const __m256d dy = _mm256_sub_pd(y, py);
    const __m256d twist = _mm256_mul_pd(
        half, _mm256_sub_pd(_mm256_mul_pd(py, x), _mm256_mul_pd(px, y)));
    const __m256d dz = _mm256_add_pd(_mm256_sub_pd(z, pz), twist);
    const __m256d h = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    const __m256d n4 = _mm256_add_pd(_mm256_mul_pd(h, h), _mm256_mul_pd(dz, dz));
    const __m256d gauge = _mm256_sqrt_pd(_mm256_sqrt_pd(n4));
    const __m256d mask = _mm256_cmp_pd(gauge, veps, _CMP_GT_OQ);
    const __m256d val = _mm256_and_pd(eval4(Tag{}, n4, dz, dx), mask);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(val, _mm256_loadu_pd(w + j)));
  }

  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
  for (; j < n; ++j) {
    double dx, dy, dz;
    detail::chord(p, qx[j], qy[j], qz[j], dx, dy, dz);
    sum += detail::eval_masked(k, dx, dy, dz, eps) * w[j];
  }
  return sum;
}

void kernel_row_avx2(const RowKernel& k, const HPoint& p, const double* qx,
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

double weighted_sum_avx2(const RowKernel& k, const HPoint& p, const double* qx,
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

void dist_row_avx2(const HPoint& p, const double* qx, const double* qy,
                   const double* qz, std::size_t n, double* out) {
  const __m256d px = _mm256_set1_pd(p.x);
  const __m256d py = _mm256_set1_pd(p.y);
  const __m256d pz = _mm256_set1_pd(p.z);
  const __m256d half = _mm256_set1_pd(0.5);

  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d x = _mm256_loadu_pd(qx + j);
    const __m256d y = _mm256_loadu_pd(qy + j);
    const __m256d z = _mm256_loadu_pd(qz + j);
    const __m256d dx = _mm256_sub_pd(x, px);
    const __m256d dy = _mm256_sub_pd(y, py);
    const __m256d twist = _mm256_mul_pd(
        half, _mm256_sub_pd(_mm256_mul_pd(py, x), _mm256_mul_pd(px, y)));
    const __m256d dz = _mm256_add_pd(_mm256_sub_pd(z, pz), twist);
    const __m256d h = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    const __m256d n4 = _mm256_add_pd(_mm256_mul_pd(h, h), _mm256_mul_pd(dz, dz));
    _mm256_storeu_pd(out + j, _mm256_sqrt_pd(_mm256_sqrt_pd(n4)));
  }
  for (; j < n; ++j) {
    out[j] = detail::dist_of(p, qx[j], qy[j], qz[j]);
  }
}

}  // namespace

const RowBackend& avx2_backend() {
  static const RowBackend backend{
      "avx2",
      &kernel_row_avx2,
      &weighted_sum_avx2,
      &dist_row_avx2,
  };
  return backend;
}

}  // namespace heiskit::simd
