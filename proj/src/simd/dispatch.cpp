#include <cstdlib>
#include <mutex>

#include "heiskit/simd.hpp"

namespace heiskit::simd {

#if defined(HEISKIT_BUILD_AVX2)
const RowBackend& avx2_backend();

namespace {
bool avx2_supported() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}
}  // namespace
#endif

#if defined(HEISKIT_BUILD_NEON)
const RowBackend& neon_backend();
#endif

RowKernel RowKernel::lower(const KernelSpec& spec) {
  RowKernel k;
  if (spec.family() == KernelSpec::Family::kB) {
    k.op = Op::kB;
    return k;
  }
  const double a = spec.alpha_value();
  if (a == 1.0) {
    k.op = Op::kAlpha1;
  } else if (a == 2.0) {
    k.op = Op::kAlpha2;
  } else if (a == 4.0) {
    k.op = Op::kAlpha4;
  } else {
    k.op = Op::kAlphaGeneric;
    k.half_alpha = 0.5 * a;
    k.norm_exponent = 0.25 * (a + 1.0);
  }
  return k;
}

const std::vector<const RowBackend*>& available_backends() {
  static const std::vector<const RowBackend*> backends = [] {
    std::vector<const RowBackend*> v{&scalar_backend()};
#if defined(HEISKIT_BUILD_AVX2)
    if (avx2_supported()) v.push_back(&avx2_backend());
#endif
#if defined(HEISKIT_BUILD_NEON)
    v.push_back(&neon_backend());
#endif
    return v;
  }();
  return backends;
}

namespace {

std::mutex g_active_mutex;
const RowBackend* g_active = nullptr;

const RowBackend* pick_default() {
  const auto& backends = available_backends();
  if (const char* env = std::getenv("HEISKIT_SIMD")) {
    for (const RowBackend* b : backends) {
      if (std::string(b->name) == env) return b;
    }
  }
  return backends.back();
}

}  // namespace

const RowBackend& active_backend() {
  std::lock_guard<std::mutex> lock(g_active_mutex);
  if (g_active == nullptr) g_active = pick_default();
  return *g_active;
}

bool set_active_backend(const std::string& name) {
  for (const RowBackend* b : available_backends()) {
    if (name == b->name) {
      std::lock_guard<std::mutex> lock(g_active_mutex);
      g_active = b;
      return true;
    }
  }
  return false;
}

}  // namespace heiskit::simd
