#pragma once

// Shared scalar chord math. The scalar backend is a direct loop over these
// helpers; the vector backends use them for loop tails, so tail entries are
// bit-identical to the scalar lane.

#include <cmath>

#include "heiskit/simd.hpp"

namespace heiskit::simd::detail {

// Coordinates of p^-1 q.
inline void chord(const HPoint& p, double qx, double qy, double qz, double& dx,
                  double& dy, double& dz) {
  dx = qx - p.x;
  dy = qy - p.y;
  dz = (qz - p.z) + 0.5 * (p.y * qx - p.x * qy);
}

// K(chord) masked by |chord| > eps. The gauge is evaluated exactly as
// dist_row evaluates it (sqrt of sqrt), so a truncation radius taken from a
// cached distance, e.g. eps = diameter, excludes the boundary pair exactly.
// Unmasked entries (including the zero chord) return exactly 0.
inline double eval_masked(const RowKernel& k, double dx, double dy, double dz,
                          double eps) {
  const double h = dx * dx + dy * dy;
  const double n4 = h * h + dz * dz;
  if (!(std::sqrt(std::sqrt(n4)) > eps)) return 0.0;
  switch (k.op) {
    case RowKernel::Op::kAlpha4:
      return (dz * dz) / (n4 * std::sqrt(std::sqrt(n4)));
    case RowKernel::Op::kAlpha2:
      return std::fabs(dz) * std::sqrt(std::sqrt(n4)) / n4;
    case RowKernel::Op::kAlpha1:
      return std::sqrt(std::fabs(dz)) / std::sqrt(n4);
    case RowKernel::Op::kB:
      return std::fabs(dx) / std::sqrt(n4);
    case RowKernel::Op::kAlphaGeneric:
      return std::pow(std::fabs(dz), k.half_alpha) / std::pow(n4, k.norm_exponent);
  }
  return 0.0;
}

inline double dist_of(const HPoint& p, double qx, double qy, double qz) {
  double dx, dy, dz;
  chord(p, qx, qy, qz, dx, dy, dz);
  const double h = dx * dx + dy * dy;
  return std::sqrt(std::sqrt(h * h + dz * dz));
}

}  // namespace heiskit::simd::detail
