#pragma once

#include <cmath>

#include "heiskit/errors.hpp"

namespace heiskit {

// Point of the first Heisenberg group, coordinates (x, y, z). The x,y pair
// spans the horizontal plane; z scales quadratically under dilation.
struct HPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const HPoint&, const HPoint&) = default;
};

inline constexpr HPoint kIdentity{0.0, 0.0, 0.0};

// Group law (x,y,z)*(x',y',z') = (x+x', y+y', z+z'+(xy'-yx')/2).
inline HPoint group_mul(const HPoint& p, const HPoint& q) {
  return {p.x + q.x, p.y + q.y, p.z + q.z + 0.5 * (p.x * q.y - p.y * q.x)};
}

inline HPoint inverse(const HPoint& p) { return {-p.x, -p.y, -p.z}; }

// Fourth power of the Koranyi gauge: (x^2+y^2)^2 + z^2. Cheap, exact on
// dyadic horizontal data, and the quantity every kernel formula starts from.
inline double koranyi_norm4(const HPoint& p) {
  const double h = p.x * p.x + p.y * p.y;
  return h * h + p.z * p.z;
}

// Koranyi gauge ((x^2+y^2)^2 + z^2)^(1/4). The quartic root is sqrt(sqrt(.))
// rather than pow(., 0.25): two correctly rounded square roots return exact
// values on horizontal chords whose squares are exactly representable.
inline double koranyi_norm(const HPoint& p) {
  return std::sqrt(std::sqrt(koranyi_norm4(p)));
}

// Left-invariant metric d(p,q) = |q^-1 . p|. Always computed through the
// composed group operations; there is no fused shortcut.
inline double dist(const HPoint& p, const HPoint& q) {
  return koranyi_norm(group_mul(inverse(q), p));
}

inline HPoint dilate(double r, const HPoint& p) {
  if (!(r > 0.0)) throw ValidationError("dilate: scale must be positive");
  return {r * p.x, r * p.y, r * r * p.z};
}

// Non-horizontal gauge |z|^(1/2); vanishes exactly on the horizontal plane
// through the identity and is 1-homogeneous under dilations.
inline double nh(const HPoint& p) { return std::sqrt(std::fabs(p.z)); }

}  // namespace heiskit
