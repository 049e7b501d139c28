#pragma once

// Test-only oracles, independent of the library code paths they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "heiskit/heis.hpp"
#include "heiskit/koch.hpp"

namespace heiskit::oracle {

// Signed area of the closed loop through the given planar points (shoelace).
inline double shoelace(std::span<const Vec2> loop) {
  double twice_area = 0.0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Vec2& a = loop[i];
    const Vec2& b = loop[(i + 1) % loop.size()];
    twice_area += a.x * b.y - a.y * b.x;
  }
  return 0.5 * twice_area;
}

// Signed area between the polyline arc from index i to index j and the
// straight chord back; this is what the vertical chord component of a
// horizontal lift must equal.
inline double chord_area(std::span<const Vec2> polyline, std::size_t i, std::size_t j) {
  std::vector<Vec2> loop(polyline.begin() + static_cast<std::ptrdiff_t>(i),
                         polyline.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  return shoelace(loop);
}

// Adaptive Simpson quadrature.
inline double simpson_rec(const std::function<double(double)>& f, double a, double b,
                          double fa, double fm, double fb, double whole, double tol,
                          int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol, int max_depth = 40) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// Largest eigenvalue of a dense symmetric matrix (row-major, n x n) by
// cyclic Jacobi sweeps.
inline double jacobi_max_eigenvalue(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    }
    if (off < 1e-28) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(at(p, q)) < 1e-300) continue;
        const double phi = 0.5 * std::atan2(2.0 * at(p, q), at(q, q) - at(p, p));
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        const double app = at(p, p);
        const double aqq = at(q, q);
        const double apq = at(p, q);
        at(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
        at(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = at(i, p);
          const double aiq = at(i, q);
          at(i, p) = c * aip - s * aiq;
          at(p, i) = at(i, p);
          at(i, q) = s * aip + c * aiq;
          at(q, i) = at(i, q);
        }
      }
    }
  }
  double best = at(0, 0);
  for (std::size_t i = 1; i < n; ++i) best = std::max(best, at(i, i));
  return best;
}

// Reciprocal circumradius of the Euclidean triangle with side lengths
// (a, b, c), computed through explicit coordinates and the perpendicular
// bisector of two sides; independent of any Heron-form evaluation.
inline double inverse_circumradius_from_sides(double a, double b, double c) {
  // A = (0,0), B = (c,0), C placed from the side lengths b = |AC|, a = |BC|.
  const double cx = (b * b + c * c - a * a) / (2.0 * c);
  const double cy_sq = b * b - cx * cx;
  if (cy_sq <= 0.0) return 0.0;  // degenerate comparison triangle
  const double cy = std::sqrt(cy_sq);
  // Circumcenter: x = c/2 from |P-A| = |P-B|; y from |P-A| = |P-C|.
  const double x = 0.5 * c;
  const double y = (b * b - 2.0 * x * cx) / (2.0 * cy);
  return 1.0 / std::hypot(x, y);
}

// 2D convex hull membership with tolerance: point is inside (or on) the hull
// of pts if it lies on the inner side of every hull edge. Monotone chain.
inline std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  auto cross = [](const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<Vec2> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (const Vec2& p : pts) {
      while (hull.size() >= base + 2 &&
             cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0.0) {
        hull.pop_back();
      }
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  return hull;
}

inline bool hull_contains(std::span<const Vec2> hull, const Vec2& p, double tol) {
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Vec2& a = hull[i];
    const Vec2& b = hull[(i + 1) % hull.size()];
    const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (cross < -tol) return false;
  }
  return true;
}

}  // namespace heiskit::oracle
