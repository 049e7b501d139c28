#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "heiskit/heis.hpp"
#include "heiskit/koch.hpp"

namespace heiskit {

// Horizontal lift of a planar polyline. Vertex k+1 satisfies
// z_{k+1} = z_k + (x_k*y_{k+1} - y_k*x_{k+1})/2, the exact integral of the
// lift rule along a straight segment. stage >= 0 when the polyline came from
// a Koch stage, in which case segment words are the base-6 digits of the
// segment index.
struct LiftedPolyline {
  std::vector<HPoint> vertices;
  int stage = -1;

  std::size_t segment_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Word segment_word(std::size_t segment_index) const;
};

LiftedPolyline horizontal_lift(std::span<const Vec2> polyline, double z0);
LiftedPolyline lift_stage(const PolygonStage& stage, double z0);

// Closed interval of reals.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

// Lifted log-oscillation curve gamma(t) = (t, t sin log t, z(t)) with
// z(t) = t^2 (2 cos log t + sin log t) / 10, the solution of the lift rule
// normalized by z -> 0 as t -> 0+.
HPoint log_curve_point(double t);

// I_n = [e^{2 pi n + pi/2}, e^{2 pi n + 3 pi/4}], n in [0, 112].
Interval log_curve_interval(int n);

// Third coordinate of p^-1 q for two points on a common horizontal lift:
// z_q - z_p + (y_p x_q - x_p y_q)/2, the signed area between the curve arc
// and the straight chord. nh of the chord is |result|^(1/2).
double chord_vertical(const HPoint& p, const HPoint& q);

// Quaternary Cantor set at a fixed depth: keep the first and the last
// quarter of every interval, represent each surviving interval by its
// midpoint with weight 2^-depth.
struct CantorLift {
  int depth = 0;
  std::vector<double> representatives;  // 2^depth midpoints, increasing
  std::vector<double> weights;          // all 2^-depth
};

CantorLift cantor_build(int depth, std::size_t budget = std::size_t{1} << 22);

// Lift t -> (t, 0, t) of the representatives, weights preserved. All chords
// p^-1 q of the image have the exact form (d, 0, d).
std::vector<std::pair<HPoint, double>> cantor_points(const CantorLift& c);

struct Lemma54Report {
  int stage = 0;            // n
  double min_ratio = 0.0;   // min |chord_vertical(p,q)| / (R_n^2 theta_n)
  std::size_t pair_count = 0;
  double r_n = 0.0;
  double theta_n = 0.0;
  bool exhaustive = false;
};

// Scans pairs p, q of lifted stage-(n+2) vertices whose words agree through
// position n-1 with p_n = 1, q_n = 4. Runs exhaustively over all prefixes
// and vertex pairs when `samples` covers them, otherwise over seeded random
// prefixes. The vertical chord is computed on a locally materialized lift of
// the shared parent segment; the value is left-translation invariant so the
// local gauge does not matter.
Lemma54Report lemma54_scan(const AngleSchedule& schedule, int n, std::size_t samples,
                           std::uint64_t seed, const Vec2& j0_begin = {0.0, 0.0},
                           const Vec2& j0_end = {1.0, 0.0});

// Delimited export of a lifted point cloud: index, x, y, z, weight, word.
struct LiftedPointRecord {
  HPoint p;
  double weight = 0.0;
  std::string word;
};
void write_lifted_points(std::ostream& os, std::span<const LiftedPointRecord> records);

}  // namespace heiskit
