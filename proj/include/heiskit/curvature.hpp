#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "heiskit/heis.hpp"
#include "heiskit/measure.hpp"

namespace heiskit {

// Menger curvature of the comparison triangle: with a = d(p2,p3),
// b = d(p1,p3), c = d(p1,p2), returns 4*Area(a,b,c)/(a*b*c) where the area
// comes from the sorted (Kahan) Heron form. Degenerate comparison triangles
// (the metric is additive along horizontal lines) return exactly 0; the
// Heron argument is clamped at 0 so floating-point near-degeneracy cannot
// produce negative radicands. Coincident points are rejected.
double menger(const HPoint& p1, const HPoint& p2, const HPoint& p3);

// Triples (i,j,k), i<j<k, of atoms inside B(center, radius_cap) whose three
// pairwise distances fit a common window [alpha*r, r] for some r > 0, i.e.
// d_min >= alpha * d_max.
struct TripleFamily {
  double alpha = 0.0;
  HPoint center;
  double radius_cap = 0.0;
  std::vector<std::array<std::uint32_t, 3>> triples;
  bool exhaustive = true;
  // Exhaustive mode: universe = C(ball, 3) and draws = 0. Sampled mode:
  // draws ordered index triples uniformly, so a fixed unordered triple is
  // hit with probability 6/ball^3 per draw; universe = ball^3/6 and
  // universe/draws is the unbiased inclusion weight of each kept entry
  // (repeats retained for multiplicity).
  double universe = 0.0;
  std::size_t draws = 0;
};

// Enumerates the admissible triples exhaustively when their count fits the
// budget, otherwise keeps the admissible members of `budget` uniform draws
// with the bookkeeping needed for unbiased energy estimates.
TripleFamily sigma_enumerate(const DiscreteMeasure& m, double alpha,
                             const HPoint& center, double radius_cap,
                             std::size_t budget, std::uint64_t seed,
                             unsigned workers = 0);

struct CurvatureSumReport {
  double energy = 0.0;  // sum of w_i w_j w_k c(p_i,p_j,p_k)^2 over the family
  double radius_cap = 0.0;
  double alpha = 0.0;
  std::size_t triple_count = 0;   // admissible triples seen
  bool exhaustive = true;
  double standard_error = 0.0;    // 0 in exhaustive mode
  std::uint64_t seed = 0;
};

// Curvature energy over Sigma(alpha) triples in B(center, radius_cap),
// exhaustive or unbiased-sampled under the same budget rule as
// sigma_enumerate. Exhaustive sums are accumulated per leading index and
// merged in index order, so results are independent of the worker count.
CurvatureSumReport curvature_energy(const DiscreteMeasure& m, double alpha,
                                    const HPoint& center, double radius_cap,
                                    std::size_t budget, std::uint64_t seed,
                                    unsigned workers = 0);

}  // namespace heiskit
