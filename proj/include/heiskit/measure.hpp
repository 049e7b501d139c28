#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "heiskit/heis.hpp"
#include "heiskit/lifts.hpp"

namespace heiskit {

// Finite weighted point cloud in the group: the discrete surrogate for H^1
// restricted to a set. Stored as structure-of-arrays for the row backends.
// Construction scans all pairs once to cache the diameter, the minimum
// separation and the coarsest nearest-neighbor gap.
class DiscreteMeasure {
 public:
  DiscreteMeasure(std::vector<HPoint> points, std::vector<double> weights,
                  unsigned workers = 0);

  std::size_t size() const { return x_.size(); }
  HPoint point(std::size_t i) const { return {x_[i], y_[i], z_[i]}; }
  double weight(std::size_t i) const { return w_[i]; }

  const double* xs() const { return x_.data(); }
  const double* ys() const { return y_.data(); }
  const double* zs() const { return z_.data(); }
  const double* ws() const { return w_.data(); }

  double total_mass() const { return mass_; }
  // Max pairwise distance; verified against the atoms at construction.
  double diameter() const { return diameter_; }
  // Min pairwise distance; zero means duplicate atoms.
  double min_separation() const { return min_separation_; }
  // Max over atoms of the distance to the nearest other atom; the
  // discretization scale below which ball counts are meaningless.
  double max_nearest_gap() const { return max_nearest_gap_; }

  DiscreteMeasure left_translate(const HPoint& g) const;
  DiscreteMeasure scale_weights(double factor) const;

 private:
  std::vector<double> x_, y_, z_, w_;
  double mass_ = 0.0;
  double diameter_ = 0.0;
  double min_separation_ = 0.0;
  double max_nearest_gap_ = 0.0;
};

// Atoms at the parameter midpoints of `subdivisions` equal pieces per
// segment; each weight is the Koranyi chord length of its piece. On straight
// segments the lifted sub-chords are horizontal, so the total mass equals
// the planar length exactly.
DiscreteMeasure measure_from_polyline(const LiftedPolyline& polyline,
                                      int subdivisions_per_segment,
                                      unsigned workers = 0);

// Wraps cantor_points; total mass exactly 1.
DiscreteMeasure measure_from_cantor(const CantorLift& cantor, unsigned workers = 0);

struct RegularityRecord {
  std::size_t center_index = 0;
  double radius = 0.0;
  double ratio = 0.0;  // mu(B(center, radius)) / radius
};

struct RegularityReport {
  std::vector<RegularityRecord> records;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

// Ball-mass ratios mu(B(p,r))/r over sampled atom centers (all atoms when
// center_samples >= size) and the given radii. Balls are closed. Radii must
// lie in [min_radius_floor, diameter] and the floor must be at least four
// nearest-neighbor gaps, below which discreteness dominates.
RegularityReport ahlfors_check(const DiscreteMeasure& m, std::size_t center_samples,
                               const std::vector<double>& radii,
                               double min_radius_floor, std::uint64_t seed,
                               unsigned workers = 0);

// Delimited export: center index, radius, ratio.
void write_regularity_report(std::ostream& os, const RegularityReport& report);

}  // namespace heiskit
