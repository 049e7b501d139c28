#include "heiskit/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <vector>

#include "heiskit/io.hpp"
#include "heiskit/parallel.hpp"
#include "heiskit/rng.hpp"
#include "heiskit/simd.hpp"

namespace heiskit {

DiscreteMeasure::DiscreteMeasure(std::vector<HPoint> points, std::vector<double> weights,
                                 unsigned workers) {
  if (points.empty()) throw ValidationError("DiscreteMeasure: no atoms");
  if (points.size() != weights.size()) {
    throw ValidationError("DiscreteMeasure: points/weights length mismatch");
  }
  const std::size_t n = points.size();
  x_.resize(n);
  y_.resize(n);
  z_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const HPoint& p = points[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw ValidationError("DiscreteMeasure: non-finite coordinate");
    }
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
      throw ValidationError("DiscreteMeasure: weights must be positive and finite");
    }
    x_[i] = p.x;
    y_[i] = p.y;
    z_[i] = p.z;
  }
  w_ = std::move(weights);
  mass_ = compensated_sum(w_.data(), n);

  if (n == 1) {
    diameter_ = 0.0;
    min_separation_ = std::numeric_limits<double>::infinity();
    max_nearest_gap_ = 0.0;
    return;
  }

  // One full pairwise pass caches diameter, minimum separation and the
  // coarsest nearest-neighbor gap. Row extremes land in per-row slots, so
  // the merge is worker-count independent.
  std::vector<double> row_max(n), row_nearest(n);
  const auto& backend = simd::active_backend();
  parallel_for_chunks(n, workers, 8, [&](std::size_t begin, std::size_t end) {
    std::vector<double> buf(n);
    for (std::size_t i = begin; i < end; ++i) {
      backend.dist_row({x_[i], y_[i], z_[i]}, x_.data(), y_.data(), z_.data(), n,
                       buf.data());
      double dmax = 0.0;
      double dmin = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        dmax = std::max(dmax, buf[j]);
        dmin = std::min(dmin, buf[j]);
      }
      row_max[i] = dmax;
      row_nearest[i] = dmin;
    }
  });
  diameter_ = *std::max_element(row_max.begin(), row_max.end());
  min_separation_ = *std::min_element(row_nearest.begin(), row_nearest.end());
  max_nearest_gap_ = *std::max_element(row_nearest.begin(), row_nearest.end());
}

DiscreteMeasure DiscreteMeasure::left_translate(const HPoint& g) const {
  std::vector<HPoint> pts(size());
  for (std::size_t i = 0; i < size(); ++i) pts[i] = group_mul(g, point(i));
  return DiscreteMeasure(std::move(pts), w_);
}

DiscreteMeasure DiscreteMeasure::scale_weights(double factor) const {
  if (!(factor > 0.0)) throw ValidationError("scale_weights: factor must be positive");
  std::vector<HPoint> pts(size());
  std::vector<double> w(size());
  for (std::size_t i = 0; i < size(); ++i) {
    pts[i] = point(i);
    w[i] = w_[i] * factor;
  }
  return DiscreteMeasure(std::move(pts), std::move(w));
}

DiscreteMeasure measure_from_polyline(const LiftedPolyline& polyline,
                                      int subdivisions_per_segment, unsigned workers) {
  if (polyline.vertices.size() < 2) throw ValidationError("measure_from_polyline: empty polyline");
  if (subdivisions_per_segment < 1) {
    throw ValidationError("measure_from_polyline: need at least one subdivision");
  }

  const std::size_t segments = polyline.segment_count();
  const std::size_t m = static_cast<std::size_t>(subdivisions_per_segment);
  std::vector<HPoint> atoms;
  std::vector<double> weights;
  atoms.reserve(segments * m);
  weights.reserve(segments * m);

  // The lift of a straight planar segment is linear in the parameter, so
  // sub-piece endpoints interpolate all three coordinates.
  auto at = [](const HPoint& a, const HPoint& b, double t) -> HPoint {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), a.z + t * (b.z - a.z)};
  };

  for (std::size_t s = 0; s < segments; ++s) {
    const HPoint& a = polyline.vertices[s];
    const HPoint& b = polyline.vertices[s + 1];
    for (std::size_t piece = 0; piece < m; ++piece) {
      const double t0 = static_cast<double>(piece) / static_cast<double>(m);
      const double t1 = static_cast<double>(piece + 1) / static_cast<double>(m);
      const HPoint lo = at(a, b, t0);
      const HPoint hi = at(a, b, t1);
      atoms.push_back(at(a, b, 0.5 * (t0 + t1)));
      weights.push_back(dist(hi, lo));
    }
  }
  return DiscreteMeasure(std::move(atoms), std::move(weights), workers);
}

DiscreteMeasure measure_from_cantor(const CantorLift& cantor, unsigned workers) {
  const auto pts = cantor_points(cantor);
  std::vector<HPoint> atoms;
  std::vector<double> weights;
  atoms.reserve(pts.size());
  weights.reserve(pts.size());
  for (const auto& [p, w] : pts) {
    atoms.push_back(p);
    weights.push_back(w);
  }
  return DiscreteMeasure(std::move(atoms), std::move(weights), workers);
}

RegularityReport ahlfors_check(const DiscreteMeasure& m, std::size_t center_samples,
                               const std::vector<double>& radii,
                               double min_radius_floor, std::uint64_t seed,
                               unsigned workers) {
  if (center_samples == 0) throw ValidationError("ahlfors_check: no centers");
  if (radii.empty()) throw ValidationError("ahlfors_check: no radii");
  if (!(min_radius_floor >= 4.0 * m.max_nearest_gap())) {
    throw ValidationError(
        "ahlfors_check: radius floor below 4x the nearest-neighbor gap");
  }
  for (double r : radii) {
    if (!(r > 0.0) || !(r >= min_radius_floor) || !(r <= m.diameter())) {
      throw ValidationError("ahlfors_check: radius outside [floor, diameter]");
    }
  }

  const std::size_t n = m.size();
  std::vector<std::size_t> centers;
  if (center_samples >= n) {
    centers.resize(n);
    std::iota(centers.begin(), centers.end(), std::size_t{0});
  } else {
    // Partial Fisher-Yates draw of distinct atom indices.
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    Rng rng(seed);
    for (std::size_t i = 0; i < center_samples; ++i) {
      const std::size_t j = i + rng.uniform_index(n - i);
      std::swap(pool[i], pool[j]);
    }
    centers.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(center_samples));
  }

  RegularityReport report;
  report.records.resize(centers.size() * radii.size());
  const auto& backend = simd::active_backend();
  parallel_for_chunks(centers.size(), workers, 4, [&](std::size_t begin, std::size_t end) {
    std::vector<double> buf(n);
    for (std::size_t c = begin; c < end; ++c) {
      const std::size_t idx = centers[c];
      backend.dist_row(m.point(idx), m.xs(), m.ys(), m.zs(), n, buf.data());
      for (std::size_t r = 0; r < radii.size(); ++r) {
        double mass = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          if (buf[j] <= radii[r]) mass += m.weight(j);
        }
        report.records[c * radii.size() + r] = {idx, radii[r], mass / radii[r]};
      }
    }
  });

  report.min_ratio = std::numeric_limits<double>::infinity();
  report.max_ratio = 0.0;
  for (const RegularityRecord& rec : report.records) {
    report.min_ratio = std::min(report.min_ratio, rec.ratio);
    report.max_ratio = std::max(report.max_ratio, rec.ratio);
  }
  return report;
}

void write_regularity_report(std::ostream& os, const RegularityReport& report) {
  os << "center_index,radius,ratio\n";
  for (const RegularityRecord& rec : report.records) {
    os << rec.center_index << ',' << format_double(rec.radius) << ','
       << format_double(rec.ratio) << '\n';
  }
}

}  // namespace heiskit
