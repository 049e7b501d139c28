#include "heiskit/lifts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "heiskit/io.hpp"
#include "heiskit/rng.hpp"

namespace heiskit {

namespace {

// Largest n with e^{2 pi n + 3 pi/4} finite in double precision.
constexpr int kMaxLogCurveInterval = 112;

// Stage-(n+2) vertex ranges of the digit-1 and digit-4 blocks inside the local
// 216-segment refinement of the parent: block with digit 1 covers segments
// [0,36), block with digit 4 covers [108,144).
constexpr std::size_t kBlockOneFirstVertex = 0;
constexpr std::size_t kBlockOneLastVertex = 36;
constexpr std::size_t kBlockFourFirstVertex = 108;
constexpr std::size_t kBlockFourLastVertex = 144;
constexpr std::size_t kPairsPerPrefix =
    (kBlockOneLastVertex - kBlockOneFirstVertex + 1) *
    (kBlockFourLastVertex - kBlockFourFirstVertex + 1);

}  // namespace

Word LiftedPolyline::segment_word(std::size_t segment_index) const {
  if (stage < 0) throw ValidationError("LiftedPolyline: no word addressing (not a stage lift)");
  return Word::of_segment_index(segment_index, stage);
}

LiftedPolyline horizontal_lift(std::span<const Vec2> polyline, double z0) {
  if (polyline.size() < 2) throw ValidationError("horizontal_lift: need at least two points");
  LiftedPolyline out;
  out.vertices.reserve(polyline.size());
  double z = z0;
  out.vertices.push_back({polyline[0].x, polyline[0].y, z});
  for (std::size_t k = 0; k + 1 < polyline.size(); ++k) {
    z += 0.5 * (polyline[k].x * polyline[k + 1].y - polyline[k].y * polyline[k + 1].x);
    out.vertices.push_back({polyline[k + 1].x, polyline[k + 1].y, z});
  }
  return out;
}

LiftedPolyline lift_stage(const PolygonStage& stage, double z0) {
  LiftedPolyline out = horizontal_lift(stage.vertices, z0);
  out.stage = stage.stage;
  return out;
}

HPoint log_curve_point(double t) {
  if (!(t > 0.0)) throw ValidationError("log_curve_point: t must be positive");
  const double u = std::log(t);
  return {t, t * std::sin(u), t * t * (2.0 * std::cos(u) + std::sin(u)) / 10.0};
}

Interval log_curve_interval(int n) {
  if (n < 0 || n > kMaxLogCurveInterval) {
    throw ValidationError("log_curve_interval: n outside double-precision reach");
  }
  const double base = 2.0 * M_PI * n;
  return {std::exp(base + M_PI / 2.0), std::exp(base + 0.75 * M_PI)};
}

double chord_vertical(const HPoint& p, const HPoint& q) {
  return (q.z - p.z) + 0.5 * (p.y * q.x - p.x * q.y);
}

CantorLift cantor_build(int depth, std::size_t budget) {
  if (depth < 0) throw ValidationError("cantor_build: negative depth");
  if (depth >= 63 || (std::size_t{1} << depth) > budget) {
    throw BudgetError("cantor_build: 2^depth exceeds budget");
  }
  const std::size_t count = std::size_t{1} << depth;
  const double interval = std::pow(0.25, depth);

  CantorLift c;
  c.depth = depth;
  c.representatives.resize(count);
  c.weights.assign(count, std::pow(0.5, depth));
  for (std::size_t i = 0; i < count; ++i) {
    // Bit b_j of i (MSB = level 1) selects the last quarter at level j.
    double left = 0.0;
    double scale = 1.0;
    for (int j = depth - 1; j >= 0; --j) {
      scale *= 0.25;
      if ((i >> j) & 1u) left += 3.0 * scale;
    }
    c.representatives[i] = left + 0.5 * interval;
  }
  return c;
}

std::vector<std::pair<HPoint, double>> cantor_points(const CantorLift& c) {
  std::vector<std::pair<HPoint, double>> out;
  out.reserve(c.representatives.size());
  for (std::size_t i = 0; i < c.representatives.size(); ++i) {
    const double t = c.representatives[i];
    out.push_back({HPoint{t, 0.0, t}, c.weights[i]});
  }
  return out;
}

Lemma54Report lemma54_scan(const AngleSchedule& schedule, int n, std::size_t samples,
                           std::uint64_t seed, const Vec2& j0_begin,
                           const Vec2& j0_end) {
  if (n < 1) throw ValidationError("lemma54_scan: stage must be >= 1");
  if (samples == 0) throw ValidationError("lemma54_scan: no samples");
  if (j0_begin == j0_end) throw ValidationError("lemma54_scan: degenerate j0");

  const double r0 = std::hypot(j0_end.x - j0_begin.x, j0_end.y - j0_begin.y);
  const double r_n = segment_length(n, schedule, r0);
  const double theta_n = schedule.theta(n);
  const double thetas[3] = {theta_n, schedule.theta(n + 1), schedule.theta(n + 2)};
  const double denom = r_n * r_n * theta_n;

  // Exhaustive when the sample budget covers every (prefix, vertex pair).
  const double prefix_count = std::pow(6.0, n - 1);
  const bool exhaustive =
      static_cast<double>(samples) >= prefix_count * static_cast<double>(kPairsPerPrefix);
  const std::size_t prefixes =
      exhaustive ? static_cast<std::size_t>(prefix_count)
                 : std::max<std::size_t>(1, (samples + kPairsPerPrefix - 1) / kPairsPerPrefix);

  Rng rng(seed);
  Lemma54Report report;
  report.stage = n;
  report.r_n = r_n;
  report.theta_n = theta_n;
  report.exhaustive = exhaustive;
  report.min_ratio = std::numeric_limits<double>::infinity();

  std::vector<std::uint8_t> prefix(static_cast<std::size_t>(n - 1), 1);
  for (std::size_t pi = 0; pi < prefixes; ++pi) {
    if (!exhaustive) {
      for (auto& d : prefix) d = static_cast<std::uint8_t>(1 + rng.uniform_index(6));
    }
    const auto [a, b] = locate_segment(Word(prefix), schedule, j0_begin, j0_end);
    const std::vector<Vec2> local = refine_segment(a, b, thetas);
    const LiftedPolyline lifted = horizontal_lift(local, 0.0);

    for (std::size_t ip = kBlockOneFirstVertex; ip <= kBlockOneLastVertex; ++ip) {
      for (std::size_t iq = kBlockFourFirstVertex; iq <= kBlockFourLastVertex; ++iq) {
        const double area =
            std::fabs(chord_vertical(lifted.vertices[ip], lifted.vertices[iq]));
        report.min_ratio = std::min(report.min_ratio, area / denom);
        ++report.pair_count;
      }
    }

    if (exhaustive) {
      // Odometer step to the next prefix, least significant digit last.
      for (std::size_t k = prefix.size(); k-- > 0;) {
        if (prefix[k] < 6) {
          ++prefix[k];
          break;
        }
        prefix[k] = 1;
      }
    }
  }
  return report;
}

void write_lifted_points(std::ostream& os, std::span<const LiftedPointRecord> records) {
  os << "index,x,y,z,weight,word\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const LiftedPointRecord& r = records[i];
    os << i << ',' << format_double(r.p.x) << ',' << format_double(r.p.y) << ','
       << format_double(r.p.z) << ',' << format_double(r.weight) << ',' << r.word
       << '\n';
  }
}

}  // namespace heiskit
