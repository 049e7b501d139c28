#include "heiskit/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "heiskit/parallel.hpp"
#include "heiskit/rng.hpp"
#include "heiskit/simd.hpp"

namespace heiskit {

namespace {

// Distance matrices are materialized for balls up to this many atoms;
// beyond it triple distances are recomputed on demand.
constexpr std::size_t kDistanceMatrixCap = 2048;

// The exhaustive admissible-count pass is skipped (sampled mode is forced)
// once the unordered-triple universe exceeds this, so a huge ball cannot
// stall in the counting loop before sampling even starts.
constexpr double kCountPassCap = 2147483648.0;

// 4*Area/(a*b*c) with the sorted Heron form: sides ordered a >= b >= c
// keep every factor nonnegative up to rounding, and the smallest factor
// c-(a-b) is clamped at zero so degenerate comparison triangles (additive
// distances) return exactly 0.
double menger_from_sides(double a, double b, double c) {
  if (a < b) std::swap(a, b);
  if (b < c) std::swap(b, c);
  if (a < b) std::swap(a, b);
  const double smallest = c - (a - b);
  if (smallest <= 0.0) return 0.0;
  const double area = 0.25 * std::sqrt((a + (b + c)) * smallest * (c + (a - b)) *
                                       (a + (b - c)));
  return 4.0 * area / (a * b * c);
}

struct BallContext {
  const DiscreteMeasure* m = nullptr;
  double alpha = 0.0;
  std::vector<std::uint32_t> ball;  // atom indices inside B(center, radius_cap)
  std::vector<double> dmat;         // ball-local distances, empty beyond the cap

  double distance(std::size_t i, std::size_t j) const {
    if (!dmat.empty()) return dmat[i * ball.size() + j];
    return dist(m->point(ball[i]), m->point(ball[j]));
  }

  bool admissible(double d12, double d13, double d23) const {
    const double dmin = std::min({d12, d13, d23});
    const double dmax = std::max({d12, d13, d23});
    return dmin >= alpha * dmax;
  }

  double universe() const {
    const double n = static_cast<double>(ball.size());
    return n * (n - 1.0) * (n - 2.0) / 6.0;
  }
};

BallContext make_ball_context(const DiscreteMeasure& m, double alpha,
                              const HPoint& center, double radius_cap,
                              unsigned workers) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("sigma: alpha must lie in (0,1)");
  }
  if (!(radius_cap > 0.0)) throw ValidationError("sigma: radius cap must be positive");
  if (m.size() > 1 && !(m.min_separation() > 0.0)) {
    throw ValidationError("sigma: duplicate atoms");
  }
  if (m.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw BudgetError("sigma: too many atoms for 32-bit triple indices");
  }

  BallContext ctx;
  ctx.m = &m;
  ctx.alpha = alpha;

  std::vector<double> from_center(m.size());
  simd::active_backend().dist_row(center, m.xs(), m.ys(), m.zs(), m.size(),
                                  from_center.data());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (from_center[i] <= radius_cap) ctx.ball.push_back(static_cast<std::uint32_t>(i));
  }

  const std::size_t count = ctx.ball.size();
  if (count >= 2 && count <= kDistanceMatrixCap) {
    ctx.dmat.resize(count * count);
    std::vector<double> bx(count), by(count), bz(count);
    for (std::size_t i = 0; i < count; ++i) {
      const HPoint p = m.point(ctx.ball[i]);
      bx[i] = p.x;
      by[i] = p.y;
      bz[i] = p.z;
    }
    const auto& backend = simd::active_backend();
    parallel_for_chunks(count, workers, 16, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        backend.dist_row({bx[i], by[i], bz[i]}, bx.data(), by.data(), bz.data(), count,
                         ctx.dmat.data() + i * count);
      }
    });
  }
  return ctx;
}

// Exhaustive pass over i<j<k; per-i partials keep the reduction order fixed.
// visit(i, j, k, curvature_squared_energy_term) is called on admissible
// triples only when collect is true.
struct ExhaustiveTotals {
  double count = 0.0;
  double energy = 0.0;
};

ExhaustiveTotals exhaustive_scan(const BallContext& ctx, unsigned workers,
                                 std::vector<std::array<std::uint32_t, 3>>* collect) {
  const std::size_t count = ctx.ball.size();
  ExhaustiveTotals totals;
  if (count < 3) return totals;

  std::vector<double> counts(count, 0.0), energies(count, 0.0);
  std::vector<std::vector<std::array<std::uint32_t, 3>>> kept;
  if (collect != nullptr) kept.resize(count);

  parallel_for_chunks(count, workers, 2, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      double local_count = 0.0;
      double local_energy = 0.0;
      for (std::size_t j = i + 1; j < count; ++j) {
        const double dij = ctx.distance(i, j);
        for (std::size_t k = j + 1; k < count; ++k) {
          const double dik = ctx.distance(i, k);
          const double djk = ctx.distance(j, k);
          if (!ctx.admissible(dij, dik, djk)) continue;
          local_count += 1.0;
          const double curv = menger_from_sides(dij, dik, djk);
          local_energy += ctx.m->weight(ctx.ball[i]) * ctx.m->weight(ctx.ball[j]) *
                          ctx.m->weight(ctx.ball[k]) * curv * curv;
          if (collect != nullptr) {
            kept[i].push_back({ctx.ball[i], ctx.ball[j], ctx.ball[k]});
          }
        }
      }
      counts[i] = local_count;
      energies[i] = local_energy;
    }
  });

  totals.count = compensated_sum(counts.data(), count);
  totals.energy = compensated_sum(energies.data(), count);
  if (collect != nullptr) {
    for (auto& block : kept) {
      collect->insert(collect->end(), block.begin(), block.end());
    }
  }
  return totals;
}

}  // namespace

double menger(const HPoint& p1, const HPoint& p2, const HPoint& p3) {
  const double a = dist(p2, p3);
  const double b = dist(p1, p3);
  const double c = dist(p1, p2);
  if (a == 0.0 || b == 0.0 || c == 0.0) {
    throw ValidationError("menger: coincident points");
  }
  return menger_from_sides(a, b, c);
}

TripleFamily sigma_enumerate(const DiscreteMeasure& m, double alpha,
                             const HPoint& center, double radius_cap,
                             std::size_t budget, std::uint64_t seed,
                             unsigned workers) {
  if (budget == 0) throw ValidationError("sigma_enumerate: zero budget");
  BallContext ctx = make_ball_context(m, alpha, center, radius_cap, workers);

  TripleFamily family;
  family.alpha = alpha;
  family.center = center;
  family.radius_cap = radius_cap;
  family.universe = ctx.universe();

  if (ctx.universe() <= kCountPassCap) {
    const ExhaustiveTotals totals = exhaustive_scan(ctx, workers, nullptr);
    if (totals.count <= static_cast<double>(budget)) {
      family.exhaustive = true;
      family.draws = 0;
      family.triples.reserve(static_cast<std::size_t>(totals.count));
      exhaustive_scan(ctx, workers, &family.triples);
      return family;
    }
  }

  family.exhaustive = false;
  family.draws = budget;
  Rng rng(seed);
  const std::size_t count = ctx.ball.size();
  // Each draw picks an ordered index triple uniformly; a fixed unordered
  // triple is hit with probability 6/count^3 per draw, so the unbiased
  // inclusion weight is (count^3/6)/draws. Repeated draws stay in the list
  // (the estimator needs the multiplicity).
  family.universe = std::pow(static_cast<double>(count), 3) / 6.0;
  for (std::size_t d = 0; d < budget; ++d) {
    std::size_t i = rng.uniform_index(count);
    std::size_t j = rng.uniform_index(count);
    std::size_t k = rng.uniform_index(count);
    if (i == j || i == k || j == k) continue;  // keeps draws uniform over distinct
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    const double dij = ctx.distance(i, j);
    const double dik = ctx.distance(i, k);
    const double djk = ctx.distance(j, k);
    if (!ctx.admissible(dij, dik, djk)) continue;
    family.triples.push_back({ctx.ball[i], ctx.ball[j], ctx.ball[k]});
  }
  return family;
}

CurvatureSumReport curvature_energy(const DiscreteMeasure& m, double alpha,
                                    const HPoint& center, double radius_cap,
                                    std::size_t budget, std::uint64_t seed,
                                    unsigned workers) {
  if (budget == 0) throw ValidationError("curvature_energy: zero budget");
  BallContext ctx = make_ball_context(m, alpha, center, radius_cap, workers);

  CurvatureSumReport report;
  report.radius_cap = radius_cap;
  report.alpha = alpha;
  report.seed = seed;

  if (ctx.universe() <= kCountPassCap) {
    const ExhaustiveTotals totals = exhaustive_scan(ctx, workers, nullptr);
    if (totals.count <= static_cast<double>(budget)) {
      report.exhaustive = true;
      report.energy = totals.energy;
      report.triple_count = static_cast<std::size_t>(totals.count);
      report.standard_error = 0.0;
      return report;
    }
  }

  // Sampled mode: ordered index draws inside the ball; rejected draws
  // (repeated indices, inadmissible windows) count as zero terms. A fixed
  // unordered triple is hit with probability 6/count^3 per draw, so
  // (count^3/6) * mean(term) is exactly unbiased.
  report.exhaustive = false;
  Rng rng(seed);
  const std::size_t count = ctx.ball.size();
  const double universe = std::pow(static_cast<double>(count), 3) / 6.0;
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t admissible = 0;
  for (std::size_t d = 0; d < budget; ++d) {
    std::size_t i = rng.uniform_index(count);
    std::size_t j = rng.uniform_index(count);
    std::size_t k = rng.uniform_index(count);
    if (i == j || i == k || j == k) continue;
    const double dij = ctx.distance(i, j);
    const double dik = ctx.distance(i, k);
    const double djk = ctx.distance(j, k);
    if (!ctx.admissible(dij, dik, djk)) continue;
    ++admissible;
    const double curv = menger_from_sides(dij, dik, djk);
    const double term = ctx.m->weight(ctx.ball[i]) * ctx.m->weight(ctx.ball[j]) *
                        ctx.m->weight(ctx.ball[k]) * curv * curv;
    sum += term;
    sum_sq += term * term;
  }
  const double draws = static_cast<double>(budget);
  const double mean = sum / draws;
  report.energy = universe * mean;
  report.triple_count = admissible;
  const double variance = std::max(0.0, sum_sq / draws - mean * mean);
  report.standard_error = universe * std::sqrt(variance / draws);
  return report;
}

}  // namespace heiskit
