#include "heiskit/sio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "heiskit/io.hpp"
#include "heiskit/lifts.hpp"
#include "heiskit/parallel.hpp"
#include "heiskit/rng.hpp"
#include "heiskit/simd.hpp"

namespace heiskit {

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on the
// Legendre recurrence.
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(order), 0.0);
  weights.assign(static_cast<std::size_t>(order), 0.0);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      derivative = order * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / derivative;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(order - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(order - 1 - i)] = w;
  }
}

void require_distinct_atoms(const DiscreteMeasure& m) {
  if (m.size() > 1 && !(m.min_separation() > 0.0)) {
    throw ValidationError("duplicate atoms: kernel entries would be singular");
  }
}

// Stage-(n+2) segment ranges of the digit-1 and digit-4 blocks inside the
// 216-segment refinement of the shared stage-(n-1) parent.
constexpr std::size_t kBlockSegments = 36;
constexpr std::size_t kBlockOneFirstSegment = 0;
constexpr std::size_t kBlockFourFirstSegment = 108;

}  // namespace

KernelMatrix::KernelMatrix(const KernelSpec& kernel, const DiscreteMeasure& m,
                           double epsilon, std::size_t entry_budget, unsigned workers)
    : n_(m.size()), epsilon_(epsilon), kernel_(kernel) {
  if (!(epsilon >= 0.0)) throw ValidationError("KernelMatrix: epsilon must be >= 0");
  require_distinct_atoms(m);
  if (n_ > entry_budget / n_) throw BudgetError("KernelMatrix: entry budget exceeded");
  a_.resize(n_ * n_);

  const simd::RowKernel row_kernel = simd::RowKernel::lower(kernel);
  const auto& backend = simd::active_backend();
  parallel_for_chunks(n_, workers, 8, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      double* row = a_.data() + i * n_;
      backend.kernel_row(row_kernel, m.point(i), m.xs(), m.ys(), m.zs(), n_, epsilon_,
                         row);
      for (std::size_t j = 0; j < n_; ++j) row[j] *= m.weight(j);
    }
  });
}

QuadFormResult quadratic_form(const KernelSpec& kernel, const DiscreteMeasure& m,
                              double epsilon, unsigned workers) {
  if (!(epsilon >= 0.0)) throw ValidationError("quadratic_form: epsilon must be >= 0");
  require_distinct_atoms(m);

  const std::size_t n = m.size();
  const simd::RowKernel row_kernel = simd::RowKernel::lower(kernel);
  const auto& backend = simd::active_backend();
  std::vector<double> terms(n);
  parallel_for_chunks(n, workers, 8, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double row = backend.weighted_kernel_row_sum(
          row_kernel, m.point(i), m.xs(), m.ys(), m.zs(), m.ws(), n, epsilon);
      terms[i] = m.weight(i) * row;
    }
  });

  QuadFormResult result;
  result.value = compensated_sum(terms.data(), n);
  result.epsilon = epsilon;
  result.kernel = kernel.name();
  result.point_count = n;
  result.measure = "atoms=" + std::to_string(n) + ";mass=" + format_double(m.total_mass());
  return result;
}

double row_sup(const KernelSpec& kernel, const DiscreteMeasure& m, double epsilon,
               unsigned workers) {
  if (!(epsilon >= 0.0)) throw ValidationError("row_sup: epsilon must be >= 0");
  require_distinct_atoms(m);

  const std::size_t n = m.size();
  const simd::RowKernel row_kernel = simd::RowKernel::lower(kernel);
  const auto& backend = simd::active_backend();
  std::vector<double> rows(n);
  parallel_for_chunks(n, workers, 8, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      rows[i] = backend.weighted_kernel_row_sum(row_kernel, m.point(i), m.xs(), m.ys(),
                                                m.zs(), m.ws(), n, epsilon);
    }
  });
  return *std::max_element(rows.begin(), rows.end());
}

double l2_norm_estimate(const KernelMatrix& a, const std::vector<double>& weights,
                        double tolerance, int max_iterations, std::uint64_t seed) {
  const std::size_t n = a.size();
  if (weights.size() != n) throw ValidationError("l2_norm_estimate: weight length mismatch");
  if (!(tolerance > 0.0)) throw ValidationError("l2_norm_estimate: tolerance must be positive");
  if (max_iterations < 2) throw ValidationError("l2_norm_estimate: need at least two iterations");

  std::vector<double> sqrt_w(n), inv_sqrt_w(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(weights[i] > 0.0)) throw ValidationError("l2_norm_estimate: weights must be positive");
    sqrt_w[i] = std::sqrt(weights[i]);
    inv_sqrt_w[i] = 1.0 / sqrt_w[i];
  }

  // Symmetrized operator B[i][j] = A[i][j] sqrt(w_i / w_j); power iteration
  // runs on B + shift*I so the dominant eigenvalue is unique even when the
  // spectrum of B is symmetric about zero.
  auto apply_b = [&](const std::vector<double>& v, std::vector<double>& out) {
    for (std::size_t i = 0; i < n; ++i) {
      const double* row = a.row(i);
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += row[j] * v[j] * inv_sqrt_w[j];
      out[i] = acc * sqrt_w[i];
    }
  };

  double shift = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * inv_sqrt_w[j];
    shift = std::max(shift, acc * sqrt_w[i]);
  }

  Rng rng(seed);
  std::vector<double> v(n), bv(n);
  for (double& vi : v) vi = rng.uniform(0.5, 1.5);
  double vnorm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
  for (double& vi : v) vi /= vnorm;

  double previous = std::numeric_limits<double>::quiet_NaN();
  for (int iter = 0; iter < max_iterations; ++iter) {
    apply_b(v, bv);
    for (std::size_t i = 0; i < n; ++i) bv[i] += shift * v[i];
    const double rayleigh = std::inner_product(v.begin(), v.end(), bv.begin(), 0.0);
    const double estimate = rayleigh - shift;
    if (iter > 0) {
      const double scale = std::max(std::fabs(rayleigh), 1e-300);
      if (std::fabs(rayleigh - previous) < tolerance * scale) return estimate;
    }
    previous = rayleigh;

    const double ynorm = std::sqrt(std::inner_product(bv.begin(), bv.end(), bv.begin(), 0.0));
    if (ynorm == 0.0) return 0.0;
    for (std::size_t i = 0; i < n; ++i) v[i] = bv[i] / ynorm;
  }
  throw ConvergenceError("l2_norm_estimate: power iteration did not converge",
                         previous - shift);
}

L1ScanResult l1_divergence_scan(double s, int n_lo, int n_hi, int quadrature_points) {
  if (!(s > 0.0)) throw ValidationError("l1_divergence_scan: s must be positive");
  if (n_lo < 0 || n_hi < n_lo) throw ValidationError("l1_divergence_scan: bad interval range");
  if (quadrature_points < 16) {
    throw ValidationError("l1_divergence_scan: need at least 16 quadrature points");
  }
  log_curve_interval(n_hi);  // validates the overflow range

  constexpr int kOrder = 16;
  std::vector<double> nodes, weights;
  gauss_legendre(kOrder, nodes, weights);
  const int panels = std::max(1, quadrature_points / kOrder);

  const KernelSpec k4 = KernelSpec::alpha(4.0);
  const HPoint pole = log_curve_point(s);
  const HPoint pole_inv = inverse(pole);

  L1ScanResult result;
  double running = 0.0;
  double comp = 0.0;
  for (int n = n_lo; n <= n_hi; ++n) {
    const Interval interval = log_curve_interval(n);
    const double panel_width = interval.length() / panels;
    double integral = 0.0;
    for (int panel = 0; panel < panels; ++panel) {
      const double lo = interval.lo + panel * panel_width;
      const double half = 0.5 * panel_width;
      const double mid = lo + half;
      for (int q = 0; q < kOrder; ++q) {
        const double t = mid + half * nodes[static_cast<std::size_t>(q)];
        const HPoint chord = group_mul(pole_inv, log_curve_point(t));
        integral += weights[static_cast<std::size_t>(q)] * half *
                    kernel_eval_scaled(k4, chord);
      }
    }
    result.n.push_back(n);
    result.integral.push_back(integral);
    const double t = running + integral;
    comp += (std::fabs(running) >= std::fabs(integral)) ? (running - t) + integral
                                                        : (integral - t) + running;
    running = t;
    result.partial_sum.push_back(running + comp);
  }
  return result;
}

StagewiseResult koch_stagewise_form(const AngleSchedule& schedule, double alpha,
                                    int first_stage, int last_stage,
                                    std::size_t pair_samples, std::uint64_t seed,
                                    const Vec2& j0_begin, const Vec2& j0_end) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("koch_stagewise_form: alpha must lie in (0,1)");
  }
  if (!schedule.satisfies_angle_condition()) {
    throw ValidationError("koch_stagewise_form: schedule violates the angle condition");
  }
  if (first_stage < 1 || last_stage < first_stage) {
    throw ValidationError("koch_stagewise_form: bad stage range");
  }
  if (pair_samples == 0) throw ValidationError("koch_stagewise_form: no samples");
  if (j0_begin == j0_end) throw ValidationError("koch_stagewise_form: degenerate j0");

  const KernelSpec kernel = KernelSpec::alpha(2.0 * alpha);
  const simd::RowKernel row_kernel = simd::RowKernel::lower(kernel);
  const auto& backend = simd::active_backend();
  const double r0 = std::hypot(j0_end.x - j0_begin.x, j0_end.y - j0_begin.y);
  constexpr std::size_t kPairsPerPrefix = kBlockSegments * kBlockSegments;

  Rng rng(seed);
  StagewiseResult result;
  double running = 0.0;
  double comp = 0.0;
  for (int n = first_stage; n <= last_stage; ++n) {
    const double thetas[3] = {schedule.theta(n), schedule.theta(n + 1),
                              schedule.theta(n + 2)};
    const double r_m = segment_length(n + 2, schedule, r0);
    const double prefix_total = std::pow(6.0, n - 1);
    const bool exhaustive = static_cast<double>(pair_samples) >=
                            prefix_total * static_cast<double>(kPairsPerPrefix);
    const std::size_t prefixes =
        exhaustive
            ? static_cast<std::size_t>(prefix_total)
            : std::min<std::size_t>(
                  static_cast<std::size_t>(prefix_total),
                  std::max<std::size_t>(1, (pair_samples + kPairsPerPrefix - 1) /
                                               kPairsPerPrefix));

    std::vector<double> qx(kBlockSegments), qy(kBlockSegments), qz(kBlockSegments);
    std::vector<double> qw(kBlockSegments, r_m);
    std::vector<std::uint8_t> prefix(static_cast<std::size_t>(n - 1), 1);
    double total = 0.0;
    for (std::size_t pi = 0; pi < prefixes; ++pi) {
      if (!exhaustive) {
        for (auto& d : prefix) d = static_cast<std::uint8_t>(1 + rng.uniform_index(6));
      }
      const auto [a, b] = locate_segment(Word(prefix), schedule, j0_begin, j0_end);
      const std::vector<Vec2> local = refine_segment(a, b, thetas);
      const LiftedPolyline lifted = horizontal_lift(local, 0.0);

      // Midpoint atoms of the stage-(n+2) segments in the digit-4 block.
      for (std::size_t j = 0; j < kBlockSegments; ++j) {
        const HPoint& lo = lifted.vertices[kBlockFourFirstSegment + j];
        const HPoint& hi = lifted.vertices[kBlockFourFirstSegment + j + 1];
        qx[j] = 0.5 * (lo.x + hi.x);
        qy[j] = 0.5 * (lo.y + hi.y);
        qz[j] = 0.5 * (lo.z + hi.z);
      }

      double inner = 0.0;
      for (std::size_t i = 0; i < kBlockSegments; ++i) {
        const HPoint& lo = lifted.vertices[kBlockOneFirstSegment + i];
        const HPoint& hi = lifted.vertices[kBlockOneFirstSegment + i + 1];
        const HPoint p{0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y), 0.5 * (lo.z + hi.z)};
        inner += r_m * backend.weighted_kernel_row_sum(row_kernel, p, qx.data(),
                                                       qy.data(), qz.data(), qw.data(),
                                                       kBlockSegments, 0.0);
      }

      total += inner;
      if (exhaustive) {
        for (std::size_t k = prefix.size(); k-- > 0;) {
          if (prefix[k] < 6) {
            ++prefix[k];
            break;
          }
          prefix[k] = 1;
        }
      }
    }

    const double contribution =
        total * (prefix_total / static_cast<double>(prefixes));
    result.stage.push_back(n);
    result.contribution.push_back(contribution);
    result.comparator.push_back(std::pow(thetas[0], alpha));
    result.exhaustive.push_back(exhaustive);
    const double t = running + contribution;
    comp += (std::fabs(running) >= std::fabs(contribution))
                ? (running - t) + contribution
                : (contribution - t) + running;
    running = t;
    result.partial_sum.push_back(running + comp);
  }
  return result;
}

}  // namespace heiskit
