#include "heiskit/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "heiskit/io.hpp"
#include "heiskit/rng.hpp"

namespace heiskit {

namespace {

constexpr std::size_t kMaxViolationRecords = 100;

// Random point with coordinates uniform in [-10,10]^3.
HPoint random_point(Rng& rng) {
  return {rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0),
          rng.uniform(-10.0, 10.0)};
}

// Random point spread across Koranyi scales [1e-3, 1e3]: box sample
// normalized to gauge 1, then dilated by a log-uniform radius.
HPoint random_point_scaled(Rng& rng) {
  HPoint u = random_point(rng);
  double norm = koranyi_norm(u);
  while (norm == 0.0) {
    u = random_point(rng);
    norm = koranyi_norm(u);
  }
  const HPoint unit = dilate(1.0 / norm, u);
  const double t = std::exp(rng.uniform(std::log(1e-3), std::log(1e3)));
  return dilate(t, unit);
}

}  // namespace

KernelSpec KernelSpec::alpha(double a) {
  if (!(a > 0.0)) throw ValidationError("KernelSpec::alpha: exponent must be positive");
  return KernelSpec(Family::kAlpha, a);
}

std::string KernelSpec::name() const {
  if (family_ == Family::kB) return "b";
  return "alpha(" + format_double(alpha_) + ")";
}

double kernel_eval(const KernelSpec& k, const HPoint& p) {
  const double n4 = koranyi_norm4(p);
  if (n4 == 0.0) {
    throw SingularityError("kernel_eval: evaluation at the group identity");
  }
  if (k.family() == KernelSpec::Family::kB) {
    return std::fabs(p.x) / std::sqrt(n4);
  }
  const double a = k.alpha_value();
  if (a == 4.0) return (p.z * p.z) / (n4 * std::sqrt(std::sqrt(n4)));
  if (a == 2.0) return std::fabs(p.z) * std::sqrt(std::sqrt(n4)) / n4;
  if (a == 1.0) return std::sqrt(std::fabs(p.z)) / std::sqrt(n4);
  return std::pow(std::fabs(p.z), 0.5 * a) / std::pow(n4, 0.25 * (a + 1.0));
}

double kernel_pair(const KernelSpec& k, const HPoint& p, const HPoint& q) {
  return kernel_eval(k, group_mul(inverse(p), q));
}

double kernel_eval_scaled(const KernelSpec& k, const HPoint& p) {
  const double mag =
      std::max({std::fabs(p.x), std::fabs(p.y), std::sqrt(std::fabs(p.z))});
  // |p|^4 stays below ~1e256 for mag <= 1e60; the plain formula is exact
  // there and the rescale only engages beyond it (and for tiny chords).
  if (mag < 1e60 && mag > 1e-60) return kernel_eval(k, p);
  if (mag == 0.0) {
    throw SingularityError("kernel_eval_scaled: evaluation at the group identity");
  }
  return kernel_eval(k, dilate(1.0 / mag, p)) / mag;
}

CZParams::CZParams(double kappa_, double beta_, double c_k_)
    : kappa(kappa_), beta(beta_), c_k(c_k_) {
  if (!(kappa > 0.0 && kappa < 1.0)) throw ValidationError("CZParams: kappa not in (0,1)");
  if (!(beta > 0.0 && beta <= 1.0)) throw ValidationError("CZParams: beta not in (0,1]");
  if (!(c_k > 0.0) || !std::isfinite(c_k)) {
    throw ValidationError("CZParams: c_k must be positive and finite");
  }
}

double check_homogeneity_fn(const std::function<double(const HPoint&)>& k,
                            std::size_t samples, double scale_lo,
                            double scale_hi, std::uint64_t seed) {
  if (samples == 0) throw ValidationError("check_homogeneity: no samples");
  if (!(scale_lo > 0.0 && scale_hi >= scale_lo)) {
    throw ValidationError("check_homogeneity: bad scale range");
  }
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const HPoint p = random_point(rng);
    const double t = std::exp(rng.uniform(std::log(scale_lo), std::log(scale_hi)));
    const double base = k(p);
    if (!(base > 0.0)) continue;
    const double scaled = t * k(dilate(t, p));
    worst = std::max(worst, std::fabs(scaled - base) / base);
  }
  return worst;
}

double check_homogeneity(const KernelSpec& k, std::size_t samples, double scale_lo,
                         double scale_hi, std::uint64_t seed) {
  return check_homogeneity_fn(
      [&k](const HPoint& p) { return kernel_eval(k, p); }, samples, scale_lo,
      scale_hi, seed);
}

AuditReport check_growth(const KernelSpec& k, const CZParams& params,
                         std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw ValidationError("check_growth: no samples");
  Rng rng(seed);
  AuditReport report;
  report.check = "growth";
  report.samples = samples;
  report.bound = params.c_k;
  for (std::size_t i = 0; i < samples; ++i) {
    const HPoint p = random_point_scaled(rng);
    const double measured = kernel_eval(k, p) * koranyi_norm(p);
    report.max_measured = std::max(report.max_measured, measured);
    if (measured > params.c_k && report.violations.size() < kMaxViolationRecords) {
      report.violations.push_back({p, p, measured, params.c_k});
    }
  }
  return report;
}

AuditReport check_hoelder(const KernelSpec& k, const CZParams& params,
                          std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw ValidationError("check_hoelder: no samples");
  Rng rng(seed);
  AuditReport report;
  report.check = "hoelder";
  report.samples = samples;
  report.bound = params.c_k;
  for (std::size_t i = 0; i < samples; ++i) {
    const HPoint p1 = random_point_scaled(rng);
    const double norm1 = koranyi_norm(p1);

    // p2 = p1 * delta with |delta| <= kappa*|p1|, so d(p1,p2) = |delta|.
    HPoint dir = random_point(rng);
    double dn = koranyi_norm(dir);
    while (dn == 0.0) {
      dir = random_point(rng);
      dn = koranyi_norm(dir);
    }
    const double radius = rng.uniform01() * params.kappa * norm1;
    if (radius == 0.0) continue;  // p1 == p2, ratio defined as 0
    const HPoint delta = dilate(radius / dn, dir);
    const HPoint p2 = group_mul(p1, delta);

    const double separation = koranyi_norm(group_mul(inverse(p2), p1));
    if (separation == 0.0) continue;
    const double diff = std::fabs(kernel_eval(k, p1) - kernel_eval(k, p2));
    const double measured = diff * std::pow(norm1, 1.0 + params.beta) /
                            std::pow(separation, params.beta);
    report.max_measured = std::max(report.max_measured, measured);
    if (measured > params.c_k && report.violations.size() < kMaxViolationRecords) {
      report.violations.push_back({p1, p2, measured, params.c_k});
    }
  }
  return report;
}

void write_audit_report(std::ostream& os, const AuditReport& report) {
  for (const AuditRecord& rec : report.violations) {
    os << report.check << ',' << format_double(rec.p1.x) << ','
       << format_double(rec.p1.y) << ',' << format_double(rec.p1.z) << ','
       << format_double(rec.p2.x) << ',' << format_double(rec.p2.y) << ','
       << format_double(rec.p2.z) << ',' << format_double(rec.measured) << ','
       << format_double(rec.bound) << '\n';
  }
}

}  // namespace heiskit
