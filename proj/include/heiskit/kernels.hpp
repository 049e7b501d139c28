#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "heiskit/heis.hpp"

namespace heiskit {

// The two kernel families of the toolkit:
//   alpha(a):  K_a(p) = |z|^(a/2) / |p|^(a+1),  a > 0
//   b():       K_b(p) = |x| / |p|^2
// Both are even, nonnegative and -1-homogeneous under the dilations.
class KernelSpec {
 public:
  enum class Family { kAlpha, kB };

  static KernelSpec alpha(double a);
  static KernelSpec b() { return KernelSpec(Family::kB, 0.0); }

  Family family() const { return family_; }
  double alpha_value() const { return alpha_; }
  std::string name() const;

 private:
  KernelSpec(Family f, double a) : family_(f), alpha_(a) {}
  Family family_;
  double alpha_;
};

// K(p). Throws SingularityError at the identity. Specialized square-root
// forms are used for alpha in {1,2,4} and for K_b; generic alpha goes
// through pow.
double kernel_eval(const KernelSpec& k, const HPoint& p);

// K(p^-1 q). Throws SingularityError when p == q. Symmetric in (p, q):
// swapping negates every chord coordinate and the formulas only use
// absolute values and the gauge.
double kernel_pair(const KernelSpec& k, const HPoint& p, const HPoint& q);

// K(p) evaluated through the -1-homogeneity rescale K(p) = K(d_{1/s} p)/s
// when the coordinates are large enough to overflow the plain formula.
// Identical to kernel_eval for moderate arguments.
double kernel_eval_scaled(const KernelSpec& k, const HPoint& p);

// Calderon-Zygmund audit parameters. The definition demands a constant
// C_K >= 1, but the audits also answer "does a smaller bound hold?", so any
// positive finite c_k is accepted as the bound under test.
struct CZParams {
  double kappa;  // Hoelder proximity factor, in (0,1)
  double beta;   // Hoelder exponent, in (0,1]
  double c_k;    // bound under test, positive

  CZParams(double kappa_, double beta_, double c_k_);
};

struct AuditRecord {
  HPoint p1;
  HPoint p2;  // equal to p1 for single-point checks
  double measured = 0.0;
  double bound = 0.0;
};

struct AuditReport {
  std::string check;       // "growth" | "hoelder"
  std::size_t samples = 0;
  double max_measured = 0.0;  // empirical supremum of the audited ratio
  double bound = 0.0;
  std::vector<AuditRecord> violations;  // capped at 100 records

  bool passed() const { return violations.empty(); }
};

// Max over seeded samples of |t*K(d_t p) - K(p)| / K(p), points drawn from
// [-10,10]^3 with K(p) > 0, scales log-uniform in [scale_lo, scale_hi].
double check_homogeneity(const KernelSpec& k, std::size_t samples,
                         double scale_lo, double scale_hi, std::uint64_t seed);

// Same audit for an arbitrary evaluator; lets tests run negative controls.
double check_homogeneity_fn(const std::function<double(const HPoint&)>& k,
                            std::size_t samples, double scale_lo,
                            double scale_hi, std::uint64_t seed);

// Growth condition: records max of K(p)*|p| over seeded samples spread
// across scales 1e-3..1e3 and flags samples exceeding c_k.
AuditReport check_growth(const KernelSpec& k, const CZParams& params,
                         std::size_t samples, std::uint64_t seed);

// Hoelder condition: samples pairs with d(p1,p2) <= kappa*|p1| and records
// max of |K(p1)-K(p2)| * |p1|^(1+beta) / |p2^-1 p1|^beta against c_k.
AuditReport check_hoelder(const KernelSpec& k, const CZParams& params,
                          std::size_t samples, std::uint64_t seed);

// Line-oriented serialization: one record per violation
// (check, p1, p2, measured ratio, bound).
void write_audit_report(std::ostream& os, const AuditReport& report);

}  // namespace heiskit
