#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "heiskit/kernels.hpp"
#include "heiskit/koch.hpp"
#include "heiskit/measure.hpp"

namespace heiskit {

// Dense truncated-kernel matrix: entry (i,j) holds K(p_i^-1 p_j) * w_j when
// d(p_i, p_j) > epsilon, else 0; the diagonal is always 0. With unequal
// weights the matrix obeys A[i][j]*w_i = A[j][i]*w_j.
class KernelMatrix {
 public:
  KernelMatrix(const KernelSpec& kernel, const DiscreteMeasure& m, double epsilon,
               std::size_t entry_budget = std::size_t{1} << 25, unsigned workers = 0);

  std::size_t size() const { return n_; }
  double entry(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const double* row(std::size_t i) const { return a_.data() + i * n_; }
  double epsilon() const { return epsilon_; }
  const KernelSpec& kernel() const { return kernel_; }

 private:
  std::size_t n_;
  double epsilon_;
  KernelSpec kernel_;
  std::vector<double> a_;
};

struct QuadFormResult {
  double value = 0.0;
  double epsilon = 0.0;
  std::string kernel;
  std::size_t point_count = 0;
  std::string measure;  // short descriptor for provenance
};

// sum_{i != j, d > eps} w_i w_j K(p_i^-1 p_j). Matrix-free; rows are reduced
// in fixed order and merged serially, so the value does not depend on the
// worker count.
QuadFormResult quadratic_form(const KernelSpec& kernel, const DiscreteMeasure& m,
                              double epsilon, unsigned workers = 0);

// max_i sum_{j != i, d > eps} K(p_i^-1 p_j) * w_j.
double row_sup(const KernelSpec& kernel, const DiscreteMeasure& m, double epsilon,
               unsigned workers = 0);

// Largest eigenvalue of the symmetrized operator B[i][j] =
// K(p_i^-1 p_j) (w_i w_j)^{1/2} by shifted power iteration (the Gershgorin
// shift keeps the dominant eigenvalue unique when the spectrum is symmetric,
// e.g. the 2x2 off-diagonal case). Converged when successive Rayleigh
// quotients agree to `tolerance` relative; otherwise throws ConvergenceError
// carrying the last iterate.
double l2_norm_estimate(const KernelMatrix& a, const std::vector<double>& weights,
                        double tolerance, int max_iterations, std::uint64_t seed);

struct L1ScanResult {
  std::vector<int> n;
  std::vector<double> integral;     // int_{I_n} K_4(gamma(s)^-1 gamma(t)) dt
  std::vector<double> partial_sum;
};

// Composite 16-point Gauss-Legendre scan of the log-curve intervals I_n for
// n in [n_lo, n_hi], pole fixed at gamma(s). quadrature_points is the total
// node count per interval (rounded up to a multiple of 16). Kernel values go
// through the homogeneity rescale, so deep intervals cannot overflow.
L1ScanResult l1_divergence_scan(double s, int n_lo, int n_hi, int quadrature_points);

struct StagewiseResult {
  std::vector<int> stage;
  std::vector<double> contribution;  // estimate of the F_n x E_{n,p} double sum
  std::vector<double> partial_sum;
  std::vector<double> comparator;    // theta_n^alpha
  std::vector<bool> exhaustive;
};

// Stage-resolved quadratic-form contributions for K_{2*alpha} on the lifted
// Koch curve: for each stage n, the double sum over p with word digit n
// equal to 1 and q matching p through n-1 with digit 4, both discretized at
// stage n+2 (36 midpoint atoms per block, weight R_{n+2}). Exhaustive over
// word prefixes when pair_samples covers them, else seeded prefix sampling
// with unbiased scaling.
StagewiseResult koch_stagewise_form(const AngleSchedule& schedule, double alpha,
                                    int first_stage, int last_stage,
                                    std::size_t pair_samples, std::uint64_t seed,
                                    const Vec2& j0_begin = {0.0, 0.0},
                                    const Vec2& j0_end = {1.0, 0.0});

}  // namespace heiskit
