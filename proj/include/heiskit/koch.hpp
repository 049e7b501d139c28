#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "heiskit/errors.hpp"

namespace heiskit {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

// Default materialization cap: 6^8 segments + 1 vertices. Deeper levels are
// reached through locate_word instead of full stages.
inline constexpr std::size_t kDefaultVertexBudget = 1679617;

// Per-stage replacement angles, 1-based: theta(1) drives stage 1. Angles are
// strictly positive, nonincreasing and below pi/2. Power-law schedules must
// additionally satisfy the angle condition sum theta_n < 1/2 (tail bounded
// analytically, head summed directly); explicit lists may violate it (the
// closed-form fixtures use pi/3) and report it through
// satisfies_angle_condition() instead, so operations whose estimates depend
// on the condition can insist on it.
class AngleSchedule {
 public:
  // theta_n = c / n^exponent; requires exponent > 1 for a finite sum.
  static AngleSchedule power_law(double c, double exponent);
  static AngleSchedule explicit_list(std::vector<double> thetas);

  // sum theta_n < 1/2.
  bool satisfies_angle_condition() const { return total_bound_ < 0.5; }

  // n >= 1. Explicit schedules reject indices beyond their list.
  double theta(int n) const;

  // sum_{j<=stages} theta_j.
  double head_sum(int stages) const;

  // Finite upper bound for the full series (head + analytic tail).
  double total_sum_bound() const;

  bool is_power_law() const { return explicit_.empty(); }
  double power_c() const { return c_; }
  double power_exponent() const { return exponent_; }
  const std::vector<double>& explicit_thetas() const { return explicit_; }
  std::string describe() const;

 private:
  AngleSchedule() = default;
  double c_ = 0.0;
  double exponent_ = 0.0;
  std::vector<double> explicit_;
  double total_bound_ = 0.0;
};

// Digit string over {1,...,6} addressing a segment of the construction.
struct Word {
  std::vector<std::uint8_t> digits;

  explicit Word(std::vector<std::uint8_t> d);
  Word() = default;

  std::size_t length() const { return digits.size(); }
  std::string str() const;

  // Word of the i-th stage-n segment, digits enumerating left to right.
  static Word of_segment_index(std::size_t index, int stage);
  std::size_t segment_index() const;
};

// One polygonal stage J_n: 6^n equal-length segments whose vertices form the
// graph of a function of the first coordinate.
struct PolygonStage {
  int stage = 0;
  std::vector<Vec2> vertices;  // 6^stage + 1 points
  double segment_length = 0.0;  // common planar length R_n
  Vec2 j0_begin;
  Vec2 j0_end;

  std::size_t segment_count() const { return vertices.size() - 1; }
  Word segment_word(std::size_t segment_index) const {
    return Word::of_segment_index(segment_index, stage);
  }
};

// Seven points of the 6-gonal replacement of segment a->b with bump angle
// theta. The mid vertex is exactly (a+b)/2 and all six pieces share the
// length |b-a|/(2+4cos(theta)).
std::array<Vec2, 7> replace_segment(const Vec2& a, const Vec2& b, double theta);

// Applies replace_segment with theta(k) to every stage-(k-1) segment for
// k = 1..n. Throws BudgetError when 6^n+1 exceeds vertex_budget.
PolygonStage build_stage(int n, const AngleSchedule& schedule, const Vec2& j0_begin,
                         const Vec2& j0_end,
                         std::size_t vertex_budget = kDefaultVertexBudget,
                         unsigned workers = 0);

// R_n = r0 * prod_{j=1..n} 1/(2+4cos(theta_j)).
double segment_length(int n, const AngleSchedule& schedule, double r0);

struct LipschitzBound {
  double bound = 0.0;              // tan(head sum + analytic tail)
  double observed_max_slope = 0.0; // slope scan over the built polygon
  int scanned_stage = 0;
};

// Returns tan of the full angle-sum bound and cross-checks it against the
// segment slopes of a materialized stage (capped at stage 6).
LipschitzBound lipschitz_bound(const AngleSchedule& schedule, int stages);

// Left endpoint of the stage-|w| segment addressed by w.
Vec2 locate_word(const Word& w, const AngleSchedule& schedule, const Vec2& j0_begin,
                 const Vec2& j0_end);

// Both endpoints of the addressed segment; empty word returns (j0_begin, j0_end).
std::pair<Vec2, Vec2> locate_segment(const Word& w, const AngleSchedule& schedule,
                                     const Vec2& j0_begin, const Vec2& j0_end);

// Stage refinement of one segment by an explicit angle list, one level per
// entry. build_stage is this helper applied to j0 with thetas 1..n.
std::vector<Vec2> refine_segment(const Vec2& a, const Vec2& b,
                                 std::span<const double> thetas,
                                 std::size_t vertex_budget = kDefaultVertexBudget,
                                 unsigned workers = 0);

// Delimited text export; one vertex per line: index, x, y, word digits of
// the outgoing segment (empty for the final vertex).
void write_stage(std::ostream& os, const PolygonStage& stage);

}  // namespace heiskit
