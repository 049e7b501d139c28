#include "heiskit/koch.hpp"

#include <cmath>
#include <ostream>

#include "heiskit/io.hpp"
#include "heiskit/parallel.hpp"

namespace heiskit {

namespace {

constexpr int kPowerLawHeadTerms = 100000;
constexpr int kSlopeScanStageCap = 6;

// Number of stage-n segments; throws once 6^n can no longer fit the budget.
std::size_t segments_for_stage(int n, std::size_t budget) {
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) {
    if (count > budget / 6) throw BudgetError("stage segment count exceeds budget");
    count *= 6;
  }
  return count;
}

}  // namespace

AngleSchedule AngleSchedule::power_law(double c, double exponent) {
  if (!(c > 0.0)) throw ValidationError("AngleSchedule: c must be positive");
  if (!(exponent > 1.0)) {
    throw ValidationError("AngleSchedule: power-law exponent must exceed 1 for a finite sum");
  }
  AngleSchedule s;
  s.c_ = c;
  s.exponent_ = exponent;
  // Head summed smallest-first, tail bounded by the integral comparison.
  double head = 0.0;
  for (int n = kPowerLawHeadTerms; n >= 1; --n) {
    head += c / std::pow(static_cast<double>(n), exponent);
  }
  const double tail =
      c * std::pow(static_cast<double>(kPowerLawHeadTerms), 1.0 - exponent) /
      (exponent - 1.0);
  s.total_bound_ = head + tail;
  if (!(s.total_bound_ < 0.5)) {
    throw ValidationError("AngleSchedule: angle sum bound must stay below 1/2");
  }
  return s;
}

AngleSchedule AngleSchedule::explicit_list(std::vector<double> thetas) {
  if (thetas.empty()) throw ValidationError("AngleSchedule: empty explicit list");
  double sum = 0.0;
  double prev = thetas.front();
  for (double t : thetas) {
    if (!(t > 0.0)) throw ValidationError("AngleSchedule: angles must be positive");
    if (!(t < 1.5707963267948966)) {
      throw ValidationError("AngleSchedule: angles must stay below pi/2");
    }
    if (t > prev) throw ValidationError("AngleSchedule: angles must be nonincreasing");
    prev = t;
    sum += t;
  }
  AngleSchedule s;
  s.explicit_ = std::move(thetas);
  s.total_bound_ = sum;
  return s;
}

double AngleSchedule::theta(int n) const {
  if (n < 1) throw ValidationError("AngleSchedule::theta: stage index is 1-based");
  if (is_power_law()) {
    return c_ / std::pow(static_cast<double>(n), exponent_);
  }
  if (static_cast<std::size_t>(n) > explicit_.size()) {
    throw ValidationError("AngleSchedule::theta: index beyond explicit schedule");
  }
  return explicit_[static_cast<std::size_t>(n) - 1];
}

double AngleSchedule::head_sum(int stages) const {
  if (stages < 0) throw ValidationError("AngleSchedule::head_sum: negative stage");
  const int limit = is_power_law()
                        ? stages
                        : std::min<int>(stages, static_cast<int>(explicit_.size()));
  double sum = 0.0;
  for (int n = limit; n >= 1; --n) sum += theta(n);
  return sum;
}

double AngleSchedule::total_sum_bound() const { return total_bound_; }

std::string AngleSchedule::describe() const {
  if (is_power_law()) {
    return "power_law(c=" + format_double(c_) + ",exp=" + format_double(exponent_) + ")";
  }
  std::string out = "explicit(";
  for (std::size_t i = 0; i < explicit_.size(); ++i) {
    if (i > 0) out += ';';
    out += format_double(explicit_[i]);
  }
  return out + ")";
}

Word::Word(std::vector<std::uint8_t> d) : digits(std::move(d)) {
  for (std::uint8_t digit : digits) {
    if (digit < 1 || digit > 6) throw ValidationError("Word: digits must lie in 1..6");
  }
}

std::string Word::str() const {
  std::string out;
  out.reserve(digits.size());
  for (std::uint8_t d : digits) out.push_back(static_cast<char>('0' + d));
  return out;
}

Word Word::of_segment_index(std::size_t index, int stage) {
  if (stage < 0) throw ValidationError("Word: negative stage");
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(stage));
  for (int k = stage - 1; k >= 0; --k) {
    digits[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(index % 6 + 1);
    index /= 6;
  }
  if (index != 0) throw ValidationError("Word: segment index out of range for stage");
  return Word(std::move(digits));
}

std::size_t Word::segment_index() const {
  std::size_t index = 0;
  for (std::uint8_t d : digits) index = index * 6 + (d - 1);
  return index;
}

std::array<Vec2, 7> replace_segment(const Vec2& a, const Vec2& b, double theta) {
  if (a == b) throw ValidationError("replace_segment: degenerate segment");
  if (!(theta > 0.0 && theta < 1.5707963267948966)) {
    throw ValidationError("replace_segment: theta must lie in (0, pi/2)");
  }
  const double x = b.x - a.x;
  const double y = b.y - a.y;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double d = 2.0 + 4.0 * c;
  return {
      a,
      Vec2{a.x + x / d, a.y + y / d},
      Vec2{a.x + ((1.0 + c) * x - s * y) / d, a.y + ((1.0 + c) * y + s * x) / d},
      Vec2{a.x + 0.5 * x, a.y + 0.5 * y},
      Vec2{a.x + ((1.0 + 3.0 * c) * x + s * y) / d,
           a.y + ((1.0 + 3.0 * c) * y - s * x) / d},
      Vec2{a.x + (1.0 + 4.0 * c) * x / d, a.y + (1.0 + 4.0 * c) * y / d},
      b,
  };
}

std::vector<Vec2> refine_segment(const Vec2& a, const Vec2& b,
                                 std::span<const double> thetas,
                                 std::size_t vertex_budget, unsigned workers) {
  const std::size_t final_segments =
      segments_for_stage(static_cast<int>(thetas.size()), vertex_budget);
  if (final_segments + 1 > vertex_budget) {
    throw BudgetError("refine_segment: vertex budget exceeded");
  }

  std::vector<Vec2> verts{a, b};
  for (double theta : thetas) {
    const std::size_t segs = verts.size() - 1;
    std::vector<Vec2> next(segs * 6 + 1);
    parallel_for(segs, workers, [&](std::size_t sidx) {
      const auto pts = replace_segment(verts[sidx], verts[sidx + 1], theta);
      for (int k = 0; k < 6; ++k) next[sidx * 6 + static_cast<std::size_t>(k)] = pts[static_cast<std::size_t>(k)];
    });
    next.back() = verts.back();
    verts = std::move(next);
  }
  return verts;
}

PolygonStage build_stage(int n, const AngleSchedule& schedule, const Vec2& j0_begin,
                         const Vec2& j0_end, std::size_t vertex_budget,
                         unsigned workers) {
  if (n < 0) throw ValidationError("build_stage: negative stage");
  if (j0_begin == j0_end) throw ValidationError("build_stage: degenerate j0");

  std::vector<double> thetas(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) thetas[static_cast<std::size_t>(k) - 1] = schedule.theta(k);

  PolygonStage stage;
  stage.stage = n;
  stage.j0_begin = j0_begin;
  stage.j0_end = j0_end;
  stage.vertices = refine_segment(j0_begin, j0_end, thetas, vertex_budget, workers);
  stage.segment_length =
      segment_length(n, schedule, std::hypot(j0_end.x - j0_begin.x, j0_end.y - j0_begin.y));
  return stage;
}

double segment_length(int n, const AngleSchedule& schedule, double r0) {
  if (n < 0) throw ValidationError("segment_length: negative stage");
  double len = r0;
  for (int j = 1; j <= n; ++j) {
    len /= 2.0 + 4.0 * std::cos(schedule.theta(j));
  }
  return len;
}

LipschitzBound lipschitz_bound(const AngleSchedule& schedule, int stages) {
  if (stages < 1) throw ValidationError("lipschitz_bound: stages must be >= 1");

  double angle_bound = schedule.head_sum(stages);
  if (schedule.is_power_law()) {
    // Integral tail bound for the angles beyond the built stages.
    const double e = schedule.power_exponent();
    angle_bound += schedule.power_c() *
                   std::pow(static_cast<double>(stages), 1.0 - e) / (e - 1.0);
  }
  if (!(angle_bound < 0.5 * M_PI)) {
    throw ValidationError("lipschitz_bound: angle sum reaches pi/2, tan bound undefined");
  }

  LipschitzBound result;
  result.bound = std::tan(angle_bound);
  result.scanned_stage = std::min(stages, kSlopeScanStageCap);
  if (!schedule.is_power_law()) {
    result.scanned_stage =
        std::min<int>(result.scanned_stage, static_cast<int>(schedule.explicit_thetas().size()));
  }

  const PolygonStage scan = build_stage(result.scanned_stage, schedule, {0.0, 0.0}, {1.0, 0.0});
  double max_slope = 0.0;
  for (std::size_t i = 0; i + 1 < scan.vertices.size(); ++i) {
    const double dx = scan.vertices[i + 1].x - scan.vertices[i].x;
    const double dy = scan.vertices[i + 1].y - scan.vertices[i].y;
    max_slope = std::max(max_slope, std::fabs(dy / dx));
  }
  result.observed_max_slope = max_slope;
  return result;
}

std::pair<Vec2, Vec2> locate_segment(const Word& w, const AngleSchedule& schedule,
                                     const Vec2& j0_begin, const Vec2& j0_end) {
  Vec2 a = j0_begin;
  Vec2 b = j0_end;
  for (std::size_t i = 0; i < w.digits.size(); ++i) {
    const int digit = w.digits[i];
    const auto pts = replace_segment(a, b, schedule.theta(static_cast<int>(i) + 1));
    a = pts[static_cast<std::size_t>(digit) - 1];
    b = pts[static_cast<std::size_t>(digit)];
  }
  return {a, b};
}

Vec2 locate_word(const Word& w, const AngleSchedule& schedule, const Vec2& j0_begin,
                 const Vec2& j0_end) {
  if (w.digits.empty()) throw ValidationError("locate_word: empty word");
  return locate_segment(w, schedule, j0_begin, j0_end).first;
}

void write_stage(std::ostream& os, const PolygonStage& stage) {
  os << "index,x,y,word\n";
  const std::size_t segs = stage.segment_count();
  for (std::size_t i = 0; i < stage.vertices.size(); ++i) {
    os << i << ',' << format_double(stage.vertices[i].x) << ','
       << format_double(stage.vertices[i].y) << ',';
    if (i < segs) os << stage.segment_word(i).str();
    os << '\n';
  }
}

}  // namespace heiskit
