#include <doctest.h>

#include <cmath>
#include <vector>

#include "heiskit/measure.hpp"
#include "heiskit/rng.hpp"

using namespace heiskit;

namespace {

LiftedPolyline unit_x_segment(int vertices) {
  std::vector<Vec2> pts;
  for (int i = 0; i < vertices; ++i) {
    pts.push_back({static_cast<double>(i) / (vertices - 1), 0.0});
  }
  return horizontal_lift(pts, 0.0);
}

}  // namespace

TEST_CASE("polyline measure: mass equals planar length on straight segments") {
  for (int subdivisions : {1, 2, 7}) {
    const DiscreteMeasure m = measure_from_polyline(unit_x_segment(5), subdivisions);
    CHECK(m.size() == 4u * static_cast<unsigned>(subdivisions));
    CHECK(m.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("polyline measure: refinement barely moves the mass on a Koch lift") {
  const AngleSchedule sched = AngleSchedule::power_law(0.3, 2.0);
  const LiftedPolyline lifted = lift_stage(build_stage(3, sched, {0, 0}, {1, 0}), 0.0);
  const double mass1 = measure_from_polyline(lifted, 1).total_mass();
  const double mass2 = measure_from_polyline(lifted, 2).total_mass();
  CHECK(std::fabs(mass2 - mass1) / mass1 < 0.01);
}

TEST_CASE("polyline measure: one atom per Koch segment weighs about R_n") {
  const AngleSchedule sched = AngleSchedule::power_law(0.3, 2.0);
  for (int n : {2, 3, 4}) {
    const PolygonStage stage = build_stage(n, sched, {0, 0}, {1, 0});
    const DiscreteMeasure m = measure_from_polyline(lift_stage(stage, 0.0), 1);
    const double rn = stage.segment_length;
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(m.weight(i) <= rn * std::sqrt(2.0));
      CHECK(m.weight(i) >= rn / std::sqrt(2.0));
    }
  }
}

TEST_CASE("polyline measure validation") {
  CHECK_THROWS_AS(measure_from_polyline(unit_x_segment(3), 0), ValidationError);
  LiftedPolyline too_short;
  too_short.vertices = {HPoint{0, 0, 0}};
  CHECK_THROWS_AS(measure_from_polyline(too_short, 1), ValidationError);
}

TEST_CASE("cantor measure: atoms, mass, diameter") {
  const DiscreteMeasure m0 = measure_from_cantor(cantor_build(0));
  CHECK(m0.size() == 1);
  CHECK(m0.total_mass() == 1.0);
  CHECK(m0.diameter() == 0.0);

  for (int depth : {1, 4, 8}) {
    const DiscreteMeasure m = measure_from_cantor(cantor_build(depth));
    CHECK(m.size() == (std::size_t{1} << depth));
    CHECK(m.total_mass() == 1.0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(m.weight(i) == std::pow(0.5, depth));
    }
    CHECK(m.diameter() <= std::pow(2.0, 0.25));
    CHECK(m.diameter() <= 2.0);  // diam(E) <= 2
  }
}

TEST_CASE("measure caches: diameter, separation, duplicate detection") {
  std::vector<HPoint> pts = {{0, 0, 0}, {1, 0, 0}, {0.25, 0, 0}};
  std::vector<double> w = {1.0, 1.0, 1.0};
  const DiscreteMeasure m(pts, w);
  CHECK(m.diameter() == 1.0);
  CHECK(m.min_separation() == 0.25);
  CHECK(m.max_nearest_gap() == doctest::Approx(0.75).epsilon(1e-15));

  std::vector<HPoint> dup = {{0, 0, 0}, {1, 2, 3}, {1, 2, 3}};
  const DiscreteMeasure dm(dup, w);
  CHECK(dm.min_separation() == 0.0);

  CHECK_THROWS_AS(DiscreteMeasure({}, {}), ValidationError);
  CHECK_THROWS_AS(DiscreteMeasure({{0, 0, 0}}, {0.0}), ValidationError);
  CHECK_THROWS_AS(DiscreteMeasure({{0, 0, 0}}, {1.0, 2.0}), ValidationError);
}

TEST_CASE("ball mass: full diameter recovers the total mass, monotone in r") {
  const DiscreteMeasure m = measure_from_cantor(cantor_build(6));
  const std::vector<double> radii = {m.diameter(), 0.5 * m.diameter(),
                                     0.25 * m.diameter()};
  const double floor = 4.0 * m.max_nearest_gap();
  REQUIRE(floor <= radii.back());
  const RegularityReport report = ahlfors_check(m, m.size(), radii, floor, 5);

  // Records come in center-major order, radii as given (decreasing).
  for (std::size_t c = 0; c < m.size(); ++c) {
    const double full = report.records[c * 3].ratio * m.diameter();
    CHECK(full == doctest::Approx(m.total_mass()).epsilon(1e-12));
    CHECK(report.records[c * 3].ratio * radii[0] >=
          report.records[c * 3 + 1].ratio * radii[1] - 1e-15);
    CHECK(report.records[c * 3 + 1].ratio * radii[1] >=
          report.records[c * 3 + 2].ratio * radii[2] - 1e-15);
  }
}

TEST_CASE("ahlfors ratios on a uniform segment sit between one- and two-sided") {
  const DiscreteMeasure m = measure_from_polyline(unit_x_segment(2), 256);
  const std::vector<double> radii = {0.25, 0.125};
  const RegularityReport report =
      ahlfors_check(m, m.size(), radii, 4.0 * m.max_nearest_gap(), 5);
  CHECK(report.min_ratio >= 0.9);
  CHECK(report.max_ratio <= 2.1);
}

TEST_CASE("ahlfors report scales linearly with the weights") {
  const DiscreteMeasure m = measure_from_cantor(cantor_build(7));
  const std::vector<double> radii = {0.5 * m.diameter()};
  const double floor = 4.0 * m.max_nearest_gap();
  const RegularityReport base = ahlfors_check(m, 32, radii, floor, 9);
  const RegularityReport scaled = ahlfors_check(m.scale_weights(3.0), 32, radii, floor, 9);
  CHECK(scaled.min_ratio == doctest::Approx(3.0 * base.min_ratio).epsilon(1e-12));
  CHECK(scaled.max_ratio == doctest::Approx(3.0 * base.max_ratio).epsilon(1e-12));
}

TEST_CASE("ahlfors validation: floor and radius ranges") {
  const DiscreteMeasure m = measure_from_cantor(cantor_build(6));
  const double floor = 4.0 * m.max_nearest_gap();
  CHECK_THROWS_AS(ahlfors_check(m, 8, {floor * 0.5}, floor, 1), ValidationError);
  CHECK_THROWS_AS(ahlfors_check(m, 8, {m.diameter() * 1.5}, floor, 1), ValidationError);
  CHECK_THROWS_AS(ahlfors_check(m, 8, {m.diameter()}, floor * 0.1, 1), ValidationError);
  CHECK_THROWS_AS(ahlfors_check(m, 0, {m.diameter()}, floor, 1), ValidationError);
  CHECK_THROWS_AS(ahlfors_check(m, 8, {}, floor, 1), ValidationError);
}

TEST_CASE("regularity stability across one more Koch stage") {
  const AngleSchedule sched = AngleSchedule::power_law(0.3, 2.0);
  const DiscreteMeasure coarse =
      measure_from_polyline(lift_stage(build_stage(3, sched, {0, 0}, {1, 0}), 0.0), 1);
  const DiscreteMeasure fine =
      measure_from_polyline(lift_stage(build_stage(4, sched, {0, 0}, {1, 0}), 0.0), 1);

  // Radii valid for both discretizations, floored by the coarser one.
  const double floor = 4.0 * coarse.max_nearest_gap();
  std::vector<double> radii;
  for (double r = 0.5 * std::min(coarse.diameter(), fine.diameter()); r >= floor;
       r *= 0.5) {
    radii.push_back(r);
  }
  REQUIRE(radii.size() >= 3);

  const RegularityReport a = ahlfors_check(coarse, 64, radii, floor, 17);
  const RegularityReport b = ahlfors_check(fine, 64, radii, floor, 17);
  const double spread_a = a.max_ratio / a.min_ratio;
  const double spread_b = b.max_ratio / b.min_ratio;
  CHECK(std::fabs(spread_b - spread_a) / spread_a <= 0.25);
}

TEST_CASE("left translation preserves the metric caches") {
  const DiscreteMeasure m = measure_from_cantor(cantor_build(5));
  const DiscreteMeasure moved = m.left_translate({0.7, -1.3, 2.1});
  CHECK(moved.diameter() == doctest::Approx(m.diameter()).epsilon(1e-10));
  CHECK(moved.min_separation() == doctest::Approx(m.min_separation()).epsilon(1e-10));
  CHECK(moved.total_mass() == m.total_mass());
}
