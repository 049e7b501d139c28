#include <doctest.h>

#include <cmath>
#include <span>
#include <vector>

#include "heiskit/koch.hpp"
#include "oracles.hpp"

using namespace heiskit;

namespace {

double seg_len(const Vec2& a, const Vec2& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

}  // namespace

TEST_CASE("replace_segment at theta = pi/3 matches the closed form") {
  const auto pts = replace_segment({0, 0}, {1, 0}, M_PI / 3.0);
  const double s3 = std::sqrt(3.0);
  const Vec2 expected[7] = {{0, 0},           {0.25, 0},       {0.375, s3 / 8.0},
                            {0.5, 0},         {0.625, -s3 / 8.0}, {0.75, 0},
                            {1, 0}};
  for (int i = 0; i < 7; ++i) {
    CHECK(pts[static_cast<std::size_t>(i)].x ==
          doctest::Approx(expected[i].x).epsilon(1e-15));
    CHECK(std::fabs(pts[static_cast<std::size_t>(i)].y - expected[i].y) <= 1e-15);
  }
}

TEST_CASE("replace_segment flattens to equal sixths as theta -> 0") {
  const auto pts = replace_segment({0, 0}, {1, 0}, 1e-9);
  for (int i = 0; i <= 6; ++i) {
    CHECK(std::fabs(pts[static_cast<std::size_t>(i)].x - i / 6.0) <= 1e-8);
    CHECK(std::fabs(pts[static_cast<std::size_t>(i)].y) <= 1e-8);
  }
}

TEST_CASE("replace_segment midpoint and equal lengths on random segments") {
  std::vector<double> thetas = {0.3, 0.1, 0.45, 1.2};
  std::vector<Vec2> as = {{0, 0}, {1.5, -2.0}, {-3, 4}, {0.25, 0.75}};
  std::vector<Vec2> bs = {{1, 0}, {2.5, 1.0}, {5, 4.5}, {-1.5, 2.0}};
  for (std::size_t c = 0; c < thetas.size(); ++c) {
    const auto pts = replace_segment(as[c], bs[c], thetas[c]);
    const Vec2 mid{0.5 * (as[c].x + bs[c].x), 0.5 * (as[c].y + bs[c].y)};
    CHECK(pts[3].x == doctest::Approx(mid.x).epsilon(1e-14));
    CHECK(pts[3].y == doctest::Approx(mid.y).epsilon(1e-14));

    const double want = seg_len(as[c], bs[c]) / (2.0 + 4.0 * std::cos(thetas[c]));
    for (int i = 0; i < 6; ++i) {
      const double got = seg_len(pts[static_cast<std::size_t>(i)],
                                 pts[static_cast<std::size_t>(i + 1)]);
      CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
    CHECK(pts[0] == as[c]);
    CHECK(pts[6] == bs[c]);
  }
}

TEST_CASE("replace_segment rejects bad input") {
  CHECK_THROWS_AS(replace_segment({1, 1}, {1, 1}, 0.3), ValidationError);
  CHECK_THROWS_AS(replace_segment({0, 0}, {1, 0}, 0.0), ValidationError);
  CHECK_THROWS_AS(replace_segment({0, 0}, {1, 0}, 1.6), ValidationError);
}

TEST_CASE("angle schedule validation") {
  CHECK_NOTHROW(AngleSchedule::power_law(0.2, 2.0));
  CHECK_NOTHROW(AngleSchedule::power_law(0.3, 2.0));
  CHECK_THROWS_AS(AngleSchedule::power_law(0.4, 2.0), ValidationError);   // sum 0.658
  CHECK_THROWS_AS(AngleSchedule::power_law(0.2, 1.0), ValidationError);   // divergent
  CHECK_THROWS_AS(AngleSchedule::power_law(-0.1, 2.0), ValidationError);
  CHECK_THROWS_AS(AngleSchedule::explicit_list({}), ValidationError);
  CHECK_THROWS_AS(AngleSchedule::explicit_list({0.1, 0.2}), ValidationError);  // increasing
  CHECK_THROWS_AS(AngleSchedule::explicit_list({-0.1}), ValidationError);
  CHECK_THROWS_AS(AngleSchedule::explicit_list({1.6}), ValidationError);  // >= pi/2
  CHECK_NOTHROW(AngleSchedule::explicit_list({0.2, 0.1, 0.05}));

  // The angle condition is enforced for power laws and reported for
  // explicit lists (the closed-form fixtures use pi/3 angles).
  CHECK(AngleSchedule::power_law(0.2, 2.0).satisfies_angle_condition());
  CHECK(AngleSchedule::explicit_list({0.2, 0.1}).satisfies_angle_condition());
  CHECK_FALSE(AngleSchedule::explicit_list({M_PI / 3.0}).satisfies_angle_condition());

  const AngleSchedule p = AngleSchedule::power_law(0.2, 2.0);
  CHECK(p.theta(1) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(p.theta(3) == doctest::Approx(0.2 / 9.0).epsilon(1e-15));
  CHECK_THROWS_AS(p.theta(0), ValidationError);
  CHECK(p.total_sum_bound() == doctest::Approx(0.2 * M_PI * M_PI / 6.0).epsilon(1e-6));

  const AngleSchedule e = AngleSchedule::explicit_list({0.2, 0.1});
  CHECK(e.theta(2) == 0.1);
  CHECK_THROWS_AS(e.theta(3), ValidationError);
}

TEST_CASE("segment_length closed forms") {
  const AngleSchedule sched = AngleSchedule::explicit_list({M_PI / 3.0});
  CHECK(segment_length(1, sched, 1.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(segment_length(0, sched, 7.5) == 7.5);

  // Near-zero angles: R_n -> r0 * 6^-n.
  const AngleSchedule tiny = AngleSchedule::explicit_list({1e-12, 1e-12, 1e-12});
  for (int n = 1; n <= 3; ++n) {
    CHECK(segment_length(n, tiny, 1.0) ==
          doctest::Approx(std::pow(6.0, -n)).epsilon(1e-12));
  }
}

TEST_CASE("build_stage basics and invariants") {
  const AngleSchedule sched = AngleSchedule::power_law(0.2, 2.0);

  const PolygonStage s0 = build_stage(0, sched, {0, 0}, {1, 0});
  CHECK(s0.vertices.size() == 2);
  CHECK(s0.segment_length == 1.0);

  const PolygonStage s2 = build_stage(2, sched, {0, 0}, {1, 0});
  CHECK(s2.segment_count() == 36);
  CHECK(s2.vertices.front() == Vec2{0, 0});
  CHECK(s2.vertices.back() == Vec2{1, 0});

  // Equal lengths, consistent with segment_length.
  const double want = segment_length(2, sched, 1.0);
  for (std::size_t i = 0; i < 36; ++i) {
    CHECK(seg_len(s2.vertices[i], s2.vertices[i + 1]) ==
          doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(s2.segment_length == doctest::Approx(want).epsilon(1e-15));

  // Graph property: strictly increasing first coordinates.
  for (std::size_t i = 0; i + 1 < s2.vertices.size(); ++i) {
    CHECK(s2.vertices[i].x < s2.vertices[i + 1].x);
  }

  // Endpoints fixed across stages exactly.
  for (int n = 1; n <= 4; ++n) {
    const PolygonStage s = build_stage(n, sched, {0, 0}, {1, 0});
    CHECK(s.vertices.front() == Vec2{0, 0});
    CHECK(s.vertices.back() == Vec2{1, 0});
  }
}

TEST_CASE("build_stage budget") {
  const AngleSchedule sched = AngleSchedule::power_law(0.2, 2.0);
  CHECK_THROWS_AS(build_stage(4, sched, {0, 0}, {1, 0}, /*vertex_budget=*/100),
                  BudgetError);
  CHECK_THROWS_AS(build_stage(-1, sched, {0, 0}, {1, 0}), ValidationError);
  CHECK_THROWS_AS(build_stage(1, sched, {1, 1}, {1, 1}), ValidationError);
}

TEST_CASE("nesting: every stage-n vertex is within R_(n-1) of a parent vertex") {
  const AngleSchedule sched = AngleSchedule::power_law(0.3, 2.0);
  PolygonStage prev = build_stage(0, sched, {0, 0}, {1, 0});
  for (int n = 1; n <= 3; ++n) {
    const PolygonStage cur = build_stage(n, sched, {0, 0}, {1, 0});
    for (const Vec2& v : cur.vertices) {
      double best = 1e300;
      for (const Vec2& u : prev.vertices) best = std::min(best, seg_len(u, v));
      CHECK(best <= prev.segment_length * (1.0 + 1e-12));
    }
    prev = cur;
  }
}

TEST_CASE("refinements stay inside the convex hull of the first replacement") {
  const AngleSchedule sched = AngleSchedule::power_law(0.3, 2.0);
  // Stage-1 hull of the root segment must contain every deeper refinement.
  const PolygonStage s1 = build_stage(1, sched, {0, 0}, {1, 0});
  const std::vector<Vec2> hull =
      oracle::convex_hull({s1.vertices.begin(), s1.vertices.end()});
  for (int k = 2; k <= 5; ++k) {
    const PolygonStage sk = build_stage(k, sched, {0, 0}, {1, 0});
    for (const Vec2& v : sk.vertices) {
      CHECK(oracle::hull_contains(hull, v, 1e-12));
    }
  }
}

TEST_CASE("word addressing") {
  CHECK_THROWS_AS(Word({0}), ValidationError);
  CHECK_THROWS_AS(Word({7}), ValidationError);
  CHECK(Word({1, 4, 6}).str() == "146");
  CHECK(Word::of_segment_index(0, 3).str() == "111");
  CHECK(Word::of_segment_index(215, 3).str() == "666");
  CHECK(Word::of_segment_index(129, 3).segment_index() == 129);
  CHECK_THROWS_AS(Word::of_segment_index(216, 3), ValidationError);

  const AngleSchedule sched = AngleSchedule::explicit_list({M_PI / 3.0, M_PI / 3.0});
  CHECK_THROWS_AS(locate_word(Word(), sched, {0, 0}, {1, 0}), ValidationError);

  const Vec2 w1 = locate_word(Word({1}), sched, {0, 0}, {1, 0});
  CHECK(w1 == Vec2{0, 0});
  const Vec2 w4 = locate_word(Word({4}), sched, {0, 0}, {1, 0});
  CHECK(w4.x == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::fabs(w4.y) <= 1e-16);

  // Consistency with build_stage for every stage-2 word, bit for bit.
  const PolygonStage s2 = build_stage(2, sched, {0, 0}, {1, 0});
  for (std::size_t i = 0; i < 36; ++i) {
    const Vec2 located = locate_word(s2.segment_word(i), sched, {0, 0}, {1, 0});
    CHECK(located == s2.vertices[i]);
  }
}

TEST_CASE("lipschitz bound") {
  const AngleSchedule one = AngleSchedule::explicit_list({M_PI / 6.0});
  const LipschitzBound lb = lipschitz_bound(one, 1);
  CHECK(lb.bound == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(lb.observed_max_slope <= lb.bound * (1.0 + 1e-12));

  const AngleSchedule near_zero = AngleSchedule::explicit_list({1e-12});
  CHECK(lipschitz_bound(near_zero, 1).bound <= 1e-11);

  const AngleSchedule power = AngleSchedule::power_law(0.2, 2.0);
  const LipschitzBound pb = lipschitz_bound(power, 50);
  CHECK(pb.scanned_stage == 6);
  CHECK(pb.observed_max_slope <= pb.bound * (1.0 + 1e-12));
  CHECK(pb.observed_max_slope > 0.0);
}
