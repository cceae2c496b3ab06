#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "papa/errors.hpp"
#include "papa/projection.hpp"

#include "helpers.hpp"

#include <cmath>
#include <numbers>
#include <set>

using namespace papa;
using papa::testing::make_cloud;

namespace {

PointCloud segment_cloud(double length, double spacing) {
  const int n = static_cast<int>(std::round(length / spacing)) + 1;
  RowMatrix pts(n, 2);
  for (int i = 0; i < n; ++i) {
    pts(i, 0) = i * spacing;
    pts(i, 1) = 0.0;
  }
  return PointCloud(std::move(pts));
}

PointCloud circle_cloud(int n) {
  RowMatrix pts(n, 2);
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * i / n;
    pts(i, 0) = std::cos(a);
    pts(i, 1) = std::sin(a);
  }
  return PointCloud(std::move(pts));
}

/// Hand-built trace along the x axis with the given x positions, one step
/// of h apart in arc length, seed in the middle or as given.
AutoparallelTrace x_trace(const std::vector<double>& xs, int seed_state, double h) {
  AutoparallelTrace trace;
  trace.step = h;
  trace.seed_state = seed_state;
  Vector d(2);
  d << 1.0, 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Vector p(2);
    p << xs[k], 0.0;
    trace.states.push_back(
        TraceState{p, d, (static_cast<int>(k) - seed_state) * h});
  }
  return trace;
}

BaseSpace x_plane(double x0) {
  Vector anchor(2), normal(2);
  anchor << x0, 0.0;
  normal << 1.0, 0.0;
  return BaseSpace(anchor, normal);
}

}  // namespace

TEST_CASE("a single sign change interpolates the crossing") {
  // Offsets -0.004 and 0.006 around the plane: the crossing sits 40% of the
  // way into the step, at x = 0.004 and arc 0.004.
  const AutoparallelTrace trace = x_trace({-0.02, -0.01, 0.0, 0.01, 0.02}, 2, 0.01);
  const auto crossings = plane_crossings(trace, x_plane(0.004));
  REQUIRE(crossings.size() == 1);
  CHECK(crossings[0].signed_arc == doctest::Approx(0.004).epsilon(1e-12));
  CHECK(crossings[0].intersection[0] == doctest::Approx(0.004).epsilon(1e-12));
  CHECK(crossings[0].intersection[1] == 0.0);
}

TEST_CASE("states exactly on the plane count once per run") {
  SUBCASE("a single on-plane state between sign changes") {
    const AutoparallelTrace trace = x_trace({-0.01, 0.0, 0.01}, 1, 0.01);
    const auto crossings = plane_crossings(trace, x_plane(0.0));
    REQUIRE(crossings.size() == 1);
    CHECK(crossings[0].signed_arc == 0.0);
  }
  SUBCASE("a whole trace lying in the plane") {
    AutoparallelTrace trace;
    trace.step = 0.01;
    trace.seed_state = 1;
    Vector d(2);
    d << 0.0, 1.0;
    for (int k = 0; k < 3; ++k) {
      Vector p(2);
      p << 0.0, 0.01 * (k - 1);
      trace.states.push_back(TraceState{p, d, 0.01 * (k - 1)});
    }
    const auto crossings = plane_crossings(trace, x_plane(0.0));
    REQUIRE(crossings.size() == 1);
    CHECK(crossings[0].signed_arc == -0.01);
  }
}

TEST_CASE("crossings sort by absolute arc, negative first on ties") {
  const AutoparallelTrace trace = x_trace({0.005, -0.005, 0.005}, 1, 0.01);
  const auto crossings = plane_crossings(trace, x_plane(0.0));
  REQUIRE(crossings.size() == 2);
  CHECK(crossings[0].signed_arc == doctest::Approx(-0.005).epsilon(1e-12));
  CHECK(crossings[1].signed_arc == doctest::Approx(0.005).epsilon(1e-12));
}

TEST_CASE("a trace missing the plane yields no crossings") {
  const AutoparallelTrace trace = x_trace({0.0, 0.01, 0.02}, 0, 0.01);
  CHECK(plane_crossings(trace, x_plane(1.0)).empty());
  AutoparallelTrace empty;
  CHECK_THROWS_AS(plane_crossings(empty, x_plane(0.0)), ValidationError);
}

TEST_CASE("project_point lands on the plane at the right arc") {
  const SpatialIndex index(segment_cloud(1.0, 0.005));
  TraceConfig config;
  config.step = 0.01;
  config.max_steps_each_way = 30;
  config.spec.radius = 0.03;
  const int point = 60;  // x = 0.3

  const FiberProjection projection =
      project_point(index, point, x_plane(0.52), config);
  CHECK(projection.point_index == point);
  CHECK(projection.signed_distance == doctest::Approx(0.22).epsilon(1e-6));
  CHECK(projection.intersection[0] == doctest::Approx(0.52).epsilon(1e-9));
  CHECK(std::abs(projection.intersection[1]) < 1e-9);
  CHECK_NOTHROW(check_invariants(projection, x_plane(0.52), 1e-8));
}

TEST_CASE("project_point picks the crossing nearest the seed") {
  const SpatialIndex index(circle_cloud(2000));
  TraceConfig config;
  config.step = 0.01;
  config.max_steps_each_way = 200;
  config.spec.radius = 0.05;

  // Seed at angle 0.3; counterclockwise, the plane x = 0 is about 1.27
  // units of arc ahead and 1.87 behind, so the forward crossing wins.
  const double a = 0.3;
  const int point = static_cast<int>(std::round(a / (2.0 * std::numbers::pi / 2000)));
  Vector ccw(2);
  ccw << -std::sin(a), std::cos(a);

  const FiberProjection projection =
      project_point(index, point, x_plane(0.0), config, ccw);
  const double expected = std::numbers::pi / 2.0 - a;
  CHECK(projection.signed_distance == doctest::Approx(expected).epsilon(0.02));
  CHECK(std::abs(projection.intersection[0]) < 1e-9);
  CHECK(projection.intersection[1] == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("project_point reports why a fiber missed the plane") {
  const SpatialIndex index(circle_cloud(2000));
  TraceConfig config;
  config.step = 0.01;
  config.max_steps_each_way = 50;
  config.spec.radius = 0.05;
  try {
    project_point(index, 0, x_plane(5.0), config);
    FAIL("expected NoIntersectionError");
  } catch (const NoIntersectionError& e) {
    CHECK(e.forward_termination() == "max_steps");
    CHECK(e.backward_termination() == "max_steps");
  }
  CHECK_THROWS_AS(project_point(index, -1, x_plane(0.0), config), ValidationError);
  CHECK_THROWS_AS(project_point(index, 2000, x_plane(0.0), config), ValidationError);
}

TEST_CASE("user-supplied base space passes through unchanged") {
  const PointCloud cloud = make_cloud({{0.0, 0.0}, {1.0, 0.0}});
  Vector anchor(2), normal(2);
  anchor << 3.0, 4.0;
  normal << 0.0, 2.0;
  const BaseSpace base =
      choose_base_space(cloud, {}, UserSupplied{anchor, normal});
  CHECK((base.anchor() - anchor).norm() == 0.0);
  CHECK(base.normal()[0] == 0.0);
  CHECK(base.normal()[1] == 1.0);

  CHECK_THROWS_AS(
      choose_base_space(cloud, {}, UserSupplied{anchor, Vector::Zero(2)}),
      ValidationError);
}

TEST_CASE("medoid base space ties to the lower index") {
  // Summed distances: 13, 11, 11, 17 for the four points, so the medoid is
  // the first of the two tied middle points.
  const PointCloud cloud =
      make_cloud({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {10.0, 0.0}});
  const AutoparallelTrace trace = x_trace({0.99, 1.0, 1.01}, 1, 0.01);
  const BaseSpace base = choose_base_space(cloud, {trace}, MedoidOrthogonal{});
  CHECK(base.anchor()[0] == 1.0);
  CHECK(base.anchor()[1] == 0.0);
  CHECK(base.normal()[0] == 1.0);
}

TEST_CASE("medoid normal averages sign-aligned trace directions") {
  const PointCloud cloud = make_cloud({{0.0, 0.0}, {0.1, 0.0}, {-0.1, 0.0}});
  AutoparallelTrace forward = x_trace({-0.01, 0.0, 0.01}, 1, 0.01);
  AutoparallelTrace backward = x_trace({-0.01, 0.0, 0.01}, 1, 0.01);
  for (TraceState& state : backward.states) state.direction = -state.direction;

  // Opposite fiber orientations must not cancel out.
  const BaseSpace base =
      choose_base_space(cloud, {forward, backward}, MedoidOrthogonal{});
  CHECK(std::abs(base.normal()[0]) == 1.0);
  CHECK(base.normal()[1] == 0.0);
}

TEST_CASE("medoid strategy needs usable traces") {
  const PointCloud cloud = make_cloud({{0.0, 0.0}, {1.0, 0.0}});
  CHECK_THROWS_AS(choose_base_space(cloud, {}, MedoidOrthogonal{}),
                  ValidationError);
  AutoparallelTrace hollow;
  CHECK_THROWS_AS(choose_base_space(cloud, {hollow}, MedoidOrthogonal{}),
                  DegenerateDirectionError);
}

TEST_CASE("the chart completes the normal to an orthonormal frame") {
  SplitRng rng(91);
  for (const int d : {2, 3, 5}) {
    for (int trial = 0; trial < 8; ++trial) {
      Vector normal(d);
      for (int j = 0; j < d; ++j) normal[j] = rng.normal();
      if (trial == 0) normal[0] = 0.0;  // reflector edge case
      const BaseSpace base(Vector::Zero(d), normal);
      const Matrix chart = base_space_chart(base);

      REQUIRE(chart.rows() == d);
      REQUIRE(chart.cols() == d - 1);
      CHECK((chart.transpose() * chart - Matrix::Identity(d - 1, d - 1))
                .cwiseAbs()
                .maxCoeff() < 1e-12);
      CHECK((chart.transpose() * base.normal()).cwiseAbs().maxCoeff() < 1e-12);
      // chart * chart^T is the projector onto the plane.
      const Matrix projector =
          Matrix::Identity(d, d) - base.normal() * base.normal().transpose();
      CHECK((chart * chart.transpose() - projector).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("chart coordinates reconstruct in-plane points") {
  SplitRng rng(92);
  const int d = 4;
  Vector normal(d), anchor(d);
  for (int j = 0; j < d; ++j) {
    normal[j] = rng.normal();
    anchor[j] = rng.normal();
  }
  const BaseSpace base(anchor, normal);
  const Matrix chart = base_space_chart(base);

  RowMatrix pts(20, d);
  for (int i = 0; i < 20; ++i) {
    Vector x(d);
    for (int j = 0; j < d; ++j) x[j] = rng.uniform(-2.0, 2.0);
    pts.row(i) = (x - base.normal() * base.offset(x)).transpose();  // onto the plane
  }
  const PointCloud on_plane{RowMatrix(pts)};
  const PointCloud coords = to_chart(base, chart, on_plane);
  REQUIRE(coords.dimension() == d - 1);
  REQUIRE(coords.size() == 20);
  for (int i = 0; i < 20; ++i) {
    const Vector rebuilt = base.anchor() + chart * coords.point(i);
    CHECK((rebuilt - Vector(pts.row(i))).norm() < 1e-6);
  }

  CHECK_THROWS_AS(to_chart(base, Matrix::Identity(d, d), on_plane), ValidationError);
}

TEST_CASE("project_all gives coherent signed coordinates along a segment") {
  const PointCloud cloud = segment_cloud(1.0, 0.005);
  const SpatialIndex index(cloud);
  TraceConfig config;
  config.step = 0.01;
  config.max_steps_each_way = 30;
  config.spec.radius = 0.03;
  const BaseSpace base = x_plane(0.5);

  const ProjectionResult result = project_all(index, base, config);
  CHECK(result.projections.size() + result.failures.size() ==
        static_cast<std::size_t>(cloud.size()));
  CHECK(result.residual.size() == static_cast<int>(result.projections.size()));

  // The orientation root is point 0 whose natural direction is +x, so the
  // signed coordinate of a point at x is 0.5 - x for every survivor.
  int previous = -1;
  for (const FiberProjection& projection : result.projections) {
    CHECK(projection.point_index > previous);
    previous = projection.point_index;
    const double x = cloud.point(projection.point_index)[0];
    CHECK(projection.signed_distance == doctest::Approx(0.5 - x).epsilon(1e-6));
    CHECK(projection.intersection[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK_NOTHROW(check_invariants(projection, base, 1e-8));
  }

  // Points more than 30 steps of arc from the plane cannot reach it.
  std::set<int> failed(result.failures.begin(), result.failures.end());
  for (int i = 0; i < cloud.size(); ++i) {
    const double gap = std::abs(cloud.point(i)[0] - 0.5);
    if (gap <= 0.28) CHECK(failed.count(i) == 0);
    if (gap >= 0.32) CHECK(failed.count(i) == 1);
  }
}

TEST_CASE("an unsupported point fails without sinking the rest") {
  std::vector<std::vector<double>> rows;
  for (int i = 0; i <= 100; ++i) rows.push_back({0.005 * i, 0.0});
  rows.push_back({50.0, 50.0});  // far from everything
  const PointCloud cloud = validate_cloud(rows);
  const SpatialIndex index(cloud);
  TraceConfig config;
  config.step = 0.01;
  config.max_steps_each_way = 30;
  config.spec.radius = 0.03;

  const ProjectionResult result = project_all(index, x_plane(0.25), config);
  std::set<int> failed(result.failures.begin(), result.failures.end());
  CHECK(failed.count(101) == 1);
  CHECK(result.projections.size() > 50);
}

TEST_CASE("project_all fails loudly when nothing reaches the plane") {
  const SpatialIndex index(segment_cloud(1.0, 0.005));
  TraceConfig config;
  config.step = 0.01;
  config.max_steps_each_way = 10;
  config.spec.radius = 0.03;
  CHECK_THROWS_AS(project_all(index, x_plane(5.0), config), NumericsError);
}

TEST_CASE("project_all is deterministic despite running in parallel") {
  const SpatialIndex index(circle_cloud(400));
  TraceConfig config;
  config.step = 0.01;
  config.max_steps_each_way = 60;
  config.spec.radius = 0.06;
  Vector anchor = Vector::Zero(2);
  Vector normal(2);
  normal << 0.0, 1.0;
  const BaseSpace base(anchor, normal);

  const ProjectionResult a = project_all(index, base, config);
  const ProjectionResult b = project_all(index, base, config);
  REQUIRE(a.projections.size() == b.projections.size());
  REQUIRE(a.failures == b.failures);
  for (std::size_t k = 0; k < a.projections.size(); ++k) {
    CHECK(a.projections[k].point_index == b.projections[k].point_index);
    CHECK(a.projections[k].signed_distance == b.projections[k].signed_distance);
    CHECK((a.projections[k].intersection - b.projections[k].intersection).norm() ==
          0.0);
  }
}
