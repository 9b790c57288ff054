#include <doctest.h>

#include <cmath>

#include "crn/bundles.hpp"
#include "crn/dynamics.hpp"
#include "support.hpp"

using namespace crn;
using namespace crn::dynamics;

namespace {

const std::vector<std::string> xy{"x", "y"};
PolyVector F(const char* a, const char* b) { return PolyVector({parse_polynomial(a, xy), parse_polynomial(b, xy)}); }

double dist(const State& a, const State& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("field evaluation") {
  auto f = F("1 - x + y^2", "x*y - 2");
  auto v = eval_field(f, {2.0, 3.0});
  CHECK(v[0] == doctest::Approx(8.0));
  CHECK(v[1] == doctest::Approx(4.0));
  auto e = eval_field_extended(f, {0.5, 0.5});
  CHECK(static_cast<double>(e[0]) == doctest::Approx(0.75));
  CHECK_THROWS_AS(eval_field(f, {1.0}), Error);
}

TEST_CASE("integration approaches the base fixed points") {
  const auto& ex1 = example_bundle("ex1");
  auto t1 = integrate(ex1.base_field, {1.2, 0.3}, 60.0, 1e-9);
  CHECK(dist(t1.final_state(), {1.0, 0.25}) <= 1e-4);
  CHECK_FALSE(t1.hit_boundary);
  CHECK(t1.times.back() == doctest::Approx(60.0));

  const auto& ex2 = example_bundle("ex2");
  auto t2 = integrate(ex2.base_field, {2.0, 0.6}, 60.0, 1e-9);
  CHECK(dist(t2.final_state(), ex2.fixed_points[0].printed) <= 1e-3);
}

TEST_CASE("zero field stays put") {
  auto t = integrate(F("0", "0"), {0.7, 1.3}, 5.0, 1e-8);
  CHECK(t.final_state() == State{0.7, 1.3});
  CHECK(t.rejected_steps == 0);
}

TEST_CASE("integration argument checks") {
  auto f = F("-x", "-y");
  CHECK_THROWS_AS(integrate(f, {1.0, 1.0}, 1.0, 0.0), Error);
  CHECK_THROWS_AS(integrate(f, {1.0}, 1.0, 1e-6), Error);
  CHECK_THROWS_AS(integrate(f, {1.0, 1.0}, -1.0, 1e-6), Error);
}

TEST_CASE("linear decay matches the exponential") {
  auto t = integrate(F("-x", "-2*y"), {1.0, 1.0}, 2.0, 1e-10);
  CHECK(t.final_state()[0] == doctest::Approx(std::exp(-2.0)).epsilon(1e-8));
  CHECK(t.final_state()[1] == doctest::Approx(std::exp(-4.0)).epsilon(1e-8));
}

TEST_CASE("blow-up and extinction are flagged") {
  auto up = integrate(F("x^2", "0"), {1.0, 1.0}, 2.0, 1e-8);
  CHECK(up.hit_boundary);
  CHECK(up.times.back() < 1.0 + 1e-6);
  auto down = integrate(F("-1", "0"), {0.5, 1.0}, 2.0, 1e-8);
  CHECK(down.hit_boundary);
}

TEST_CASE("tolerance refinement") {
  const auto& ex1 = example_bundle("ex1");
  for (double tol : {1e-5, 1e-6, 1e-7}) {
    CAPTURE(tol);
    auto coarse = integrate(ex1.base_field, {1.2, 0.3}, 10.0, tol);
    auto fine = integrate(ex1.base_field, {1.2, 0.3}, 10.0, tol / 2);
    CHECK(fine.step_sizes.size() <= 2 * coarse.step_sizes.size());
    CHECK(dist(fine.final_state(), coarse.final_state()) <= 10 * tol);
  }
}

TEST_CASE("Newton fixed points") {
  const auto& ex1 = example_bundle("ex1");
  auto p = newton_fixed_point(ex1.base_field, {0.9, 0.3});
  CHECK(dist(p.x, {1.0, 0.25}) <= 1e-10);
  CHECK(p.residual <= kFixedPointTol);
  auto exact = newton_fixed_point(ex1.base_field, {1.0, 0.25});
  CHECK(exact.iterations == 0);
  CHECK_THROWS_AS(newton_fixed_point(F("x*y", "x*y"), {1.0, 1.0}), Error);
}

TEST_CASE("Jacobian agrees with finite differences") {
  testing_support::Rng rng(81);
  for (const auto& b : example_bundles()) {
    Jacobian jac(b.full_field);
    for (int k = 0; k < 100; ++k) {
      State x(b.species.size());
      for (auto& v : x) v = rng.real(0.2, 2.5);
      auto exact = jac.evaluate(x);
      auto fd = finite_difference_jacobian(b.full_field, x);
      double scale = 1, err = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
          scale = std::max(scale, std::abs(exact[i][j]));
          err = std::max(err, std::abs(exact[i][j] - fd[i][j]));
        }
      }
      CHECK(err / scale <= 1e-6);
    }
  }
}

TEST_CASE("roots along a line") {
  const auto h = example_bundle("ex1").scalar;
  auto r = line_roots(h, {1.0, 0.0}, 1, 0.1, 3.0);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx((3 - std::sqrt(5.0)) / 2).epsilon(1e-14));
  CHECK(r[1] == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-14));
  // a double root on the segment has no sign change and is not reported
  auto sq = parse_polynomial("(x - 1)^2 + 0*y", xy);
  CHECK(line_roots(sq, {0.0, 1.0}, 0, 0.5, 1.7).empty());
  CHECK_THROWS_AS(line_roots(h, {1.0}, 0, 0.0, 1.0), Error);
}

TEST_CASE("steady curve of a line") {
  auto h = parse_polynomial("x - 1", xy);
  Box box{{0.5, 0.5}, {2.0, 2.0}};
  auto s = sample_steady_curve(h, box, 11);
  // one crossing on each of the 11 horizontal lines; vertical lines lie off or on x = 1
  CHECK(s.points.size() >= 11);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    CHECK(s.points[i][0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.h_values[i] <= kRootPolish);
  }
  auto serial = sample_steady_curve_serial(h, box, 11);
  CHECK(serial.points == s.points);
}

TEST_CASE("steady curve points are steady states of the full field") {
  const auto& b = example_bundle("ex1");
  auto s = sample_steady_curve(b.scalar, b.box, 30, &b.full_field);
  REQUIRE(s.points.size() > 20);
  for (double r : s.residuals) CHECK(r <= kSteadyResidual);
  for (std::size_t i = 0; i < s.points.size(); i += 7) {
    auto t = integrate(b.full_field, s.points[i], 1.0, 1e-10);
    for (const auto& x : t.states) CHECK(dist(x, s.points[i]) <= 1e-6);
  }
  auto serial = sample_steady_curve_serial(b.scalar, b.box, 30, &b.full_field);
  CHECK(serial.points == s.points);
  CHECK(serial.residuals == s.residuals);
}

TEST_CASE("phase portrait grid") {
  Box box{{0.5, 0.5}, {2.0, 2.0}};
  auto zero = phase_portrait_grid(F("0", "0"), box, 4);
  REQUIRE(zero.size() == 16);
  for (const auto& g : zero) {
    CHECK(g.magnitude == 0);
    CHECK(g.direction == State{0, 0});
    CHECK(g.signs == std::vector<int>{0, 0});
  }

  auto corners = phase_portrait_grid(F("1 - x", "y - 1"), box, 2);
  REQUIRE(corners.size() == 4);
  CHECK(corners[0].x == State{0.5, 0.5});
  CHECK(corners[1].x == State{0.5, 2.0});
  CHECK(corners[2].x == State{2.0, 0.5});
  CHECK(corners[3].x == State{2.0, 2.0});
  CHECK(corners[1].signs == std::vector<int>{1, 1});
  CHECK(corners[2].signs == std::vector<int>{-1, -1});
  CHECK(std::hypot(corners[0].direction[0], corners[0].direction[1]) == doctest::Approx(1.0));

  auto grid = phase_portrait_grid(F("1 - x", "y - 1"), box, 16);
  for (const auto& g : grid) {
    if (g.x[0] < 1) CHECK(g.signs[0] == 1);
    if (g.x[0] > 1) CHECK(g.signs[0] == -1);
    if (g.x[1] < 1) CHECK(g.signs[1] == -1);
  }
  const auto& ex2 = example_bundle("ex2");
  auto par = phase_portrait_grid(ex2.full_field, ex2.box, 25);
  auto ser = phase_portrait_grid_serial(ex2.full_field, ex2.box, 25);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].x == ser[i].x);
    CHECK(par[i].direction == ser[i].direction);
  }
  CHECK_THROWS_AS(phase_portrait_grid(ex2.full_field, ex2.box, 1), Error);
}
