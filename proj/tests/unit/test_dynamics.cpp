#include <doctest.h>

#include <cmath>
#include <numbers>

#include "binform/dynamics.hpp"
#include "binform/error.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace binform;
using namespace binform::testing;

namespace {

HomogeneousForm form(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return HomogeneousForm(v);
}

BivariatePoly constant(double c) {
  mpq_class q(c);
  return BivariatePoly::constant(Rational(q));
}

PlanarPolyField linear_field(const Mat2q& A) {
  const BivariatePoly x = BivariatePoly::x(), y = BivariatePoly::y();
  return make_field(A.a * x + A.b * y, A.c * x + A.d * y);
}

double dist(Point u, Point v) { return std::hypot(u.x - v.x, u.y - v.y); }

}  // namespace

TEST_CASE("mat_exp closed forms") {
  const double pi = std::numbers::pi;
  CHECK(max_abs_diff(mat_exp(Mat2d{0, -2, 2, 0}, pi / 4), rotation(pi / 2)) < 1e-14);
  CHECK(max_abs_diff(mat_exp(Mat2d::identity(), std::log(2.0)), 2.0 * Mat2d::identity()) < 1e-14);
  CHECK(max_abs_diff(mat_exp(Mat2d{0, 1, 0, 0}, 3.5), Mat2d{1, 3.5, 0, 1}) < 1e-14);
  CHECK(max_abs_diff(mat_exp(Mat2d{1, 2, 3, 4}, 0), Mat2d::identity()) == 0);
}

TEST_CASE("mat_exp matches the series oracle and the group law") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Mat2d A{uniform_real(rng, -2, 2), uniform_real(rng, -2, 2), uniform_real(rng, -2, 2),
                  uniform_real(rng, -2, 2)};
    const double t = uniform_real(rng, -1, 1), s = uniform_real(rng, -1, 1);
    const Mat2d E = mat_exp(A, t);
    const Mat2d R = mat_exp_series(A, t);
    const double scale = std::fmax(1.0, std::fmax(std::fabs(R.a) + std::fabs(R.b), std::fabs(R.c) + std::fabs(R.d)));
    CHECK(max_abs_diff(E, R) / scale < 1e-12);
    const Mat2d lhs = mat_exp(A, t + s), rhs = mat_exp(A, t) * mat_exp(A, s);
    CHECK(max_abs_diff(lhs, rhs) / std::fmax(1.0, std::fabs(lhs.a) + std::fabs(lhs.d)) < 1e-10);
  }
  // Near the repeated-eigenvalue boundary.
  for (double eps : {1e-3, 1e-6, 1e-9, 1e-12, 0.0, -1e-12, -1e-9, -1e-6}) {
    const Mat2d A{1, 1, eps, 1};
    CHECK(max_abs_diff(mat_exp(A, 1.3), mat_exp_series(A, 1.3)) < 1e-11);
  }
}

TEST_CASE("shift_linear") {
  const double pi = std::numbers::pi;
  Point p = shift_linear(Mat2d{0, -2, 2, 0}, constant(pi / 4), {1, 0});
  CHECK(dist(p, {0, 1}) < 1e-14);
  CHECK(shift_linear(Mat2d{0, -2, 2, 0}, BivariatePoly(), {0.3, 0.7}) == Point{0.3, 0.7});
  CHECK(dist(shift_linear(Mat2d::identity(), constant(std::log(2.0)), {1, 1}), {2, 2}) < 1e-14);
}

TEST_CASE("integrate_flow") {
  const PlanarPolyField rot = linear_field(Mat2q{0, -2, 2, 0});
  const Trajectory tr = integrate_flow(rot, {1, 0}, std::numbers::pi);
  CHECK(tr.status == FlowStatus::Completed);
  CHECK(dist(tr.points.back().z, {1, 0}) < 1e-6);
  CHECK(tr.points.back().t == doctest::Approx(std::numbers::pi));

  const PlanarPolyField h = reduced_field(form({0, 0, 1, 0}));
  for (double t : {0.5, 1.0, -0.75}) {
    const Trajectory th = integrate_flow(h, {1, 1}, t);
    CHECK(dist(th.points.back().z, {std::exp(-2 * t), std::exp(t)}) < 1e-6);
  }

  const Trajectory zero = integrate_flow(rot, {0.2, 0.4}, 0.0);
  REQUIRE(zero.points.size() == 1);
  CHECK(zero.points[0].z == Point{0.2, 0.4});

  // dx/dt = x^2 blows up at t = 1 from x = 1.
  BivariatePoly x2 = pow(BivariatePoly::x(), 2);
  FlowConfig cfg;
  cfg.box = Rect{-10, -10, 10, 10};
  const Trajectory blow = integrate_flow(make_field(x2, BivariatePoly()), {1, 0}, 2.0, cfg);
  CHECK(blow.status == FlowStatus::ExitedBox);
  CHECK(blow.points.back().t < 1.0);

  FlowConfig tiny;
  tiny.max_steps = 5;
  CHECK(integrate_flow(rot, {1, 0}, 10.0, tiny).status == FlowStatus::StepLimit);
  CHECK(integrate_flow(rot, {0, 0}, 1.0).status == FlowStatus::Stalled);
}

TEST_CASE("shift_map_apply agrees with shift_linear on random linear fields") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Mat2q Aq{random_rational(rng, 8, 4), random_rational(rng, 8, 4), random_rational(rng, 8, 4),
             random_rational(rng, 8, 4)};
    Mat2d A = to_double(Aq);
    while (std::fmax(std::fabs(A.a) + std::fabs(A.b), std::fabs(A.c) + std::fabs(A.d)) > 2) {
      Aq = Rational(1, 2) * Aq;
      A = to_double(Aq);
    }
    const Rational sq(Integer(uniform_int(rng, -8, 8)), Integer(4));
    const BivariatePoly sigma = BivariatePoly::constant(sq);
    const Point z{uniform_real(rng, -1, 1), uniform_real(rng, -1, 1)};
    FlowConfig cfg;
    cfg.box = Rect{-1e6, -1e6, 1e6, 1e6};
    const Point a = shift_map_apply(linear_field(Aq), sigma, z, cfg);
    const Point b = shift_linear(A, sigma, z);
    CHECK(dist(a, b) / std::fmax(1.0, std::hypot(b.x, b.y)) < 1e-6);
  }
  CHECK(shift_map_apply(linear_field(Mat2q{0, -2, 2, 0}), BivariatePoly(), {0.5, 0.5}) == Point{0.5, 0.5});
}

TEST_CASE("shift_map_apply errors") {
  FlowConfig cfg;
  cfg.box = Rect{-10, -10, 10, 10};
  const PlanarPolyField blow = make_field(pow(BivariatePoly::x(), 2), BivariatePoly());
  CHECK_THROWS_AS(shift_map_apply(blow, BivariatePoly::constant(Rational(2)), {1, 0}, cfg), Error);
  FlowConfig tiny;
  tiny.max_steps = 3;
  CHECK_THROWS_AS(
      shift_map_apply(linear_field(Mat2q{0, -2, 2, 0}), BivariatePoly::constant(Rational(5)), {1, 0}, tiny),
      Error);
}

TEST_CASE("conservation along hFld orbits") {
  Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const ProductInstance inst = random_product(rng, 6);
    const PlanarPolyField h = reduced_field(inst.f);
    FlowConfig cfg;
    cfg.box = Rect{-4, -4, 4, 4};
    const Point z{uniform_real(rng, -1.5, 1.5), uniform_real(rng, -1.5, 1.5)};
    const Trajectory tr = integrate_flow(h, z, 1.0, cfg);
    const double f0 = inst.f.eval(z.x, z.y);
    double drift = 0;
    for (const auto& tp : tr.points) {
      if (!Rect{}.contains(tp.z)) break;
      drift = std::fmax(drift, std::fabs(inst.f.eval(tp.z.x, tp.z.y) - f0));
    }
    CHECK(drift < 1e-8 * (1 + std::fabs(f0)));
  }
  const HomogeneousForm f = form({0, 0, 1, 0});
  const Point r = shift_map_apply(reduced_field(f), BivariatePoly::constant(Rational(1, 2)), {0.7, -0.4});
  CHECK(std::fabs(f.eval(r.x, r.y) - f.eval(0.7, -0.4)) < 1e-8);
}

TEST_CASE("shift_regularity") {
  const PlanarPolyField up = make_field(BivariatePoly(), BivariatePoly::constant(Rational(1)));
  const std::vector<RationalPoint> samples{{Rational(0), Rational(0)}, {Rational(3, 2), Rational(-2)}};
  for (const auto& s : shift_regularity(up, -BivariatePoly::y(), samples)) {
    CHECK(s.regularity == Regularity::Degenerate);
    CHECK(s.lie_derivative == Rational(-1));
  }
  for (const auto& s : shift_regularity(up, BivariatePoly(), samples)) CHECK(s.regularity == Regularity::Regular);
  for (const auto& s : shift_regularity(up, BivariatePoly::y(), samples)) CHECK(s.regularity == Regularity::Regular);
  for (const auto& s : shift_regularity(up, Rational(-2) * BivariatePoly::y(), samples)) {
    CHECK(s.regularity == Regularity::Folding);
  }
}

TEST_CASE("invariant_contraction") {
  const WeightVector hom(1, 1, 3);
  CHECK(invariant_contraction(hom, {0.3, -0.8}, 1.0) == Point{0.3, -0.8});
  CHECK(invariant_contraction(hom, {0.3, -0.8}, 0.0) == Point{0, 0});
  const WeightVector w(3, 2, 6);
  const Point c = invariant_contraction(w, {1, 1}, 0.5);
  CHECK(c.x == 0.125);
  CHECK(c.y == 0.25);
  const double g = c.x * c.x + c.y * c.y * c.y;
  CHECK(g == doctest::Approx(1.0 / 32).epsilon(1e-15));
  CHECK_THROWS_AS(invariant_contraction(w, {1, 1}, 1.5), Error);
  CHECK_THROWS_AS(invariant_contraction(w, {1, 1}, -0.1), Error);

  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const HomogeneousForm f = random_form(rng, static_cast<int>(uniform_int(rng, 1, 6)));
    const Point z{uniform_real(rng, -2, 2), uniform_real(rng, -2, 2)};
    const double t = uniform_real(rng, 0.05, 1);
    const Point cz = invariant_contraction(WeightVector(1, 1, f.degree()), z, t);
    const double lhs = f.eval(cz.x, cz.y), rhs = std::pow(t, f.degree()) * f.eval(z.x, z.y);
    CHECK(std::fabs(lhs - rhs) <= 1e-10 * std::fmax(1e-300, std::fabs(rhs)) + 1e-15);
  }
}

TEST_CASE("level_set") {
  const HomogeneousForm circle = form({1, 0, 1});
  const auto curves = level_set(circle, 1.0, Rect{}, 256);
  REQUIRE(curves.size() == 1);
  const Polyline& pl = curves[0];
  CHECK(pl.size() > 100);
  CHECK(pl.front() == pl.back());
  double err = 0;
  for (const Point& z : pl) err = std::fmax(err, std::fabs(std::hypot(z.x, z.y) - 1.0));
  CHECK(err < 1e-3);

  CHECK(level_set(circle, -1.0, Rect{}, 256).empty());

  const HomogeneousForm b = form({0, 0, 1, 0});
  const auto zero = level_set(b, 0.0, Rect{}, 64);
  CHECK_FALSE(zero.empty());
  for (const auto& line : zero) {
    CHECK(line.size() >= 2);
    for (const Point& z : line) CHECK(std::fmin(std::fabs(z.x), std::fabs(z.y)) < 4.0 / 64 + 1e-12);
  }
  // Deterministic.
  CHECK(level_set(b, 0.3, Rect{}, 64) == level_set(b, 0.3, Rect{}, 64));
}

TEST_CASE("orbit_portrait") {
  const HomogeneousForm f = form({0, 0, 1, 0});
  std::vector<Point> seeds;
  for (int i = 0; i < 8; ++i) {
    const double a = std::numbers::pi / 8 + i * std::numbers::pi / 4;
    seeds.push_back({0.5 * std::cos(a), 0.5 * std::sin(a)});
  }
  const Portrait p = orbit_portrait(f, seeds, Rect{});
  REQUIRE(p.orbits.size() == 8);
  CHECK(p.origin_singular);
  for (const Orbit& o : p.orbits) {
    CHECK(o.relative_drift < 1e-8);
    for (const auto& tp : o.points) {
      CHECK(p.window.contains(tp.z));
      // Quadrants are invariant: the axes are orbits.
      CHECK(std::signbit(tp.z.x) == std::signbit(o.seed.x));
      CHECK(std::signbit(tp.z.y) == std::signbit(o.seed.y));
    }
  }
  for (const auto& lc : p.level_curves) {
    for (const auto& pl : lc.polylines) {
      CHECK(pl.size() >= 2);
      for (const Point& z : pl) CHECK(p.window.contains(z));
    }
  }

  const Portrait c = orbit_portrait(form({1, 0, 1}), {{1, 0}}, Rect{});
  REQUIRE(c.orbits.size() == 1);
  double err = 0;
  for (const auto& tp : c.orbits[0].points) err = std::fmax(err, std::fabs(std::hypot(tp.z.x, tp.z.y) - 1));
  CHECK(err < 1e-8);

  const Portrait out = orbit_portrait(f, {{5, 5}}, Rect{});
  REQUIRE(out.orbits.size() == 1);
  CHECK(out.orbits[0].seed_outside_window);
  CHECK(out.orbits[0].points.empty());
  CHECK_FALSE(out.level_curves.empty());

  const Portrait again = orbit_portrait(f, seeds, Rect{});
  REQUIRE(again.orbits.size() == p.orbits.size());
  for (std::size_t i = 0; i < p.orbits.size(); ++i) {
    REQUIRE(again.orbits[i].points.size() == p.orbits[i].points.size());
    for (std::size_t j = 0; j < p.orbits[i].points.size(); ++j) {
      CHECK(again.orbits[i].points[j].z == p.orbits[i].points[j].z);
    }
  }
}
