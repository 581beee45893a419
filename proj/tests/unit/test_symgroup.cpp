#include <doctest.h>

#include <cmath>
#include <numbers>

#include "binform/error.hpp"
#include "binform/symgroup.hpp"
#include "generators.hpp"

using namespace binform;
using namespace binform::testing;

namespace {

HomogeneousForm form(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return HomogeneousForm(v);
}

double sym_residual(const Mat2d& h, const Mat2d& B, const Mat2d& A, double lambda) {
  return max_abs_diff(h.transpose() * B * h, lambda * A);
}

}  // namespace

TEST_CASE("quadratic_transport") {
  TransportFamily id = quadratic_transport(Mat2d::identity(), Mat2d::identity());
  CHECK(max_abs_diff(id.member(0.3, 2.0), std::sqrt(2.0) * rotation(0.3)) < 1e-14);

  const Mat2d B = Mat2d::diag(1, 4);
  TransportFamily fam = quadratic_transport(Mat2d::identity(), B);
  CHECK(max_abs_diff(fam.left, Mat2d::diag(1, 0.5)) < 1e-14);
  CHECK(max_abs_diff(fam.left * fam.left, B.inverse()) < 1e-14);
  CHECK(sym_residual(fam.member(1.1, 3.0), B, Mat2d::identity(), 3.0) < 1e-13);

  TransportFamily same = quadratic_transport(Mat2d::diag(1, 2), Mat2d::diag(1, 2));
  CHECK(max_abs_diff(same.member(0, 1), Mat2d::identity()) < 1e-14);

  CHECK_THROWS_AS(quadratic_transport(Mat2d{1, 2, 2, 1}, Mat2d::identity()), Error);
  CHECK_THROWS_AS(quadratic_transport(Mat2d::identity(), Mat2d{-1, 0, 0, -1}), Error);
}

TEST_CASE("transport members satisfy h^T B h = lambda A on random definite pairs") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto spd = [&rng] {
      const double a = uniform_real(rng, 0.2, 3), c = uniform_real(rng, 0.2, 3);
      const double b = uniform_real(rng, -0.9, 0.9) * std::sqrt(a * c);
      return Mat2d{a, b, b, c};
    };
    const Mat2d A = spd(), B = spd();
    TransportFamily fam = quadratic_transport(A, B);
    const double theta = uniform_real(rng, 0, 6.3), lambda = uniform_real(rng, 0.1, 4);
    const Mat2d h = fam.member(theta, lambda);
    CHECK(sym_residual(h, B, A, lambda) < 1e-11);
    CHECK(h.det() > 0);
  }
}

TEST_CASE("continuous cases") {
  SymmetryGroup a = symmetry_group(form({0, 0, 0, 1}));
  REQUIRE(std::holds_alternative<CaseA>(a));
  CHECK(std::get<CaseA>(a).odd);
  CHECK_FALSE(contains_minus_identity(a));
  CHECK(invariance_residual(form({0, 0, 0, 1}), std::get<CaseA>(a).member(2.5, -1.25)) < 1e-12);

  SymmetryGroup c = symmetry_group(form({1, 0, 2, 0, 1}));
  REQUIRE(std::holds_alternative<CaseC>(c));
  CHECK(max_abs_diff(std::get<CaseC>(c).N, Mat2d::identity()) < 1e-12);
  CHECK(contains_minus_identity(c));

  // x^2 y^2: the quarter turn swaps the two lines.
  SymmetryGroup b = symmetry_group(form({0, 0, 1, 0, 0}));
  REQUIRE(std::holds_alternative<CaseB>(b));
  CHECK(std::get<CaseB>(b).quarter_turn_in_group);
  CHECK(std::get<CaseB>(b).minus_identity_in_group);
  // x y^2: neither.
  SymmetryGroup b2 = symmetry_group(form({0, 0, 1, 0}));
  REQUIRE(std::holds_alternative<CaseB>(b2));
  CHECK_FALSE(std::get<CaseB>(b2).quarter_turn_in_group);
  CHECK_FALSE(std::get<CaseB>(b2).minus_identity_in_group);
}

TEST_CASE("continuous families under non-axis lines") {
  Rng rng(8);
  // (2x - y)^3, (x + 3y)^2 (x - y), (x^2 + x y + 2 y^2)^2
  const HomogeneousForm fa = pow(form({-2, 1}), 3);
  const HomogeneousForm fb = pow(form({1, 3}), 2) * form({1, -1});
  const HomogeneousForm fc = pow(form({1, 1, 2}), 2);
  const auto ga = std::get<CaseA>(symmetry_group(fa));
  const auto gb = std::get<CaseB>(symmetry_group(fb));
  const auto gc = std::get<CaseC>(symmetry_group(fc));
  for (int i = 0; i < 30; ++i) {
    CHECK(invariance_residual(fa, ga.member(uniform_real(rng, 0.2, 3), uniform_real(rng, -2, 2))) < 1e-9);
    CHECK(invariance_residual(fb, gb.member(uniform_real(rng, -1, 1))) < 1e-9);
    CHECK(invariance_residual(fc, gc.member(uniform_real(rng, 0, 6.3))) < 1e-9);
  }
}

TEST_CASE("finite groups") {
  auto order = [](const HomogeneousForm& f) { return std::get<FiniteCyclic>(symmetry_group(f)).n; };
  CHECK(order(form({1, 0, -3, 0})) == 3);
  CHECK(order(form({0, 1, 0, 1, 0})) == 2);
  CHECK(order(form({1, 0, -6, 0, 1})) == 4);
  CHECK(order(form({1, 0, 1, 0})) == 1);  // x (x^2 + y^2)

  // (x^2 + y^2)(x^2 + 2 y^2): the swap (x, y) -> (-2^(1/4) y, 2^(-1/4) x) has order 4.
  const HomogeneousForm d = form({1, 0, 3, 0, 2});
  const FiniteCyclic g = std::get<FiniteCyclic>(symmetry_group(d));
  CHECK(g.n == 4);
  const Mat2d swap{0, -std::pow(2.0, 0.25), std::pow(2.0, -0.25), 0};
  CHECK(invariance_residual(d, swap) < 1e-14);
  CHECK(finite_order_of(swap, 10, 1e-12) == 4);

  const FiniteCyclic r3 = std::get<FiniteCyclic>(symmetry_group(form({1, 0, -3, 0})));
  CHECK(max_abs_diff(r3.generator, rotation(2 * std::numbers::pi / 3)) < 1e-9);
}

TEST_CASE("finite_order_of") {
  CHECK(finite_order_of(rotation(2 * std::numbers::pi / 3), 100, 1e-9) == 3);
  CHECK(finite_order_of(-Mat2d::identity(), 100, 1e-9) == 2);
  CHECK(finite_order_of(Mat2d::identity(), 100, 1e-9) == 1);
  CHECK_THROWS_AS(finite_order_of(rotation(1.0), 1000, 1e-9), Error);
  CHECK_THROWS_AS(finite_order_of(Mat2d::diag(2, 1), 10, 1e-9), Error);
}

TEST_CASE("oracle_scan on the reference forms") {
  auto near = [](const std::vector<Mat2d>& found, const Mat2d& h) {
    for (const auto& e : found) {
      if (max_abs_diff(e, h) < 1e-6) return true;
    }
    return false;
  };
  auto r3 = oracle_scan(form({1, 0, -3, 0}), 64, 1e-9);
  REQUIRE(r3.size() == 3);
  for (int m = 0; m < 3; ++m) CHECK(near(r3, rotation(2 * std::numbers::pi * m / 3)));
  auto e = oracle_scan(form({0, 1, 0, 1, 0}), 64, 1e-9);
  REQUIRE(e.size() == 2);
  CHECK(near(e, Mat2d::identity()));
  CHECK(near(e, -Mat2d::identity()));
  CHECK_THROWS_AS(oracle_scan(form({0, 1, 0, 1, 0}), 32, 1e-9), Error);
}

TEST_CASE("finite-case properties on random case D/E forms") {
  Rng rng(101);
  int tested = 0;
  while (tested < 25) {
    ProductInstance inst = random_product(rng, 6);
    const FactorizationStructure fs = factor_form(inst.f);
    const bool finite = (fs.l() == 0 && fs.k() >= 2) || (fs.l() >= 1 && fs.l() + 2 * fs.k() >= 3);
    if (!finite) continue;
    ++tested;
    const FiniteCyclic g = std::get<FiniteCyclic>(symmetry_group(inst.f, fs));
    CHECK(g.residual < 1e-9);
    if (fs.l() >= 1) CHECK((2 * fs.l()) % g.n == 0);
    CHECK(contains_minus_identity(g) == (inst.f.degree() % 2 == 0));
    const FactorizationStructure fine = refine(fs, Rational("1/1000000000000000"));
    for (const Mat2d& h : g.elements) {
      CHECK(h.det() == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(invariance_residual(inst.f, h) < 1e-9);
      const PermCandidate pc = induced_permutation(fine, h);
      bool identity_perm = true;
      for (std::size_t i = 0; i < pc.sigma.size(); ++i) identity_perm &= pc.sigma[i] == static_cast<int>(i);
      for (std::size_t j = 0; j < pc.tau.size(); ++j) identity_perm &= pc.tau[j] == static_cast<int>(j);
      for (std::size_t i = 0; i < pc.sigma.size(); ++i) {
        REQUIRE(pc.sigma[i] >= 0);
        CHECK(fs.linear[i].multiplicity == fs.linear[static_cast<std::size_t>(pc.sigma[i])].multiplicity);
      }
      for (std::size_t j = 0; j < pc.tau.size(); ++j) {
        REQUIRE(pc.tau[j] >= 0);
        CHECK(fs.quadratic[j].multiplicity == fs.quadratic[static_cast<std::size_t>(pc.tau[j])].multiplicity);
      }
      if (identity_perm) {
        CHECK((max_abs_diff(h, Mat2d::identity()) < 1e-9 || max_abs_diff(h, -Mat2d::identity()) < 1e-9));
      }
    }
  }
}

TEST_CASE("NotRefined on overlapping enclosures") {
  FactorizationStructure fs = factor_form(form({1, 0, -3, 0}));
  fs.linear[2].direction = fs.linear[1].root();
  CHECK_THROWS_AS(symmetry_group(form({1, 0, -3, 0}), fs), Error);
}
