#include <doctest.h>

#include "binform/error.hpp"
#include "binform/polyring.hpp"
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

UnivariatePoly upoly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UnivariatePoly(v);
}

}  // namespace

TEST_CASE("forms are stored as sign, scale and primitive part") {
  HomogeneousForm f(std::vector<Rational>{Rational(-4, 3), Rational(0), Rational(2)});
  CHECK(f.sign() == -1);
  CHECK(f.scale() == Rational(2, 3));
  CHECK(f.primitive_coeffs() == std::vector<Integer>{2, 0, -3});
  CHECK(f.proportional_to(form({-2, 0, 3})));
  CHECK_FALSE(f.proportional_to(form({2, 0, 3})));
  CHECK_THROWS_AS(form({0, 0, 0}), Error);
}

TEST_CASE("partials") {
  auto [fx, fy] = partials(form({0, 0, 1, 0}));  // x y^2
  CHECK(fx == form({0, 0, 1}));
  CHECK(fy == form({0, 2, 0}));
  auto [gx, gy] = partials(form({1, 0, 1}));
  CHECK(gx == form({2, 0}));
  CHECK(gy == form({0, 2}));
  auto [hx, hy] = partials(form({0, 0, 0, 1}));  // y^3
  CHECK(hx.is_zero());
  CHECK(hx.degree() == 2);
  CHECK(hy == form({0, 0, 3}));
  CHECK_THROWS_AS(partials(form({5})), Error);
}

TEST_CASE("compose_linear") {
  Mat2q rot{Rational(3, 5), Rational(-4, 5), Rational(4, 5), Rational(3, 5)};
  CHECK(compose_linear(form({1, 0, 1}), rot) == form({1, 0, 1}));
  Mat2q shear{Rational(1), Rational(1), Rational(0), Rational(1)};
  CHECK(compose_linear(form({1, 0, 0}), shear) == form({1, 2, 1}));
  // x^2 y^3 under (e^{3t} x, e^{-2t} y).
  const double t = 0.37;
  const std::vector<double> c{0, 0, 0, 1, 0, 0};
  auto g = compose_linear(c, Mat2d::diag(std::exp(3 * t), std::exp(-2 * t)));
  CHECK(max_relative_coeff_diff(c, g) < 1e-14);
}

TEST_CASE("compose_linear matches binomial expansion and composes exactly") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    HomogeneousForm f = random_form(rng, static_cast<int>(uniform_int(rng, 1, 7)));
    Mat2q h = random_gl_plus(rng), g = random_gl_plus(rng);
    CHECK(compose_linear(f, Mat2q::identity()) == f);
    CHECK(compose_linear(compose_linear(f, h), g) == compose_linear(f, h * g));
    auto exact = compose_linear(f, h).to_double();
    auto oracle = compose_by_binomials(f.to_double(), to_double(h));
    CHECK(max_relative_coeff_diff(oracle, exact) < 1e-12);
  }
}

TEST_CASE("gcd_bivariate examples") {
  CHECK(gcd_bivariate(form({0, 2, 0, 0}) * form({0, 1}), form({2, 1, 0, 0}) * form({0, 1}))
            .proportional_to(form({0, 1, 0, 0})));
  CHECK(gcd_bivariate(form({0, 0, 1}), form({0, 2, 0})) == form({0, 1}));
  CHECK(gcd_bivariate(form({1, 0, -1}), form({1, 2, 1})) == form({1, 1}));
  CHECK(gcd_bivariate(form({0, 2, 0, 0}), form({0, 0, 2, 0})) == form({0, 1, 0}));
  CHECK_THROWS_AS(gcd_bivariate(HomogeneousForm::zero(2), HomogeneousForm::zero(2)), Error);
}

TEST_CASE("gcd_bivariate divides both and leaves coprime cofactors") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    HomogeneousForm common = random_form(rng, static_cast<int>(uniform_int(rng, 0, 3)), 4);
    HomogeneousForm u = common * random_form(rng, static_cast<int>(uniform_int(rng, 1, 4)), 4);
    HomogeneousForm v = common * random_form(rng, static_cast<int>(uniform_int(rng, 1, 4)), 4);
    HomogeneousForm g = gcd_bivariate(u, v);
    CHECK(g.degree() >= common.degree());
    HomogeneousForm a = divide_exact(u, g), b = divide_exact(v, g);
    CHECK(a * g == u);
    CHECK(b * g == v);
    CHECK(sgn(resultant(a, b)) != 0);
  }
}

TEST_CASE("resultant detects common projective roots") {
  CHECK(resultant(form({1, 1}), form({1, -1})) != 0);
  CHECK(resultant(form({1, 0, -1}), form({1, 1})) == 0);
  CHECK(resultant(form({0, 1}), form({0, 0, 1})) == 0);  // share y = 0
  CHECK(resultant(form({1, 0}), form({0, 1})) != 0);
}

TEST_CASE("squarefree_decomposition") {
  auto d1 = squarefree_decomposition(upoly({0, 0, 0, 1}));
  REQUIRE(d1.factors.size() == 1);
  CHECK(d1.factors[0].first == upoly({0, 1}));
  CHECK(d1.factors[0].second == 3);

  auto d2 = squarefree_decomposition(upoly({2, -3, 0, 1}));
  REQUIRE(d2.factors.size() == 2);
  CHECK(d2.factors[0] == std::pair{upoly({2, 1}), 1});
  CHECK(d2.factors[1] == std::pair{upoly({-1, 1}), 2});

  auto d3 = squarefree_decomposition(upoly({1, 0, 1}));
  REQUIRE(d3.factors.size() == 1);
  CHECK(d3.factors[0] == std::pair{upoly({1, 0, 1}), 1});
}

TEST_CASE("squarefree_decomposition reconstructs its input") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    UnivariatePoly u = UnivariatePoly::constant(random_nonzero_rational(rng));
    const int parts = static_cast<int>(uniform_int(rng, 1, 4));
    for (int i = 0; i < parts; ++i) {
      UnivariatePoly base({random_rational(rng, 5), random_rational(rng, 5), random_nonzero_rational(rng, 3)});
      for (long m = uniform_int(rng, 1, 3); m > 0; --m) u = u * base;
    }
    auto d = squarefree_decomposition(u);
    UnivariatePoly r = UnivariatePoly::constant(d.content);
    int last = 0;
    for (const auto& [fac, m] : d.factors) {
      CHECK(m > last);
      last = m;
      CHECK(gcd(fac, fac.derivative()).degree() == 0);
      for (int i = 0; i < m; ++i) r = r * fac;
    }
    CHECK(r == u);
  }
}

TEST_CASE("euler identity holds on random forms") {
  CHECK(euler_check(form({0, 1, 0, 0})));
  CHECK(euler_check(form({1, 0, 3, 0, 2})));
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    CHECK(euler_check(random_form(rng, static_cast<int>(uniform_int(rng, 1, 8)))));
  }
}

TEST_CASE("quasi_homogeneous_check") {
  BivariatePoly g = BivariatePoly::monomial(Rational(1), 2, 0) + BivariatePoly::monomial(Rational(1), 0, 3);
  CHECK(quasi_homogeneous_check(g, WeightVector(3, 2, 6)));
  CHECK_FALSE(quasi_homogeneous_check(g, WeightVector(1, 1, 2)));
  CHECK(quasi_homogeneous_check(BivariatePoly::monomial(Rational(1), 1, 2), WeightVector(2, 1, 4)));
  CHECK_THROWS_AS(WeightVector(0, 1, 1), Error);
}

TEST_CASE("jet_order examples") {
  HomogeneousForm f = form({0, 0, 1, 0});
  CHECK(jet_order(f, {Rational(0), Rational(0)}) == 3);
  CHECK(jet_order(f, {Rational(1), Rational(0)}) == 2);
  CHECK(jet_order(f, {Rational(0), Rational(1)}) == 1);
  CHECK(jet_order(f, {Rational(1), Rational(1)}) == 0);
}

TEST_CASE("jet_order agrees with repeated differentiation") {
  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    ProductInstance inst = random_product(rng, 7);
    CHECK(jet_order(inst.f, {Rational(0), Rational(0)}) == inst.f.degree());
    // Points on rational zero lines a x + b y = 0 are (b, -a) multiples.
    for (int s = -2; s <= 2; ++s) {
      RationalPoint z{random_rational(rng, 3), random_rational(rng, 3)};
      if (s == 0) z = {Rational(s), Rational(s)};
      const int j = jet_order(inst.f, z);
      CHECK(j == jet_order_by_derivatives(inst.f, z));
      // A power of a single line keeps jet order p along the whole line.
      const bool single_line = inst.l == 1 && inst.k == 0;
      if (sgn(inst.f.eval(z.x, z.y)) == 0 && (sgn(z.x) != 0 || sgn(z.y) != 0) && !single_line) {
        CHECK(j < inst.f.degree());
      }
    }
    // On the line a x + b y = 0 the jet order is that line's multiplicity.
    for (std::size_t i = 0; i < inst.lines.size(); ++i) {
      const Rational s = random_nonzero_rational(rng, 3);
      RationalPoint z{Rational(inst.lines[i].second * s), Rational(-inst.lines[i].first * s)};
      CHECK(jet_order(inst.f, z) == inst.alpha[i]);
    }
  }
}

TEST_CASE("bivariate to form conversions") {
  BivariatePoly p = BivariatePoly::x() * BivariatePoly::y() * BivariatePoly::y();
  CHECK(form_of_degree(p, 3) == form({0, 0, 1, 0}));
  BivariatePoly q = BivariatePoly::x() * BivariatePoly::x() - BivariatePoly::y();
  try {
    (void)form_of_degree(q, 2);
    FAIL("expected NotHomogeneous");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHomogeneous);
  }
  CHECK(to_bivariate(form({1, 0, 1})) == BivariatePoly::x() * BivariatePoly::x() + BivariatePoly::y() * BivariatePoly::y());
}

TEST_CASE("univariate gcd is primitive") {
  UnivariatePoly a = upoly({-1, 0, 1}), b = upoly({1, 2, 1});
  CHECK(gcd(a, b) == upoly({1, 1}));
  CHECK(gcd(UnivariatePoly(), UnivariatePoly()).is_zero());
  CHECK(gcd(upoly({6, 4}), UnivariatePoly()) == upoly({3, 2}));
}
