#include <doctest.h>

#include "binform/error.hpp"
#include "binform/expr.hpp"
#include "generators.hpp"

using namespace binform;
using namespace binform::testing;

namespace {

ErrorKind kind_of(std::string_view text) {
  try {
    parse_polynomial(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error for " << text);
  return ErrorKind::Internal;
}

std::size_t offset_of(std::string_view text) {
  try {
    parse_polynomial(text);
  } catch (const Error& e) {
    return e.offset().value_or(9999);
  }
  return 9999;
}

}  // namespace

TEST_CASE("expansion goldens") {
  const BivariatePoly a = parse_polynomial("x*y^2");
  CHECK(a.terms().size() == 1);
  CHECK(a.coeff(1, 2) == Rational(1));

  const BivariatePoly b = parse_polynomial("(x^2+y^2)*(x^2+2*y^2)");
  CHECK(b.terms().size() == 3);
  CHECK(b.coeff(4, 0) == Rational(1));
  CHECK(b.coeff(2, 2) == Rational(3));
  CHECK(b.coeff(0, 4) == Rational(2));
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_polynomial("-x^2") == -pow(BivariatePoly::x(), 2));
  CHECK(parse_polynomial("x^2^2") == pow(BivariatePoly::x(), 4));
  CHECK(parse_polynomial("x - y - x") == -BivariatePoly::y());
  CHECK(parse_polynomial("2*x + 3*x*y") == Rational(2) * BivariatePoly::x() + Rational(3) * BivariatePoly::x() * BivariatePoly::y());
  CHECK(parse_polynomial("3/4*x") == Rational(3, 4) * BivariatePoly::x());
  CHECK(parse_polynomial("0.25*y") == Rational(1, 4) * BivariatePoly::y());
  CHECK(parse_polynomial("(x)") == BivariatePoly::x());
  CHECK(parse_polynomial(" x * ( y + 1 ) ") == BivariatePoly::x() * BivariatePoly::y() + BivariatePoly::x());
  const auto ast = parse_expression("x+y*x");
  CHECK(ast->kind == ExprAST::Kind::Sum);
  CHECK(ast->children[1]->kind == ExprAST::Kind::Product);
  CHECK(ast->children[1]->offset == 2);
}

TEST_CASE("parse errors") {
  CHECK(kind_of("x^2 - y^-1") == ErrorKind::NegativeExponent);
  CHECK(offset_of("x^2 - y^-1") == 8);
  CHECK(kind_of("xy") == ErrorKind::UnknownIdentifier);
  CHECK(kind_of("x + z") == ErrorKind::UnknownIdentifier);
  CHECK(offset_of("x + z") == 4);
  CHECK(kind_of("x +") == ErrorKind::SyntaxError);
  CHECK(kind_of("(x") == ErrorKind::SyntaxError);
  CHECK(kind_of("x)") == ErrorKind::SyntaxError);
  CHECK(kind_of("") == ErrorKind::SyntaxError);
  CHECK(kind_of("2 x") == ErrorKind::SyntaxError);
  CHECK(kind_of("x^1.5") == ErrorKind::SyntaxError);
  CHECK(kind_of("1/0") == ErrorKind::SyntaxError);
}

TEST_CASE("to_homogeneous") {
  CHECK(to_homogeneous(parse_polynomial("x*y^2")).coeffs() ==
        std::vector<Rational>{Rational(0), Rational(0), Rational(1), Rational(0)});
  CHECK(to_homogeneous(parse_polynomial("x^4 - y^4")).coeffs() ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0), Rational(-1)});
  try {
    to_homogeneous(parse_polynomial("x^2 - y"));
    FAIL("expected NotHomogeneous");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHomogeneous);
    CHECK(e.details() == std::vector<int>{2, 1});
  }
  CHECK_THROWS_AS(to_homogeneous(parse_polynomial("x - x")), Error);
}

TEST_CASE("canonical text") {
  CHECK(to_text(to_homogeneous(parse_polynomial("y^2*x"))) == "x*y^2");
  CHECK(to_text(to_homogeneous(parse_polynomial("x^3 - 3*x*y^2"))) == "x^3 - 3*x*y^2");
  CHECK(to_text(to_homogeneous(parse_polynomial("-1/2*x^2 + y^2"))) == "-1/2*x^2 + y^2");
  CHECK(to_text(to_homogeneous(parse_polynomial("7"))) == "7");
}

TEST_CASE("round trip on random forms") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const HomogeneousForm f = random_form(rng, static_cast<int>(uniform_int(rng, 1, 8)));
    const std::string text = to_text(f);
    CHECK_MESSAGE(to_homogeneous(parse_polynomial(text)).coeffs() == f.coeffs(), text);
  }
}

TEST_CASE("fuzz: errors are localized, never crashes") {
  Rng rng(13);
  const std::string alphabet = "xy0123456789+-*^()/. ";
  int failures = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 0, 64));
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(alphabet[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(alphabet.size()) - 1))]);
    try {
      parse_polynomial(s);
    } catch (const Error& e) {
      ++failures;
      CHECK(is_usage_error(e.kind()));
      REQUIRE(e.offset().has_value());
      CHECK(*e.offset() <= s.size());
    }
  }
  CHECK(failures > 1000);
}
