#pragma once

// Exact polynomial arithmetic over the rationals: univariate polynomials,
// homogeneous binary forms and sparse bivariate polynomials.

#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "binform/mat2.hpp"
#include "binform/rational.hpp"

namespace binform {

/// Dense univariate polynomial, coefficients stored lowest degree first.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coeffs);

  static UnivariatePoly constant(const Rational& c);
  static UnivariatePoly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational eval(const Rational& t) const;
  double eval(double t) const;

  UnivariatePoly derivative() const;

  /// Positive rational c with (*this)/c integral and primitive.
  Rational content() const;
  /// Coprime integer coefficients with positive leading coefficient.
  UnivariatePoly primitive() const;

  friend UnivariatePoly operator+(const UnivariatePoly& u, const UnivariatePoly& v);
  friend UnivariatePoly operator-(const UnivariatePoly& u, const UnivariatePoly& v);
  friend UnivariatePoly operator-(const UnivariatePoly& u);
  friend UnivariatePoly operator*(const UnivariatePoly& u, const UnivariatePoly& v);
  friend UnivariatePoly operator*(const Rational& s, const UnivariatePoly& u);
  friend bool operator==(const UnivariatePoly& u, const UnivariatePoly& v) {
    return u.coeffs_ == v.coeffs_;
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  UnivariatePoly quotient;
  UnivariatePoly remainder;
};

DivMod divmod(const UnivariatePoly& u, const UnivariatePoly& v);

/// Exact quotient; throws Internal if v does not divide u.
UnivariatePoly divide_exact(const UnivariatePoly& u, const UnivariatePoly& v);

/// Subresultant-PRS gcd, primitive with positive leading coefficient.
/// gcd(0, 0) is the zero polynomial.
UnivariatePoly gcd(const UnivariatePoly& u, const UnivariatePoly& v);

struct SquarefreeDecomposition {
  Rational content;
  /// (factor, multiplicity), multiplicities strictly increasing, factors
  /// primitive with positive leading coefficient and squarefree.
  std::vector<std::pair<UnivariatePoly, int>> factors;
};

/// Yun's algorithm: u = content * prod factor^multiplicity.
SquarefreeDecomposition squarefree_decomposition(const UnivariatePoly& u);

/// Homogeneous binary form sum_i c_i x^(p-i) y^i.
///
/// Stored as sign * scale * primitive, where primitive has coprime integer
/// entries whose first nonzero entry is positive and scale is a positive
/// rational. Two forms are proportional iff their primitive parts agree.
/// The zero form is only available through zero(), as the degree-tagged
/// marker returned for vanishing partial derivatives.
class HomogeneousForm {
 public:
  /// Throws ZeroForm when every coefficient vanishes, InvalidArgument when
  /// coeffs is empty.
  explicit HomogeneousForm(std::vector<Rational> coeffs);
  static HomogeneousForm zero(int degree);
  static HomogeneousForm x_power(int n);
  static HomogeneousForm y_power(int n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return sign_ == 0; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<Integer>& primitive_coeffs() const { return primitive_; }
  const Rational& scale() const { return scale_; }
  int sign() const { return sign_; }

  /// The primitive representative: sign and scale stripped.
  HomogeneousForm normalized() const;

  Rational eval(const Rational& x, const Rational& y) const;
  double eval(double x, double y) const;
  std::vector<double> to_double() const;

  bool proportional_to(const HomogeneousForm& other) const;

  /// Multiplicity of x (resp. y) as a factor.
  int x_multiplicity() const;
  int y_multiplicity() const;

  friend bool operator==(const HomogeneousForm& u, const HomogeneousForm& v) {
    return u.coeffs_ == v.coeffs_;
  }
  friend HomogeneousForm operator*(const HomogeneousForm& u, const HomogeneousForm& v);
  friend HomogeneousForm operator*(const Rational& s, const HomogeneousForm& u);
  /// Degrees must agree.
  friend HomogeneousForm operator+(const HomogeneousForm& u, const HomogeneousForm& v);
  friend HomogeneousForm operator-(const HomogeneousForm& u, const HomogeneousForm& v);

  /// Builds a form, returning the zero marker instead of throwing.
  static HomogeneousForm from_coeffs(std::vector<Rational> coeffs);

 private:
  struct ZeroTag {};
  HomogeneousForm(ZeroTag, int degree);
  void normalize();

  std::vector<Rational> coeffs_;
  std::vector<Integer> primitive_;
  Rational scale_{0};
  int sign_ = 0;
};

HomogeneousForm pow(const HomogeneousForm& f, int n);

/// g(t) = f(1, t).
UnivariatePoly to_univariate(const HomogeneousForm& f);
/// x^degree * g(y/x); requires deg g <= degree.
HomogeneousForm homogenize(const UnivariatePoly& g, int degree);

std::pair<HomogeneousForm, HomogeneousForm> partials(const HomogeneousForm& f);

/// f(h(x, y)).
HomogeneousForm compose_linear(const HomogeneousForm& f, const Mat2q& h);
/// Float path: coefficient vector of f(h(x, y)).
std::vector<double> compose_linear(std::span<const double> coeffs, const Mat2d& h);

HomogeneousForm gcd_bivariate(const HomogeneousForm& u, const HomogeneousForm& v);

/// Exact quotient u / v of binary forms; throws Internal if v does not divide u.
HomogeneousForm divide_exact(const HomogeneousForm& u, const HomogeneousForm& v);

/// Resultant of two binary forms via the Sylvester determinant. Zero iff the
/// forms share a projective root (or one of them is the zero marker).
Rational resultant(const HomogeneousForm& u, const HomogeneousForm& v);

bool euler_check(const HomogeneousForm& f);

/// Sparse bivariate polynomial keyed by (x exponent, y exponent).
class BivariatePoly {
 public:
  using Monomial = std::pair<int, int>;

  BivariatePoly() = default;
  static BivariatePoly constant(const Rational& c);
  static BivariatePoly x();
  static BivariatePoly y();
  static BivariatePoly monomial(const Rational& c, int i, int j);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int i, int j) const;
  void add_term(int i, int j, const Rational& c);

  std::set<int> total_degrees() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int min_total_degree() const;

  BivariatePoly partial_x() const;
  BivariatePoly partial_y() const;

  Rational eval(const Rational& x, const Rational& y) const;
  double eval(double x, double y) const;

  friend BivariatePoly operator+(const BivariatePoly& u, const BivariatePoly& v);
  friend BivariatePoly operator-(const BivariatePoly& u, const BivariatePoly& v);
  friend BivariatePoly operator-(const BivariatePoly& u);
  friend BivariatePoly operator*(const BivariatePoly& u, const BivariatePoly& v);
  friend BivariatePoly operator*(const Rational& s, const BivariatePoly& u);
  friend bool operator==(const BivariatePoly& u, const BivariatePoly& v) {
    return u.terms_ == v.terms_;
  }

 private:
  std::map<Monomial, Rational> terms_;
};

BivariatePoly pow(const BivariatePoly& u, int n);

BivariatePoly to_bivariate(const HomogeneousForm& f);
/// Reads the degree-`degree` part of p as a form; zero marker if p is zero.
/// Throws NotHomogeneous if p has terms of any other total degree.
HomogeneousForm form_of_degree(const BivariatePoly& p, int degree);

struct WeightVector {
  int s1 = 1;
  int s2 = 1;
  int d = 1;

  WeightVector() = default;
  WeightVector(int s1, int s2, int d);
};

bool quasi_homogeneous_check(const BivariatePoly& g, const WeightVector& w);

/// Lowest total degree in the Taylor expansion of f at z; 0 iff f(z) != 0.
int jet_order(const HomogeneousForm& f, const RationalPoint& z);

}  // namespace binform
