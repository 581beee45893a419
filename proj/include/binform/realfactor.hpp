#pragma once

// Real factorization structure of a binary form:
//   f = sign * scale * x^a * prod (y - t_i x)^alpha_i * prod Q_j^beta_j
// with exact counts and multiplicities and certified, refinable enclosures
// for the real roots t_i and the definite quadratic factors Q_j.

#include <array>
#include <utility>
#include <variant>
#include <vector>

#include "binform/mat2.hpp"
#include "binform/polyring.hpp"

namespace binform {

struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return Rational(hi - lo); }
  Rational midpoint() const { return Rational((lo + hi) / 2); }
  bool overlaps(const Interval& other) const { return !(hi < other.lo || other.hi < lo); }
};

struct IsolatedRoot {
  UnivariatePoly defining;  // squarefree, exactly one real root in [lo, hi]
  Interval interval;
  double approx = 0.0;
};

/// The linear factor x (root at infinity of f(1, t)).
struct ExactAxis {
  friend bool operator==(const ExactAxis&, const ExactAxis&) = default;
};

struct LinearFactor {
  std::variant<ExactAxis, IsolatedRoot> direction;
  int multiplicity = 1;

  bool is_axis() const { return std::holds_alternative<ExactAxis>(direction); }
  const IsolatedRoot& root() const { return std::get<IsolatedRoot>(direction); }
  /// Unit vector spanning the zero line {L = 0}.
  Point line_direction() const;
  /// Coefficients (c0, c1) of L = c0 x + c1 y.
  std::pair<double, double> coefficients() const;
};

/// Disk {|z - (re + i im)| <= radius} holding exactly one root of a layer.
struct ComplexEnclosure {
  Rational re;
  Rational im;
  Rational radius;
};

/// Q = a x^2 + b x y + c y^2 with c = 1 and (t - z)(t - conj z) = Q(1, t).
struct QuadraticFactor {
  UnivariatePoly sq_poly;  // squarefree layer polynomial owning the pair
  ComplexEnclosure root;   // the member of the pair in the upper half-plane
  Interval a;
  Interval b;
  std::array<double, 3> coeffs_approx{};  // (a, b, c)
  int multiplicity = 1;

  /// Symmetric matrix [[a, b/2], [b/2, c]] of the form.
  Mat2d matrix() const;
};

struct FactorizationStructure {
  int sign = 1;
  Rational scale;  // positive; f = sign * scale * product of normalized factors
  int degree = 0;
  std::vector<LinearFactor> linear;
  std::vector<QuadraticFactor> quadratic;

  int l() const { return static_cast<int>(linear.size()); }
  int k() const { return static_cast<int>(quadratic.size()); }
};

struct Dehomogenized {
  UnivariatePoly g;
  int x_mult = 0;
};

Dehomogenized dehomogenize(const HomogeneousForm& f);

/// Distinct real roots of a nonzero polynomial (Sturm count).
int count_real_roots(const UnivariatePoly& u);

std::vector<IsolatedRoot> isolate_real_roots(const UnivariatePoly& u);

/// Bisects until the enclosing interval is narrower than eps.
IsolatedRoot refine_root(const IsolatedRoot& r, const Rational& eps);

FactorizationStructure factor_form(const HomogeneousForm& f);

FactorizationStructure refine(const FactorizationStructure& fs, const Rational& eps);

/// Coefficients of sign * scale * product of factors, from the approximate
/// root values. Matches f's coefficients up to the enclosure widths.
std::vector<double> reconstruct_coefficients(const FactorizationStructure& fs);

/// Whether all root intervals and quadratic enclosures are pairwise disjoint.
bool enclosures_disjoint(const FactorizationStructure& fs);

}  // namespace binform
