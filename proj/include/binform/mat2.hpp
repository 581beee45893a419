#pragma once

#include <cmath>
#include <ostream>

#include "binform/error.hpp"
#include "binform/rational.hpp"

namespace binform {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct RationalPoint {
  Rational x;
  Rational y;
};

// Linear map (x, y) -> (a x + b y, c x + d y).
template <typename T>
struct Mat2 {
  T a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return Mat2{T(1), T(0), T(0), T(1)}; }
  static Mat2 diag(const T& p, const T& q) { return Mat2{p, T(0), T(0), q}; }

  T det() const { return T(a * d - b * c); }
  T trace() const { return T(a + d); }
  Mat2 transpose() const { return Mat2{a, c, b, d}; }

  Mat2 inverse() const {
    T D = det();
    if (D == T(0)) throw Error(ErrorKind::InvalidArgument, "singular 2x2 matrix");
    return Mat2{T(d / D), T(-b / D), T(-c / D), T(a / D)};
  }

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return Mat2{T(m.a * n.a + m.b * n.c), T(m.a * n.b + m.b * n.d),
                T(m.c * n.a + m.d * n.c), T(m.c * n.b + m.d * n.d)};
  }
  friend Mat2 operator*(const T& s, const Mat2& m) {
    return Mat2{T(s * m.a), T(s * m.b), T(s * m.c), T(s * m.d)};
  }
  friend Mat2 operator+(const Mat2& m, const Mat2& n) {
    return Mat2{T(m.a + n.a), T(m.b + n.b), T(m.c + n.c), T(m.d + n.d)};
  }
  friend Mat2 operator-(const Mat2& m, const Mat2& n) {
    return Mat2{T(m.a - n.a), T(m.b - n.b), T(m.c - n.c), T(m.d - n.d)};
  }
  friend Mat2 operator-(const Mat2& m) { return Mat2{T(-m.a), T(-m.b), T(-m.c), T(-m.d)}; }
  friend bool operator==(const Mat2& m, const Mat2& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }
};

using Mat2q = Mat2<Rational>;
using Mat2d = Mat2<double>;

inline Point apply(const Mat2d& m, Point z) {
  return {m.a * z.x + m.b * z.y, m.c * z.x + m.d * z.y};
}

inline Mat2d rotation(double theta) {
  double c = std::cos(theta), s = std::sin(theta);
  return Mat2d{c, -s, s, c};
}

inline Mat2d to_double(const Mat2q& m) {
  return Mat2d{m.a.get_d(), m.b.get_d(), m.c.get_d(), m.d.get_d()};
}

inline double max_abs_diff(const Mat2d& m, const Mat2d& n) {
  return std::fmax(std::fmax(std::fabs(m.a - n.a), std::fabs(m.b - n.b)),
                   std::fmax(std::fabs(m.c - n.c), std::fabs(m.d - n.d)));
}

// Angle of the rotation factor R in the polar decomposition h = R P (det h > 0).
inline double polar_angle(const Mat2d& h) { return std::atan2(h.c - h.b, h.a + h.d); }

inline std::ostream& operator<<(std::ostream& os, const Mat2d& m) {
  return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

}  // namespace binform
