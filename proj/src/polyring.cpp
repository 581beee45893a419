#include "binform/polyring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "binform/error.hpp"

namespace binform {

// ---------------------------------------------------------------------------
// UnivariatePoly

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

UnivariatePoly UnivariatePoly::constant(const Rational& c) {
  return UnivariatePoly(std::vector<Rational>{c});
}

UnivariatePoly UnivariatePoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UnivariatePoly(std::move(v));
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UnivariatePoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UnivariatePoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::Internal, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational UnivariatePoly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UnivariatePoly::eval(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UnivariatePoly(std::move(d));
}

Rational UnivariatePoly::content() const {
  if (coeffs_.empty()) return Rational(0);
  Integer num_gcd(0), den_lcm(1);
  for (const auto& c : coeffs_) {
    if (sgn(c) == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

UnivariatePoly UnivariatePoly::primitive() const {
  if (coeffs_.empty()) return {};
  Rational c = content();
  if (sgn(leading()) < 0) c = -c;
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] / c;
  return UnivariatePoly(std::move(v));
}

UnivariatePoly operator+(const UnivariatePoly& u, const UnivariatePoly& v) {
  std::vector<Rational> r(std::max(u.coeffs_.size(), v.coeffs_.size()));
  for (std::size_t i = 0; i < u.coeffs_.size(); ++i) r[i] += u.coeffs_[i];
  for (std::size_t i = 0; i < v.coeffs_.size(); ++i) r[i] += v.coeffs_[i];
  return UnivariatePoly(std::move(r));
}

UnivariatePoly operator-(const UnivariatePoly& u) {
  std::vector<Rational> r(u.coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -u.coeffs_[i];
  return UnivariatePoly(std::move(r));
}

UnivariatePoly operator-(const UnivariatePoly& u, const UnivariatePoly& v) { return u + (-v); }

UnivariatePoly operator*(const UnivariatePoly& u, const UnivariatePoly& v) {
  if (u.is_zero() || v.is_zero()) return {};
  std::vector<Rational> r(u.coeffs_.size() + v.coeffs_.size() - 1);
  for (std::size_t i = 0; i < u.coeffs_.size(); ++i) {
    if (sgn(u.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < v.coeffs_.size(); ++j) r[i + j] += u.coeffs_[i] * v.coeffs_[j];
  }
  return UnivariatePoly(std::move(r));
}

UnivariatePoly operator*(const Rational& s, const UnivariatePoly& u) {
  std::vector<Rational> r(u.coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * u.coeffs_[i];
  return UnivariatePoly(std::move(r));
}

DivMod divmod(const UnivariatePoly& u, const UnivariatePoly& v) {
  if (v.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = u.coeffs();
  int dv = v.degree();
  int du = u.degree();
  if (du < dv) return {UnivariatePoly{}, u};
  std::vector<Rational> quo(static_cast<std::size_t>(du - dv) + 1);
  const Rational& lc = v.leading();
  for (int k = du - dv; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + dv)] / lc;
    quo[static_cast<std::size_t>(k)] = q;
    if (sgn(q) == 0) continue;
    for (int j = 0; j <= dv; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * v.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {UnivariatePoly(std::move(quo)), UnivariatePoly(std::move(rem))};
}

UnivariatePoly divide_exact(const UnivariatePoly& u, const UnivariatePoly& v) {
  DivMod dm = divmod(u, v);
  if (!dm.remainder.is_zero()) throw Error(ErrorKind::Internal, "inexact polynomial division");
  return dm.quotient;
}

namespace {

UnivariatePoly pseudo_remainder(const UnivariatePoly& a, const UnivariatePoly& b) {
  int delta = a.degree() - b.degree();
  Rational scale = pow(b.leading(), static_cast<unsigned>(delta + 1));
  return divmod(scale * a, b).remainder;
}

}  // namespace

UnivariatePoly gcd(const UnivariatePoly& u, const UnivariatePoly& v) {
  if (u.is_zero() && v.is_zero()) return {};
  if (u.is_zero()) return v.primitive();
  if (v.is_zero()) return u.primitive();
  UnivariatePoly a = u.primitive();
  UnivariatePoly b = v.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() == 0) return UnivariatePoly::constant(1);

  // Subresultant PRS: the correction factors keep the sequence integral and
  // well below the coefficient growth of the plain Euclidean PRS.
  Rational g(1), h(1);
  while (true) {
    int delta = a.degree() - b.degree();
    UnivariatePoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return b.primitive();
    if (r.degree() == 0) return UnivariatePoly::constant(1);
    a = b;
    b = (Rational(1) / (g * pow(h, static_cast<unsigned>(delta)))) * r;
    g = a.leading();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = pow(g, static_cast<unsigned>(delta)) / pow(h, static_cast<unsigned>(delta - 1));
    }
  }
}

SquarefreeDecomposition squarefree_decomposition(const UnivariatePoly& u) {
  if (u.is_zero()) throw Error(ErrorKind::ZeroForm, "squarefree decomposition of zero");
  SquarefreeDecomposition out;
  if (u.degree() == 0) {
    out.content = u.leading();
    return out;
  }
  UnivariatePoly f = u.primitive();
  UnivariatePoly a0 = gcd(f, f.derivative());
  UnivariatePoly b = divide_exact(f, a0);
  UnivariatePoly c = divide_exact(f.derivative(), a0);
  UnivariatePoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UnivariatePoly a = gcd(b, d);
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.factors.emplace_back(a, i);
    ++i;
  }
  Rational lead(1);
  for (const auto& [factor, m] : out.factors) lead *= pow(factor.leading(), static_cast<unsigned>(m));
  out.content = u.leading() / lead;
  return out;
}

// ---------------------------------------------------------------------------
// HomogeneousForm

HomogeneousForm::HomogeneousForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "form needs at least one coefficient");
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
  if (sign_ == 0) throw Error(ErrorKind::ZeroForm, "the zero form is not a valid input");
}

HomogeneousForm::HomogeneousForm(ZeroTag, int degree)
    : coeffs_(static_cast<std::size_t>(degree) + 1),
      primitive_(static_cast<std::size_t>(degree) + 1) {}

HomogeneousForm HomogeneousForm::zero(int degree) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  return HomogeneousForm(ZeroTag{}, degree);
}

HomogeneousForm HomogeneousForm::from_coeffs(std::vector<Rational> coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::InvalidArgument, "form needs at least one coefficient");
  bool all_zero = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
  if (all_zero) return zero(static_cast<int>(coeffs.size()) - 1);
  return HomogeneousForm(std::move(coeffs));
}

HomogeneousForm HomogeneousForm::x_power(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c.front() = 1;
  return HomogeneousForm(std::move(c));
}

HomogeneousForm HomogeneousForm::y_power(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c.back() = 1;
  return HomogeneousForm(std::move(c));
}

void HomogeneousForm::normalize() {
  Integer num_gcd(0), den_lcm(1);
  for (const auto& c : coeffs_) {
    if (sgn(c) == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  primitive_.assign(coeffs_.size(), Integer(0));
  if (num_gcd == 0) {
    sign_ = 0;
    scale_ = 0;
    return;
  }
  scale_ = Rational(num_gcd, den_lcm);
  scale_.canonicalize();
  sign_ = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Rational q = coeffs_[i] / scale_;
    primitive_[i] = q.get_num();
    if (sign_ == 0 && primitive_[i] != 0) sign_ = sgn(primitive_[i]);
  }
  if (sign_ < 0) {
    for (auto& p : primitive_) p = -p;
  }
}

HomogeneousForm HomogeneousForm::normalized() const {
  if (is_zero()) return *this;
  std::vector<Rational> c(primitive_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(primitive_[i]);
  return HomogeneousForm(std::move(c));
}

Rational HomogeneousForm::eval(const Rational& x, const Rational& y) const {
  int p = degree();
  Rational acc(0);
  for (int i = 0; i <= p; ++i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    acc += c * pow(x, static_cast<unsigned>(p - i)) * pow(y, static_cast<unsigned>(i));
  }
  return acc;
}

double HomogeneousForm::eval(double x, double y) const {
  // Horner in t = y/x is unstable near x = 0; walk both powers directly.
  int p = degree();
  double acc = 0.0;
  double ypow = 1.0;
  std::vector<double> xpow(static_cast<std::size_t>(p) + 1, 1.0);
  for (int i = 1; i <= p; ++i) xpow[static_cast<std::size_t>(i)] = xpow[static_cast<std::size_t>(i - 1)] * x;
  for (int i = 0; i <= p; ++i) {
    acc += coeffs_[static_cast<std::size_t>(i)].get_d() * xpow[static_cast<std::size_t>(p - i)] * ypow;
    ypow *= y;
  }
  return acc;
}

std::vector<double> HomogeneousForm::to_double() const {
  std::vector<double> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i].get_d();
  return v;
}

bool HomogeneousForm::proportional_to(const HomogeneousForm& other) const {
  return degree() == other.degree() && primitive_ == other.primitive_;
}

int HomogeneousForm::x_multiplicity() const {
  if (is_zero()) return degree();
  int m = 0;
  for (int i = degree(); i >= 0 && sgn(coeffs_[static_cast<std::size_t>(i)]) == 0; --i) ++m;
  return m;
}

int HomogeneousForm::y_multiplicity() const {
  if (is_zero()) return degree();
  int m = 0;
  for (int i = 0; i <= degree() && sgn(coeffs_[static_cast<std::size_t>(i)]) == 0; ++i) ++m;
  return m;
}

HomogeneousForm operator*(const HomogeneousForm& u, const HomogeneousForm& v) {
  std::vector<Rational> r(u.coeffs_.size() + v.coeffs_.size() - 1);
  for (std::size_t i = 0; i < u.coeffs_.size(); ++i) {
    if (sgn(u.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < v.coeffs_.size(); ++j) r[i + j] += u.coeffs_[i] * v.coeffs_[j];
  }
  return HomogeneousForm::from_coeffs(std::move(r));
}

HomogeneousForm operator*(const Rational& s, const HomogeneousForm& u) {
  std::vector<Rational> r(u.coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * u.coeffs_[i];
  return HomogeneousForm::from_coeffs(std::move(r));
}

HomogeneousForm operator+(const HomogeneousForm& u, const HomogeneousForm& v) {
  if (u.degree() != v.degree()) throw Error(ErrorKind::InvalidArgument, "adding forms of different degree");
  std::vector<Rational> r(u.coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = u.coeffs_[i] + v.coeffs_[i];
  return HomogeneousForm::from_coeffs(std::move(r));
}

HomogeneousForm operator-(const HomogeneousForm& u, const HomogeneousForm& v) {
  return u + Rational(-1) * v;
}

HomogeneousForm pow(const HomogeneousForm& f, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative power of a form");
  HomogeneousForm r = HomogeneousForm::from_coeffs({Rational(1)});
  for (int i = 0; i < n; ++i) r = r * f;
  return r;
}

UnivariatePoly to_univariate(const HomogeneousForm& f) { return UnivariatePoly(f.coeffs()); }

HomogeneousForm homogenize(const UnivariatePoly& g, int degree) {
  if (g.degree() > degree) throw Error(ErrorKind::InvalidArgument, "homogenization degree too small");
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i <= g.degree(); ++i) c[static_cast<std::size_t>(i)] = g.coeffs()[static_cast<std::size_t>(i)];
  return HomogeneousForm::from_coeffs(std::move(c));
}

std::pair<HomogeneousForm, HomogeneousForm> partials(const HomogeneousForm& f) {
  int p = f.degree();
  if (p == 0) throw Error(ErrorKind::DegreeZero, "partial derivatives of a constant form");
  std::vector<Rational> fx(static_cast<std::size_t>(p)), fy(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    fx[static_cast<std::size_t>(i)] = f.coeff(i) * (p - i);
    fy[static_cast<std::size_t>(i)] = f.coeff(i + 1) * (i + 1);
  }
  return {HomogeneousForm::from_coeffs(std::move(fx)), HomogeneousForm::from_coeffs(std::move(fy))};
}

namespace {

template <typename T>
std::vector<T> convolve(const std::vector<T>& u, const std::vector<T>& v) {
  std::vector<T> r(u.size() + v.size() - 1, T(0));
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) r[i + j] += u[i] * v[j];
  }
  return r;
}

template <typename T>
std::vector<T> compose_coeffs(std::span<const T> coeffs, const Mat2<T>& h) {
  const std::size_t p = coeffs.size() - 1;
  // X = a x + b y, Y = c x + d y as degree-one forms.
  const std::vector<T> X{h.a, h.b};
  const std::vector<T> Y{h.c, h.d};
  std::vector<std::vector<T>> xp{std::vector<T>{T(1)}}, yp{std::vector<T>{T(1)}};
  for (std::size_t k = 1; k <= p; ++k) {
    xp.push_back(convolve(xp.back(), X));
    yp.push_back(convolve(yp.back(), Y));
  }
  std::vector<T> out(p + 1, T(0));
  for (std::size_t i = 0; i <= p; ++i) {
    if (coeffs[i] == T(0)) continue;
    std::vector<T> term = convolve(xp[p - i], yp[i]);
    for (std::size_t j = 0; j <= p; ++j) out[j] += coeffs[i] * term[j];
  }
  return out;
}

}  // namespace

HomogeneousForm compose_linear(const HomogeneousForm& f, const Mat2q& h) {
  if (f.is_zero()) return f;
  std::span<const Rational> c(f.coeffs());
  return HomogeneousForm::from_coeffs(compose_coeffs<Rational>(c, h));
}

std::vector<double> compose_linear(std::span<const double> coeffs, const Mat2d& h) {
  if (coeffs.empty()) throw Error(ErrorKind::InvalidArgument, "empty coefficient vector");
  return compose_coeffs<double>(coeffs, h);
}

HomogeneousForm gcd_bivariate(const HomogeneousForm& u, const HomogeneousForm& v) {
  if (u.is_zero() && v.is_zero()) throw Error(ErrorKind::InvalidArgument, "gcd of two zero forms");
  if (u.is_zero()) return v.normalized();
  if (v.is_zero()) return u.normalized();
  int xm = std::min(u.x_multiplicity(), v.x_multiplicity());
  // Powers of y show up as powers of t in the dehomogenizations; powers of x
  // only as a drop in degree.
  UnivariatePoly g = gcd(to_univariate(u), to_univariate(v));
  return homogenize(g, g.degree() + xm).normalized();
}

HomogeneousForm divide_exact(const HomogeneousForm& u, const HomogeneousForm& v) {
  if (v.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero form");
  int dq = u.degree() - v.degree();
  if (dq < 0) throw Error(ErrorKind::Internal, "divisor degree exceeds dividend degree");
  if (u.is_zero()) return HomogeneousForm::zero(dq);
  if (v.x_multiplicity() > u.x_multiplicity()) throw Error(ErrorKind::Internal, "inexact form division");
  UnivariatePoly q = divide_exact(to_univariate(u), to_univariate(v));
  return homogenize(q, dq);
}

Rational resultant(const HomogeneousForm& u, const HomogeneousForm& v) {
  if (u.is_zero() || v.is_zero()) return Rational(0);
  const int m = u.degree(), n = v.degree();
  const int size = m + n;
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> S(static_cast<std::size_t>(size),
                                       std::vector<Rational>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) S[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = u.coeff(i);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) S[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = v.coeff(i);
  }
  Rational det(1);
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int r = col; r < size; ++r) {
      if (sgn(S[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(S[static_cast<std::size_t>(pivot)], S[static_cast<std::size_t>(col)]);
      det = -det;
    }
    const Rational piv = S[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det *= piv;
    for (int r = col + 1; r < size; ++r) {
      auto& row = S[static_cast<std::size_t>(r)];
      if (sgn(row[static_cast<std::size_t>(col)]) == 0) continue;
      Rational factor = row[static_cast<std::size_t>(col)] / piv;
      for (int k = col; k < size; ++k) {
        row[static_cast<std::size_t>(k)] -= factor * S[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
      }
    }
  }
  return det;
}

bool euler_check(const HomogeneousForm& f) {
  const int p = f.degree();
  if (p == 0) throw Error(ErrorKind::DegreeZero, "Euler identity needs degree >= 1");
  auto [fx, fy] = partials(f);
  // x * fx has coefficients (fx_0, ..., fx_{p-1}, 0); y * fy is (0, fy_0, ...).
  for (int i = 0; i <= p; ++i) {
    Rational lhs = f.coeff(i) * p;
    Rational rhs(0);
    if (i < p) rhs += fx.coeff(i);
    if (i > 0) rhs += fy.coeff(i - 1);
    if (lhs != rhs) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// BivariatePoly

BivariatePoly BivariatePoly::constant(const Rational& c) { return monomial(c, 0, 0); }
BivariatePoly BivariatePoly::x() { return monomial(Rational(1), 1, 0); }
BivariatePoly BivariatePoly::y() { return monomial(Rational(1), 0, 1); }

BivariatePoly BivariatePoly::monomial(const Rational& c, int i, int j) {
  BivariatePoly p;
  p.add_term(i, j, c);
  return p;
}

Rational BivariatePoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in monomial");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::set<int> BivariatePoly::total_degrees() const {
  std::set<int> s;
  for (const auto& [m, c] : terms_) s.insert(m.first + m.second);
  return s;
}

int BivariatePoly::total_degree() const {
  auto s = total_degrees();
  return s.empty() ? -1 : *s.rbegin();
}

int BivariatePoly::min_total_degree() const {
  auto s = total_degrees();
  return s.empty() ? -1 : *s.begin();
}

BivariatePoly BivariatePoly::partial_x() const {
  BivariatePoly r;
  for (const auto& [m, c] : terms_) {
    if (m.first > 0) r.add_term(m.first - 1, m.second, c * m.first);
  }
  return r;
}

BivariatePoly BivariatePoly::partial_y() const {
  BivariatePoly r;
  for (const auto& [m, c] : terms_) {
    if (m.second > 0) r.add_term(m.first, m.second - 1, c * m.second);
  }
  return r;
}

Rational BivariatePoly::eval(const Rational& x, const Rational& y) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    acc += c * pow(x, static_cast<unsigned>(m.first)) * pow(y, static_cast<unsigned>(m.second));
  }
  return acc;
}

double BivariatePoly::eval(double x, double y) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_) acc += c.get_d() * std::pow(x, m.first) * std::pow(y, m.second);
  return acc;
}

BivariatePoly operator+(const BivariatePoly& u, const BivariatePoly& v) {
  BivariatePoly r = u;
  for (const auto& [m, c] : v.terms_) r.add_term(m.first, m.second, c);
  return r;
}

BivariatePoly operator-(const BivariatePoly& u) {
  BivariatePoly r;
  for (const auto& [m, c] : u.terms_) r.add_term(m.first, m.second, -c);
  return r;
}

BivariatePoly operator-(const BivariatePoly& u, const BivariatePoly& v) { return u + (-v); }

BivariatePoly operator*(const BivariatePoly& u, const BivariatePoly& v) {
  BivariatePoly r;
  for (const auto& [m, c] : u.terms_) {
    for (const auto& [n, d] : v.terms_) r.add_term(m.first + n.first, m.second + n.second, c * d);
  }
  return r;
}

BivariatePoly operator*(const Rational& s, const BivariatePoly& u) {
  BivariatePoly r;
  for (const auto& [m, c] : u.terms_) r.add_term(m.first, m.second, s * c);
  return r;
}

BivariatePoly pow(const BivariatePoly& u, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative power");
  BivariatePoly r = BivariatePoly::constant(1);
  BivariatePoly base = u;
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

BivariatePoly to_bivariate(const HomogeneousForm& f) {
  BivariatePoly r;
  const int p = f.degree();
  for (int i = 0; i <= p; ++i) r.add_term(p - i, i, f.coeff(i));
  return r;
}

HomogeneousForm form_of_degree(const BivariatePoly& p, int degree) {
  std::vector<int> bad;
  for (int d : p.total_degrees()) {
    if (d != degree) bad.push_back(d);
  }
  if (!bad.empty()) {
    bad.insert(bad.begin(), degree);
    throw Error(ErrorKind::NotHomogeneous, "polynomial has terms outside degree " + std::to_string(degree),
                std::nullopt, bad);
  }
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i <= degree; ++i) c[static_cast<std::size_t>(i)] = p.coeff(degree - i, i);
  return HomogeneousForm::from_coeffs(std::move(c));
}

WeightVector::WeightVector(int s1_, int s2_, int d_) : s1(s1_), s2(s2_), d(d_) {
  if (s1 < 1 || s2 < 1 || d < 1) throw Error(ErrorKind::InvalidArgument, "weights and degree must be >= 1");
}

bool quasi_homogeneous_check(const BivariatePoly& g, const WeightVector& w) {
  if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "quasi-homogeneity of the zero polynomial");
  for (const auto& [m, c] : g.terms()) {
    if (m.first * w.s1 + m.second * w.s2 != w.d) return false;
  }
  return true;
}

int jet_order(const HomogeneousForm& f, const RationalPoint& z) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroForm, "jet order of the zero form");
  const int p = f.degree();
  // Exact substitution x -> z.x + u, y -> z.y + v.
  const BivariatePoly X = BivariatePoly::constant(z.x) + BivariatePoly::x();
  const BivariatePoly Y = BivariatePoly::constant(z.y) + BivariatePoly::y();
  std::vector<BivariatePoly> xp{BivariatePoly::constant(1)}, yp{BivariatePoly::constant(1)};
  for (int k = 1; k <= p; ++k) {
    xp.push_back(xp.back() * X);
    yp.push_back(yp.back() * Y);
  }
  BivariatePoly shifted;
  for (int i = 0; i <= p; ++i) {
    if (sgn(f.coeff(i)) == 0) continue;
    shifted = shifted + f.coeff(i) * (xp[static_cast<std::size_t>(p - i)] * yp[static_cast<std::size_t>(i)]);
  }
  return shifted.min_total_degree();
}

}  // namespace binform
