#include "binform/realfactor.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>

#include "binform/error.hpp"

namespace binform {

// ---------------------------------------------------------------------------
// Factor accessors

Point LinearFactor::line_direction() const {
  if (is_axis()) return {0.0, 1.0};
  double t = root().approx;
  double n = std::hypot(1.0, t);
  return {1.0 / n, t / n};
}

std::pair<double, double> LinearFactor::coefficients() const {
  if (is_axis()) return {1.0, 0.0};
  return {-root().approx, 1.0};
}

Mat2d QuadraticFactor::matrix() const {
  return Mat2d{coeffs_approx[0], coeffs_approx[1] / 2, coeffs_approx[1] / 2, coeffs_approx[2]};
}

// ---------------------------------------------------------------------------
// Dehomogenization and Sturm sequences

Dehomogenized dehomogenize(const HomogeneousForm& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroForm, "cannot dehomogenize the zero form");
  UnivariatePoly g = to_univariate(f);
  return {g, f.degree() - g.degree()};
}

namespace {

// Divides by a positive constant only, so signs are preserved.
UnivariatePoly shrink(const UnivariatePoly& u) {
  if (u.is_zero()) return u;
  return (Rational(1) / u.content()) * u;
}

class SturmChain {
 public:
  explicit SturmChain(const UnivariatePoly& u) {
    seq_.push_back(shrink(u));
    seq_.push_back(shrink(u.derivative()));
    while (!seq_.back().is_zero()) {
      UnivariatePoly r = divmod(seq_[seq_.size() - 2], seq_.back()).remainder;
      if (r.is_zero()) break;
      seq_.push_back(shrink(-r));
    }
  }

  int variations(const Rational& t) const {
    int count = 0, last = 0;
    for (const auto& s : seq_) {
      int v = sgn(s.eval(t));
      if (v == 0) continue;
      if (last != 0 && v != last) ++count;
      last = v;
    }
    return count;
  }

  int variations_at_infinity(bool negative) const {
    int count = 0, last = 0;
    for (const auto& s : seq_) {
      if (s.is_zero()) continue;
      int v = sgn(s.leading());
      if (negative && (s.degree() % 2 == 1)) v = -v;
      if (last != 0 && v != last) ++count;
      last = v;
    }
    return count;
  }

 private:
  std::vector<UnivariatePoly> seq_;
};

Rational cauchy_bound(const UnivariatePoly& u) {
  Rational m(0);
  const Rational lc = abs(u.leading());
  for (int i = 0; i < u.degree(); ++i) {
    Rational r = abs(u.coeffs()[static_cast<std::size_t>(i)]) / lc;
    if (r > m) m = r;
  }
  return m + 1;
}

// A point of (lo, hi) near the midpoint where u does not vanish.
Rational split_point(const UnivariatePoly& u, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  Rational w = (hi - lo) / 16;
  for (int j = 1; sgn(u.eval(mid)) == 0; ++j) {
    mid = (lo + hi) / 2 + (j % 2 == 1 ? Rational(w * ((j + 1) / 2)) : Rational(-w * (j / 2)));
    if (j > 14) w /= 2;
  }
  return mid;
}

void isolate(const UnivariatePoly& u, const SturmChain& chain, const Rational& lo, int vlo,
             const Rational& hi, int vhi, std::vector<IsolatedRoot>& out) {
  int count = vlo - vhi;
  if (count == 0) return;
  if (count == 1) {
    Interval iv{lo, hi};
    out.push_back({u, iv, iv.midpoint().get_d()});
    return;
  }
  Rational mid = split_point(u, lo, hi);
  int vmid = chain.variations(mid);
  isolate(u, chain, lo, vlo, mid, vmid, out);
  isolate(u, chain, mid, vmid, hi, vhi, out);
}

}  // namespace

int count_real_roots(const UnivariatePoly& u) {
  if (u.is_zero()) throw Error(ErrorKind::InvalidArgument, "root count of the zero polynomial");
  if (u.degree() == 0) return 0;
  SturmChain chain(u);
  return chain.variations_at_infinity(true) - chain.variations_at_infinity(false);
}

std::vector<IsolatedRoot> isolate_real_roots(const UnivariatePoly& u) {
  if (u.is_zero()) throw Error(ErrorKind::InvalidArgument, "root isolation of the zero polynomial");
  std::vector<IsolatedRoot> out;
  if (u.degree() <= 0) return out;
  SturmChain chain(u);
  Rational bound = cauchy_bound(u);
  Rational lo = -bound, hi = bound;
  isolate(u, chain, lo, chain.variations(lo), hi, chain.variations(hi), out);
  return out;
}

IsolatedRoot refine_root(const IsolatedRoot& r, const Rational& eps) {
  if (sgn(eps) <= 0) throw Error(ErrorKind::InvalidArgument, "refinement width must be positive");
  IsolatedRoot out = r;
  if (out.interval.width() < eps) return out;
  const UnivariatePoly& u = out.defining;
  if (u.degree() == 1) {
    Rational root = -u.coeffs()[0] / u.coeffs()[1];
    Rational w = eps / 4;
    out.interval = {root - w, root + w};
    out.approx = root.get_d();
    return out;
  }
  int slo = sgn(u.eval(out.interval.lo));
  while (out.interval.width() >= eps) {
    Rational mid = out.interval.midpoint();
    int sm = sgn(u.eval(mid));
    if (sm == 0) {
      Rational w = std::min(Rational(eps / 4), Rational(out.interval.width() / 4));
      out.interval = {mid - w, mid + w};
      out.approx = mid.get_d();
      return out;
    }
    if (sm == slo) {
      out.interval.lo = mid;
    } else {
      out.interval.hi = mid;
    }
  }
  out.approx = out.interval.midpoint().get_d();
  return out;
}

// ---------------------------------------------------------------------------
// Complex root pairs

namespace {

struct CQ {
  Rational re;
  Rational im;
};

CQ operator-(const CQ& a, const CQ& b) { return {a.re - b.re, a.im - b.im}; }
CQ operator*(const CQ& a, const CQ& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Rational norm2(const CQ& a) { return a.re * a.re + a.im * a.im; }
CQ operator/(const CQ& a, const CQ& b) {
  Rational n = norm2(b);
  CQ num = a * CQ{b.re, -b.im};
  return {num.re / n, num.im / n};
}

CQ eval(const UnivariatePoly& u, const CQ& z) {
  CQ acc{Rational(0), Rational(0)};
  for (auto it = u.coeffs().rbegin(); it != u.coeffs().rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

// Aberth-Ehrlich iteration in double precision; starting values only.
std::vector<std::complex<double>> approximate_roots(const UnivariatePoly& u) {
  using C = std::complex<double>;
  const int d = u.degree();
  std::vector<double> a(static_cast<std::size_t>(d) + 1);
  const double lc = u.leading().get_d();
  for (int i = 0; i <= d; ++i) a[static_cast<std::size_t>(i)] = u.coeffs()[static_cast<std::size_t>(i)].get_d() / lc;
  double bound = 0.0;
  for (int i = 0; i < d; ++i) {
    bound = std::max(bound, std::pow(std::fabs(a[static_cast<std::size_t>(i)]), 1.0 / (d - i)));
  }
  bound = std::max(2.0 * bound, 1e-3);
  std::vector<C> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    z[static_cast<std::size_t>(k)] = std::polar(0.5 * bound, 2 * std::numbers::pi * k / d + 0.4);
  }
  auto horner = [&](C t, C& deriv) {
    C p = 1.0;
    deriv = 0.0;
    for (int i = d - 1; i >= 0; --i) {
      deriv = deriv * t + p;
      p = p * t + a[static_cast<std::size_t>(i)];
    }
    return p;
  };
  for (int iter = 0; iter < 1000; ++iter) {
    double worst = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      C dp;
      C p = horner(z[k], dp);
      if (p == C(0.0)) continue;
      C ratio = p / dp;
      C sum = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      }
      C w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[k])));
    }
    if (worst < 1e-16) break;
  }
  return z;
}

// Encloses the non-real roots of the squarefree polynomial u via the
// Weierstrass-correction inclusion theorem: with corrections W_j, the disks
// |z - z_j| <= d |W_j| cover all roots, and each disk that is disjoint from
// the others holds exactly one root. Returns the upper half-plane members.
// With max_width set, keeps refining until the induced coefficient
// enclosures are narrower than it.
std::vector<ComplexEnclosure> certify_complex_pairs(const UnivariatePoly& u, int real_count,
                                                    const std::optional<Rational>& max_width) {
  const int d = u.degree();
  const int pairs = (d - real_count) / 2;
  if (pairs == 0) return {};

  std::vector<CQ> z;
  for (const auto& c : approximate_roots(u)) z.push_back({from_double(c.real()), from_double(c.imag())});
  const Rational lc2 = u.leading() * u.leading();
  const Rational d2 = Rational(d) * d;

  for (unsigned bits = 64; bits <= 16384; bits *= 2) {
    std::vector<CQ> w(z.size());
    bool degenerate = false;
    for (int step = 0; step < 6 && !degenerate; ++step) {
      for (std::size_t j = 0; j < z.size(); ++j) {
        CQ den{u.leading(), Rational(0)};
        for (std::size_t k = 0; k < z.size(); ++k) {
          if (k != j) den = den * (z[j] - z[k]);
        }
        if (sgn(norm2(den)) == 0) {
          degenerate = true;
          break;
        }
        w[j] = eval(u, z[j]) / den;
      }
      if (degenerate) break;
      for (std::size_t j = 0; j < z.size(); ++j) {
        z[j] = {round_dyadic(z[j].re - w[j].re, bits), round_dyadic(z[j].im - w[j].im, bits)};
      }
    }
    if (degenerate) {
      // Separate coincident starting values and retry at the next precision.
      for (std::size_t j = 0; j < z.size(); ++j) {
        z[j].re += Rational(static_cast<long>(j) + 1, 1000);
        z[j].im += Rational(1, 997);
      }
      continue;
    }

    // Radii at the final (exactly represented) approximations.
    std::vector<Rational> radius(z.size());
    bool ok = true;
    for (std::size_t j = 0; j < z.size() && ok; ++j) {
      Rational den_norm = lc2;
      for (std::size_t k = 0; k < z.size(); ++k) {
        if (k != j) den_norm *= norm2(z[j] - z[k]);
      }
      if (sgn(den_norm) == 0) {
        ok = false;
        break;
      }
      radius[j] = sqrt_upper(d2 * norm2(eval(u, z[j])) / den_norm);
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < z.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < z.size() && ok; ++j) {
        Rational sum = radius[i] + radius[j];
        if (norm2(z[i] - z[j]) <= sum * sum) ok = false;
      }
    }
    if (!ok) continue;

    std::vector<std::size_t> upper;
    int lower = 0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (z[j].im > radius[j]) upper.push_back(j);
      if (-z[j].im > radius[j]) ++lower;
    }
    if (static_cast<int>(upper.size()) != pairs || lower != pairs) continue;

    std::vector<ComplexEnclosure> out;
    bool narrow = true;
    for (std::size_t j : upper) {
      ComplexEnclosure e{z[j].re, z[j].im, radius[j]};
      if (max_width) {
        Rational modulus = sqrt_upper(norm2(z[j]));
        Rational a_width = 4 * e.radius * modulus + 2 * e.radius * e.radius;
        Rational b_width = 4 * e.radius;
        if (a_width >= *max_width || b_width >= *max_width) narrow = false;
      }
      out.push_back(e);
    }
    if (narrow) return out;
  }
  throw Error(ErrorKind::Internal, "could not certify complex root enclosures");
}

QuadraticFactor make_quadratic(const UnivariatePoly& layer, const ComplexEnclosure& e, int multiplicity) {
  QuadraticFactor q;
  q.sq_poly = layer;
  q.root = e;
  q.multiplicity = multiplicity;
  const Rational mod2 = e.re * e.re + e.im * e.im;
  const Rational modulus = sqrt_upper(mod2);
  const Rational spread = 2 * e.radius * modulus + e.radius * e.radius;
  const Rational im_low = e.im - e.radius;  // > 0 by certification
  Rational a_lo = mod2 - spread;
  if (a_lo < im_low * im_low) a_lo = im_low * im_low;
  q.a = {a_lo, mod2 + spread};
  // Q(1, t) = t^2 - 2 Re(z) t + |z|^2, i.e. b = -2 Re(z).
  q.b = {-2 * e.re - 2 * e.radius, -2 * e.re + 2 * e.radius};
  q.coeffs_approx = {mod2.get_d(), Rational(-2 * e.re).get_d(), 1.0};
  return q;
}

bool disks_overlap(const ComplexEnclosure& p, const ComplexEnclosure& q) {
  Rational dr = p.re - q.re, di = p.im - q.im;
  Rational sum = p.radius + q.radius;
  return dr * dr + di * di <= sum * sum;
}

void sort_factors(FactorizationStructure& fs) {
  std::stable_sort(fs.linear.begin(), fs.linear.end(), [](const LinearFactor& a, const LinearFactor& b) {
    if (a.is_axis() != b.is_axis()) return a.is_axis();
    if (a.is_axis()) return false;
    return a.root().interval.midpoint() < b.root().interval.midpoint();
  });
  std::stable_sort(fs.quadratic.begin(), fs.quadratic.end(),
                   [](const QuadraticFactor& p, const QuadraticFactor& q) {
                     Rational pa = p.a.midpoint(), qa = q.a.midpoint();
                     if (pa != qa) return pa < qa;
                     return p.b.midpoint() < q.b.midpoint();
                   });
}

}  // namespace

bool enclosures_disjoint(const FactorizationStructure& fs) {
  for (std::size_t i = 0; i < fs.linear.size(); ++i) {
    if (fs.linear[i].is_axis()) continue;
    for (std::size_t j = i + 1; j < fs.linear.size(); ++j) {
      if (fs.linear[j].is_axis()) continue;
      if (fs.linear[i].root().interval.overlaps(fs.linear[j].root().interval)) return false;
    }
  }
  for (std::size_t i = 0; i < fs.quadratic.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.quadratic.size(); ++j) {
      if (disks_overlap(fs.quadratic[i].root, fs.quadratic[j].root)) return false;
    }
  }
  return true;
}

namespace {

FactorizationStructure refine_impl(const FactorizationStructure& fs, const Rational& eps) {
  FactorizationStructure out = fs;
  for (auto& lf : out.linear) {
    if (!lf.is_axis()) lf.direction = refine_root(lf.root(), eps);
  }
  // Quadratic factors are recertified per squarefree layer.
  std::vector<bool> done(out.quadratic.size(), false);
  for (std::size_t i = 0; i < out.quadratic.size(); ++i) {
    if (done[i]) continue;
    const UnivariatePoly layer = out.quadratic[i].sq_poly;
    std::vector<std::size_t> members;
    bool wide = false;
    for (std::size_t j = i; j < out.quadratic.size(); ++j) {
      if (out.quadratic[j].sq_poly == layer) {
        members.push_back(j);
        const auto& q = out.quadratic[j];
        if (q.a.width() >= eps || q.b.width() >= eps) wide = true;
      }
    }
    for (std::size_t j : members) done[j] = true;
    if (!wide) continue;
    auto encl = certify_complex_pairs(layer, count_real_roots(layer), eps);
    // Match each refined disk to the old factor whose root it refines.
    std::vector<bool> used(encl.size(), false);
    for (std::size_t j : members) {
      const auto& old = out.quadratic[j].root;
      std::size_t best = encl.size();
      Rational best_dist;
      for (std::size_t e = 0; e < encl.size(); ++e) {
        if (used[e]) continue;
        Rational dr = encl[e].re - old.re, di = encl[e].im - old.im;
        Rational dist = dr * dr + di * di;
        if (best == encl.size() || dist < best_dist) {
          best = e;
          best_dist = dist;
        }
      }
      used[best] = true;
      out.quadratic[j] = make_quadratic(layer, encl[best], out.quadratic[j].multiplicity);
    }
  }
  sort_factors(out);
  return out;
}

}  // namespace

FactorizationStructure factor_form(const HomogeneousForm& f) {
  if (f.degree() == 0) throw Error(ErrorKind::DegreeZero, "factorization of a constant form");
  if (f.is_zero()) throw Error(ErrorKind::ZeroForm, "factorization of the zero form");
  Dehomogenized dh = dehomogenize(f);
  FactorizationStructure fs;
  fs.degree = f.degree();
  const Rational& kappa = dh.g.leading();
  fs.sign = sgn(kappa);
  fs.scale = abs(kappa);
  if (dh.x_mult > 0) fs.linear.push_back({ExactAxis{}, dh.x_mult});

  SquarefreeDecomposition sfd = squarefree_decomposition(dh.g);
  for (const auto& [layer, m] : sfd.factors) {
    auto roots = isolate_real_roots(layer);
    const int real_count = static_cast<int>(roots.size());
    for (auto& r : roots) fs.linear.push_back({std::move(r), m});
    for (const auto& e : certify_complex_pairs(layer, real_count, std::nullopt)) {
      fs.quadratic.push_back(make_quadratic(layer, e, m));
    }
  }

  int total = 0;
  for (const auto& lf : fs.linear) total += lf.multiplicity;
  for (const auto& qf : fs.quadratic) total += 2 * qf.multiplicity;
  if (total != fs.degree) throw Error(ErrorKind::Internal, "factor multiplicities do not sum to the degree");

  // Roots from different layers are distinct; shrink until their
  // enclosures separate.
  Rational eps(1);
  for (const auto& lf : fs.linear) {
    if (!lf.is_axis() && lf.root().interval.width() > eps) eps = lf.root().interval.width();
  }
  sort_factors(fs);
  while (!enclosures_disjoint(fs)) {
    eps /= 4;
    fs = refine_impl(fs, eps);
  }
  return fs;
}

FactorizationStructure refine(const FactorizationStructure& fs, const Rational& eps) {
  if (sgn(eps) <= 0) throw Error(ErrorKind::InvalidArgument, "refinement width must be positive");
  return refine_impl(fs, eps);
}

std::vector<double> reconstruct_coefficients(const FactorizationStructure& fs) {
  std::vector<double> prod{fs.sign * fs.scale.get_d()};
  auto times = [&prod](const std::vector<double>& factor) {
    std::vector<double> r(prod.size() + factor.size() - 1, 0.0);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      for (std::size_t j = 0; j < factor.size(); ++j) r[i + j] += prod[i] * factor[j];
    }
    prod = std::move(r);
  };
  for (const auto& lf : fs.linear) {
    auto [c0, c1] = lf.coefficients();
    for (int m = 0; m < lf.multiplicity; ++m) times({c0, c1});
  }
  for (const auto& qf : fs.quadratic) {
    std::vector<double> c(qf.coeffs_approx.begin(), qf.coeffs_approx.end());
    for (int m = 0; m < qf.multiplicity; ++m) times(c);
  }
  return prod;
}

}  // namespace binform
