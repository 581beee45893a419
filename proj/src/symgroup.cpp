#include "binform/symgroup.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "binform/error.hpp"
#include "binform/verdict.hpp"

namespace binform {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kSameElement = 1e-6;

struct SymEigen {
  double big;
  double small;
  Mat2d basis;  // columns: eigenvectors of big, small
};

SymEigen sym_eigen(const Mat2d& m) {
  const double half_tr = 0.5 * (m.a + m.d);
  const double off = 0.5 * (m.b + m.c);
  const double rad = std::hypot(0.5 * (m.a - m.d), off);
  const double phi = 0.5 * std::atan2(2 * off, m.a - m.d);
  return {half_tr + rad, half_tr - rad, rotation(phi)};
}

void require_spd(const Mat2d& m, const char* what) {
  const double scale = std::max({std::fabs(m.a), std::fabs(m.b), std::fabs(m.c), std::fabs(m.d)});
  if (!(scale > 0) || std::fabs(m.b - m.c) > 1e-12 * scale) {
    throw Error(ErrorKind::NotPositiveDefinite, std::string(what) + " is not symmetric");
  }
  if (!(m.a > 0) || !(m.det() > 0)) {
    throw Error(ErrorKind::NotPositiveDefinite, std::string(what) + " is not positive definite");
  }
}

Mat2d spectral(const SymEigen& e, double big, double small) {
  return e.basis * Mat2d::diag(big, small) * e.basis.transpose();
}

double angle_of(Point v) { return std::atan2(v.y, v.x); }

Mat2d columns(Point u, Point v) { return Mat2d{u.x, v.x, u.y, v.y}; }

Point scale(Point v, double s) { return {v.x * s, v.y * s}; }

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0 ? t + kTwoPi : t;
}

// Rays of f^-1(0) sorted by angle in [0, 2 pi).
struct Ray {
  Point v;
  int line;
  int alpha;
};

std::vector<Ray> sorted_rays(const FactorizationStructure& fs) {
  std::vector<std::pair<double, int>> lines;
  for (int i = 0; i < fs.l(); ++i) {
    Point d = fs.linear[static_cast<std::size_t>(i)].line_direction();
    double phi = angle_of(d);
    if (phi < 0) phi += std::numbers::pi;
    if (phi >= std::numbers::pi) phi -= std::numbers::pi;
    lines.push_back({phi, i});
  }
  std::sort(lines.begin(), lines.end());
  std::vector<Ray> rays;
  for (int half = 0; half < 2; ++half) {
    for (const auto& [phi, i] : lines) {
      double ang = phi + half * std::numbers::pi;
      rays.push_back({{std::cos(ang), std::sin(ang)}, i, fs.linear[static_cast<std::size_t>(i)].multiplicity});
    }
  }
  return rays;
}

std::optional<std::pair<double, double>> solve2(const Mat2d& m, Point rhs) {
  double D = m.det();
  if (std::fabs(D) < 1e-14) return std::nullopt;
  return std::pair{(rhs.x * m.d - m.b * rhs.y) / D, (m.a * rhs.y - m.c * rhs.x) / D};
}

// Appends mu * h1 for every admissible overall scale mu with f o (mu h1) = f.
void add_scaled(std::span<const double> coeffs, const Mat2d& h1, std::vector<Mat2d>& out) {
  const int p = static_cast<int>(coeffs.size()) - 1;
  auto g = compose_linear(coeffs, h1);
  double fg = 0, gg = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    fg += coeffs[i] * g[i];
    gg += g[i] * g[i];
  }
  if (!(gg > 0)) return;
  const double ratio = fg / gg;
  if (ratio == 0 || !std::isfinite(ratio)) return;
  if (ratio < 0 && p % 2 == 0) return;
  double mu = std::copysign(std::pow(std::fabs(ratio), 1.0 / p), ratio);
  for (double m : {mu, -mu}) {
    if (m < 0 && p % 2 == 1) continue;
    Mat2d h = m * h1;
    if (h.det() > 0) out.push_back(h);
  }
}

std::vector<Mat2d> finite_candidates(std::span<const double> coeffs, const FactorizationStructure& fs) {
  std::vector<Mat2d> out{Mat2d::identity()};
  const int l = fs.l(), k = fs.k();
  auto qmat = [&fs](int j) { return fs.quadratic[static_cast<std::size_t>(j)].matrix(); };
  auto qbeta = [&fs](int j) { return fs.quadratic[static_cast<std::size_t>(j)].multiplicity; };

  if (l == 0) {
    // Carry Q_0 to Q_j1 and align Q_1 with Q_j2 through the eigenbases.
    const Mat2d B = qmat(0);
    const Mat2d Bi = spd_inv_sqrt(B);
    for (int j1 = 0; j1 < k; ++j1) {
      if (qbeta(j1) != qbeta(0)) continue;
      const Mat2d A = qmat(j1);
      const TransportFamily fam = quadratic_transport(A, B);
      const Mat2d Ai = spd_inv_sqrt(A);
      const SymEigen S = sym_eigen(Bi * qmat(1) * Bi);
      for (int j2 = 0; j2 < k; ++j2) {
        if (j2 == j1 || qbeta(j2) != qbeta(1)) continue;
        const SymEigen T = sym_eigen(Ai * qmat(j2) * Ai);
        const Mat2d R = S.basis * T.basis.transpose();
        for (const Mat2d& rot : {R, Mat2d(-R)}) add_scaled(coeffs, fam.left * rot * fam.right, out);
      }
    }
    return out;
  }

  const std::vector<Ray> rays = sorted_rays(fs);
  const int n_rays = static_cast<int>(rays.size());

  if (l == 1) {
    const Point d = rays[0].v;
    const Mat2d B = qmat(0);
    for (int j = 0; j < k; ++j) {
      if (qbeta(j) != qbeta(0)) continue;
      const Mat2d A = qmat(j);
      const TransportFamily fam = quadratic_transport(A, B);
      const double theta = angle_of(apply(spd_sqrt(B), d)) - angle_of(apply(spd_sqrt(A), d));
      for (double t : {theta, theta + std::numbers::pi}) add_scaled(coeffs, fam.member(t, 1.0), out);
    }
    return out;
  }

  const Mat2d W = columns(rays[0].v, rays[1].v);
  const Mat2d Winv = W.inverse();
  for (int s = 0; s < n_rays; ++s) {
    bool pattern = true;
    for (int m = 0; m < n_rays && pattern; ++m) {
      pattern = rays[static_cast<std::size_t>(m)].alpha == rays[static_cast<std::size_t>((m + s) % n_rays)].alpha;
    }
    if (!pattern) continue;
    const Point vs = rays[static_cast<std::size_t>(s)].v;
    const Point vs1 = rays[static_cast<std::size_t>((s + 1) % n_rays)].v;
    const Mat2d M = columns(vs, vs1);
    std::vector<double> ratios;
    if (l >= 3) {
      const Point v2 = rays[2].v;
      const Point w2 = rays[static_cast<std::size_t>((s + 2) % n_rays)].v;
      auto src = solve2(W, v2);
      auto dst = solve2(M, w2);
      if (!src || !dst) continue;
      auto [a, b] = *src;
      auto [a2, b2] = *dst;
      if (std::fabs(a2) < 1e-14 || std::fabs(b) < 1e-14) continue;
      const double c = a / a2;
      const double rho = c * b2 / b;
      if (c > 0 && rho > 0) ratios.push_back(rho);
    } else {
      const Mat2d P = M.transpose() * qmat(0) * M;
      for (int j = 0; j < k; ++j) {
        if (qbeta(j) != qbeta(0)) continue;
        const Mat2d Rm = W.transpose() * qmat(j) * W;
        const double rho2 = Rm.d * P.a / (Rm.a * P.d);
        if (rho2 > 0) ratios.push_back(std::sqrt(rho2));
      }
    }
    for (double rho : ratios) add_scaled(coeffs, M * Mat2d::diag(1.0, rho) * Winv, out);
  }
  return out;
}

bool contains(const std::vector<Mat2d>& set, const Mat2d& h) {
  return std::any_of(set.begin(), set.end(), [&h](const Mat2d& e) { return max_abs_diff(e, h) < kSameElement; });
}

Mat2d power(const Mat2d& h, int m) {
  Mat2d r = Mat2d::identity();
  for (int i = 0; i < m; ++i) r = r * h;
  return r;
}

FiniteCyclic finite_group(std::span<const double> coeffs, const FactorizationStructure& fs, double tol) {
  std::vector<Mat2d> verified;
  for (const Mat2d& h : finite_candidates(coeffs, fs)) {
    if (invariance_residual(coeffs, h) < tol && !contains(verified, h)) verified.push_back(h);
  }
  int beta_sum = 0;
  for (const auto& q : fs.quadratic) beta_sum += q.multiplicity;
  const std::size_t cap = static_cast<std::size_t>(4 * std::max({2 * fs.l(), 2 * beta_sum, 16}));
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t size = verified.size();
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        Mat2d h = verified[i] * verified[j];
        if (contains(verified, h)) continue;
        verified.push_back(h);
        grew = true;
        if (verified.size() > cap) {
          throw Error(ErrorKind::ToleranceTooLoose, "closure of verified symmetries does not terminate");
        }
      }
    }
  }

  FiniteCyclic g;
  g.n = static_cast<int>(verified.size());
  g.generator = Mat2d::identity();
  double best = kTwoPi + 1;
  for (const Mat2d& h : verified) {
    int order = 0;
    try {
      order = finite_order_of(h, g.n, kSameElement);
    } catch (const Error&) {
      continue;
    }
    const double ang = wrap_angle(polar_angle(h));
    if (order == g.n && g.n > 1 && ang > 1e-9 && ang < best) {
      best = ang;
      g.generator = h;
    }
  }
  if (g.n > 1 && best > kTwoPi) {
    throw Error(ErrorKind::ToleranceTooLoose, "verified symmetries do not form a cyclic group");
  }
  for (int m = 0; m < g.n; ++m) g.elements.push_back(power(g.generator, m));
  for (const Mat2d& h : verified) {
    if (!contains(g.elements, h)) {
      throw Error(ErrorKind::ToleranceTooLoose, "verified symmetries are not powers of one element");
    }
  }
  for (const Mat2d& h : g.elements) g.residual = std::max(g.residual, invariance_residual(coeffs, h));
  return g;
}

}  // namespace

Mat2d TransportFamily::member(double theta, double lambda) const {
  return std::sqrt(lambda) * (left * rotation(theta) * right);
}

Mat2d spd_sqrt(const Mat2d& m) {
  require_spd(m, "matrix");
  SymEigen e = sym_eigen(m);
  return spectral(e, std::sqrt(e.big), std::sqrt(e.small));
}

Mat2d spd_inv_sqrt(const Mat2d& m) {
  require_spd(m, "matrix");
  SymEigen e = sym_eigen(m);
  return spectral(e, 1 / std::sqrt(e.big), 1 / std::sqrt(e.small));
}

TransportFamily quadratic_transport(const Mat2d& A, const Mat2d& B) {
  require_spd(A, "source form");
  require_spd(B, "target form");
  return {spd_inv_sqrt(B), spd_sqrt(A)};
}

Mat2d CaseA::member(double a, double b) const { return N * Mat2d{a, b, 0.0, 1.0} * N.inverse(); }

Mat2d CaseB::member(double t) const {
  return N * Mat2d::diag(std::exp(alpha2 * t), std::exp(-alpha1 * t)) * N.inverse();
}

Mat2d CaseC::member(double theta) const { return N * rotation(theta) * N.inverse(); }

std::string_view kind_name(const SymmetryGroup& g) {
  static constexpr std::array<std::string_view, 4> names{"CaseA", "CaseB", "CaseC", "FiniteCyclic"};
  return names[g.index()];
}

bool contains_minus_identity(const SymmetryGroup& g) {
  if (const auto* a = std::get_if<CaseA>(&g)) return !a->odd;
  if (const auto* b = std::get_if<CaseB>(&g)) return b->minus_identity_in_group;
  if (std::holds_alternative<CaseC>(g)) return true;
  const auto& fc = std::get<FiniteCyclic>(g);
  return contains(fc.elements, -Mat2d::identity());
}

double invariance_residual(std::span<const double> coeffs, const Mat2d& h) {
  auto g = compose_linear(coeffs, h);
  double norm = 0, diff = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    norm = std::max(norm, std::fabs(coeffs[i]));
    diff = std::max(diff, std::fabs(g[i] - coeffs[i]));
  }
  if (!(norm > 0)) throw Error(ErrorKind::ZeroForm, "residual of the zero form");
  return diff / norm;
}

double invariance_residual(const HomogeneousForm& f, const Mat2d& h) {
  auto c = f.to_double();
  return invariance_residual(c, h);
}

PermCandidate induced_permutation(const FactorizationStructure& fs, const Mat2d& h) {
  PermCandidate pc;
  for (const auto& lf : fs.linear) {
    Point img = apply(h, lf.line_direction());
    int match = -1;
    double best = 1e-6;
    for (int j = 0; j < fs.l(); ++j) {
      Point d = fs.linear[static_cast<std::size_t>(j)].line_direction();
      double cross = std::fabs(img.x * d.y - img.y * d.x) / std::hypot(img.x, img.y);
      if (cross < best) {
        best = cross;
        match = j;
      }
    }
    pc.sigma.push_back(match);
  }
  const Mat2d hi = h.inverse();
  for (const auto& qf : fs.quadratic) {
    Mat2d img = hi.transpose() * qf.matrix() * hi;
    img = (1.0 / img.d) * img;
    int match = -1;
    double best = 1e-6;
    for (int j = 0; j < fs.k(); ++j) {
      double dist = max_abs_diff(img, fs.quadratic[static_cast<std::size_t>(j)].matrix());
      if (dist < best) {
        best = dist;
        match = j;
      }
    }
    pc.tau.push_back(match);
  }
  return pc;
}

SymmetryGroup symmetry_group(const HomogeneousForm& f, const FactorizationStructure& fs, double tol) {
  if (!enclosures_disjoint(fs)) throw Error(ErrorKind::NotRefined, "factor enclosures overlap");
  const FactorizationStructure r = refine(fs, Rational(1, 1000000000) / 1000000);
  const std::vector<double> coeffs = f.to_double();
  switch (classify_case(r)) {
    case CaseLabel::A: {
      const LinearFactor& lf = r.linear[0];
      CaseA g;
      g.alpha = lf.multiplicity;
      g.odd = g.alpha % 2 == 1;
      g.N = lf.is_axis() ? Mat2d{0.0, 1.0, -1.0, 0.0} : Mat2d{1.0, 0.0, lf.root().approx, 1.0};
      return g;
    }
    case CaseLabel::B: {
      CaseB g;
      g.alpha1 = r.linear[0].multiplicity;
      g.alpha2 = r.linear[1].multiplicity;
      Point d1 = r.linear[0].line_direction();
      const Point d2 = r.linear[1].line_direction();
      if (columns(d2, d1).det() < 0) d1 = scale(d1, -1.0);
      g.N = columns(d2, d1);
      g.quarter_turn = g.N * Mat2d{0.0, 1.0, -1.0, 0.0} * g.N.inverse();
      g.quarter_turn_in_group = invariance_residual(coeffs, g.quarter_turn) < tol;
      g.minus_identity_in_group = invariance_residual(coeffs, -Mat2d::identity()) < tol;
      return g;
    }
    case CaseLabel::C:
      return CaseC{spd_inv_sqrt(r.quadratic[0].matrix())};
    case CaseLabel::D:
    case CaseLabel::E:
      return finite_group(coeffs, r, tol);
  }
  throw Error(ErrorKind::Internal, "unreachable case label");
}

SymmetryGroup symmetry_group(const HomogeneousForm& f, double tol) {
  return symmetry_group(f, factor_form(f), tol);
}

int finite_order_of(const Mat2d& h, int max_n, double tol) {
  const double det = h.det();
  if (!(det > 0) || std::fabs(det - 1) > tol) {
    throw Error(ErrorKind::NotFiniteOrder, "determinant differs from one");
  }
  const Mat2d g = (1 / std::sqrt(det)) * h;
  Mat2d p = g;
  for (int n = 1; n <= max_n; ++n) {
    if (max_abs_diff(p, Mat2d::identity()) < tol) return n;
    p = p * g;
    p = (1 / std::sqrt(p.det())) * p;
  }
  throw Error(ErrorKind::NotFiniteOrder, "no power up to " + std::to_string(max_n) + " is the identity");
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

Mat2d sl2_point(double phi, double s, double psi) {
  return rotation(phi) * Mat2d::diag(std::exp(s), std::exp(-s)) * rotation(psi);
}

std::vector<double> residual_vector(std::span<const double> c, double norm, const std::array<double, 3>& x) {
  auto g = compose_linear(c, sl2_point(x[0], x[1], x[2]));
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = (g[i] - c[i]) / norm;
  return g;
}

double sum_sq(const std::vector<double>& r) {
  double s = 0;
  for (double v : r) s += v * v;
  return s;
}

std::optional<std::array<double, 3>> solve3(std::array<std::array<double, 3>, 3> m, std::array<double, 3> b) {
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    }
    if (std::fabs(m[piv][col]) < 1e-300) return std::nullopt;
    std::swap(m[col], m[piv]);
    std::swap(b[col], b[piv]);
    for (int r = col + 1; r < 3; ++r) {
      double f = m[r][col] / m[col][col];
      for (int c = col; c < 3; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  std::array<double, 3> x{};
  for (int r = 2; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < 3; ++c) s -= m[r][c] * x[c];
    x[r] = s / m[r][r];
  }
  return x;
}

std::array<double, 3> polish(std::span<const double> c, double norm, std::array<double, 3> x) {
  double lambda = 1e-3;
  auto r = residual_vector(c, norm, x);
  double cost = sum_sq(r);
  for (int iter = 0; iter < 200 && cost > 1e-30; ++iter) {
    std::array<std::vector<double>, 3> J;
    for (int j = 0; j < 3; ++j) {
      auto xp = x, xm = x;
      xp[j] += 1e-7;
      xm[j] -= 1e-7;
      auto rp = residual_vector(c, norm, xp), rm = residual_vector(c, norm, xm);
      J[j].resize(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) J[j][i] = (rp[i] - rm[i]) / 2e-7;
    }
    std::array<std::array<double, 3>, 3> JtJ{};
    std::array<double, 3> Jtr{};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        for (std::size_t i = 0; i < r.size(); ++i) JtJ[a][b] += J[a][i] * J[b][i];
      }
      for (std::size_t i = 0; i < r.size(); ++i) Jtr[a] -= J[a][i] * r[i];
    }
    bool improved = false;
    for (int attempt = 0; attempt < 20 && !improved; ++attempt) {
      auto damped = JtJ;
      for (int a = 0; a < 3; ++a) damped[a][a] += lambda * (JtJ[a][a] + 1e-12);
      auto step = solve3(damped, Jtr);
      if (!step) {
        lambda *= 10;
        continue;
      }
      std::array<double, 3> xn{x[0] + (*step)[0], x[1] + (*step)[1], x[2] + (*step)[2]};
      auto rn = residual_vector(c, norm, xn);
      double cn = sum_sq(rn);
      if (cn < cost) {
        x = xn;
        r = std::move(rn);
        cost = cn;
        lambda = std::max(lambda / 10, 1e-12);
        improved = true;
      } else {
        lambda *= 10;
      }
    }
    if (!improved) break;
  }
  return x;
}

double scan_radius(const HomogeneousForm& f) {
  const FactorizationStructure fs = factor_form(f);
  double cond = 1.0;
  for (const auto& q : fs.quadratic) {
    SymEigen e = sym_eigen(q.matrix());
    cond = std::max(cond, e.big / e.small);
  }
  double gap_sin = 1.0;
  for (int i = 0; i < fs.l(); ++i) {
    for (int j = i + 1; j < fs.l(); ++j) {
      Point u = fs.linear[static_cast<std::size_t>(i)].line_direction();
      Point v = fs.linear[static_cast<std::size_t>(j)].line_direction();
      gap_sin = std::min(gap_sin, std::fabs(u.x * v.y - u.y * v.x));
    }
  }
  return 0.75 + 0.5 * std::log(cond) + 0.5 * std::log(1 / gap_sin);
}

}  // namespace

std::vector<Mat2d> oracle_scan(const HomogeneousForm& f, int resolution, double tol) {
  if (resolution < 64) throw Error(ErrorKind::InvalidArgument, "oracle resolution must be at least 64");
  const std::vector<double> c = f.to_double();
  double norm = 0;
  for (double v : c) norm = std::max(norm, std::fabs(v));
  const double S = scan_radius(f);
  const int N = resolution;
  const int Ns = N / 2 + 1;
  auto phi_at = [N](int i) { return kTwoPi * i / N; };
  auto s_at = [S, Ns](int k) { return -S + 2 * S * k / (Ns - 1); };

  std::vector<double> grid(static_cast<std::size_t>(N) * N * Ns);
  auto idx = [N, Ns](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * N + static_cast<std::size_t>(j)) * Ns + static_cast<std::size_t>(k);
  };
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      for (int k = 0; k < Ns; ++k) {
        grid[idx(i, j, k)] = sum_sq(residual_vector(c, norm, {phi_at(i), s_at(k), phi_at(j)}));
      }
    }
  }

  std::vector<Mat2d> found;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      for (int k = 0; k < Ns; ++k) {
        const double v = grid[idx(i, j, k)];
        bool minimum = true;
        for (int di = -1; di <= 1 && minimum; ++di) {
          for (int dj = -1; dj <= 1 && minimum; ++dj) {
            for (int dk = -1; dk <= 1 && minimum; ++dk) {
              if (di == 0 && dj == 0 && dk == 0) continue;
              const int kk = k + dk;
              if (kk < 0 || kk >= Ns) continue;
              if (grid[idx((i + di + N) % N, (j + dj + N) % N, kk)] < v) minimum = false;
            }
          }
        }
        if (!minimum) continue;
        auto x = polish(c, norm, {phi_at(i), s_at(k), phi_at(j)});
        Mat2d h = sl2_point(x[0], x[1], x[2]);
        if (invariance_residual(c, h) < tol && !contains(found, h)) found.push_back(h);
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Mat2d& a, const Mat2d& b) {
    return wrap_angle(polar_angle(a) + 1e-9) < wrap_angle(polar_angle(b) + 1e-9);
  });
  return found;
}

}  // namespace binform
