#include "binform/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "binform/error.hpp"

namespace binform {

Rect Rect::scaled(double factor) const {
  const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
  const double hw = 0.5 * factor * width(), hh = 0.5 * factor * height();
  return {cx - hw, cy - hh, cx + hw, cy + hh};
}

std::string_view to_string(FlowStatus s) {
  switch (s) {
    case FlowStatus::Completed:
      return "completed";
    case FlowStatus::ExitedBox:
      return "exited_box";
    case FlowStatus::StepLimit:
      return "step_limit";
    case FlowStatus::Stalled:
      return "stalled";
  }
  return "unknown";
}

std::string_view to_string(Regularity r) {
  switch (r) {
    case Regularity::Regular:
      return "regular";
    case Regularity::Degenerate:
      return "degenerate";
    case Regularity::Folding:
      return "folding";
  }
  return "unknown";
}

Mat2d mat_exp(const Mat2d& A, double t) {
  // A = tau I + M with M traceless, so M^2 = delta I.
  const double tau = 0.5 * A.trace();
  const Mat2d M{A.a - tau, A.b, A.c, A.d - tau};
  const double delta = M.a * M.a + M.b * M.c;
  const double x = delta * t * t;
  double C, S;  // e^{M t} = C I + S M
  if (std::fabs(x) < 1.0) {
    // Near the repeated-eigenvalue boundary: cosh(sqrt x) and t sinh(sqrt x)/sqrt x.
    C = 0.0;
    double termC = 1.0, termS = t;
    S = 0.0;
    for (int n = 0; n < 30; ++n) {
      C += termC;
      S += termS;
      termC *= x / ((2.0 * n + 1) * (2.0 * n + 2));
      termS *= x / ((2.0 * n + 2) * (2.0 * n + 3));
    }
  } else if (delta > 0) {
    const double w = std::sqrt(delta);
    C = std::cosh(w * t);
    S = std::sinh(w * t) / w;
  } else {
    const double w = std::sqrt(-delta);
    C = std::cos(w * t);
    S = std::sin(w * t) / w;
  }
  const double e = std::exp(tau * t);
  return Mat2d{e * (C + S * M.a), e * S * M.b, e * S * M.c, e * (C + S * M.d)};
}

Point shift_linear(const Mat2d& A, const BivariatePoly& sigma, Point z) {
  return apply(mat_exp(A, sigma.eval(z.x, z.y)), z);
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr std::array<double, 7> kB{35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr std::array<double, 7> kE{71.0 / 57600, 0.0, -71.0 / 16695, 71.0 / 1920, -17253.0 / 339200, 22.0 / 525,
                                   -1.0 / 40};

}  // namespace

Trajectory integrate_flow(const PlanarPolyField& field, Point z0, double T, const FlowConfig& cfg) {
  if (!std::isfinite(T)) throw Error(ErrorKind::InvalidArgument, "integration time must be finite");
  if (!(cfg.rel_tol > 0 && cfg.abs_tol > 0 && cfg.max_step > 0 && cfg.max_steps > 0)) {
    throw Error(ErrorKind::InvalidArgument, "flow tolerances and limits must be positive");
  }
  Trajectory traj;
  traj.points.push_back({0.0, z0});
  if (T == 0.0) return traj;
  const double dir = T > 0 ? 1.0 : -1.0;
  const double span = std::fabs(T);

  double t = 0.0;  // elapsed |time|
  Point z = z0;
  Point k1 = field.eval(z);
  double h = std::min(cfg.max_step, 0.01 * span);
  long steps = 0;
  while (t < span) {
    if (std::hypot(k1.x, k1.y) < cfg.min_speed) {
      traj.status = FlowStatus::Stalled;
      return traj;
    }
    if (steps++ >= cfg.max_steps) {
      traj.status = FlowStatus::StepLimit;
      return traj;
    }
    h = std::min({h, cfg.max_step, span - t});
    std::array<Point, 7> k;
    k[0] = k1;
    for (int s = 1; s < 7; ++s) {
      Point y = z;
      for (int j = 0; j < s; ++j) {
        y.x += dir * h * kA[s][j] * k[static_cast<std::size_t>(j)].x;
        y.y += dir * h * kA[s][j] * k[static_cast<std::size_t>(j)].y;
      }
      k[static_cast<std::size_t>(s)] = field.eval(y);
    }
    Point next = z, err{0.0, 0.0};
    for (int s = 0; s < 7; ++s) {
      next.x += dir * h * kB[static_cast<std::size_t>(s)] * k[static_cast<std::size_t>(s)].x;
      next.y += dir * h * kB[static_cast<std::size_t>(s)] * k[static_cast<std::size_t>(s)].y;
      err.x += h * kE[static_cast<std::size_t>(s)] * k[static_cast<std::size_t>(s)].x;
      err.y += h * kE[static_cast<std::size_t>(s)] * k[static_cast<std::size_t>(s)].y;
    }
    const double sx = cfg.abs_tol + cfg.rel_tol * std::max(std::fabs(z.x), std::fabs(next.x));
    const double sy = cfg.abs_tol + cfg.rel_tol * std::max(std::fabs(z.y), std::fabs(next.y));
    double e = std::max(std::fabs(err.x) / sx, std::fabs(err.y) / sy);
    if (!std::isfinite(e) || !std::isfinite(next.x) || !std::isfinite(next.y)) e = 1e10;
    if (e <= 1.0) {
      t = (span - t <= h) ? span : t + h;
      z = next;
      k1 = k[6];
      traj.points.push_back({dir * t, z});
      if (cfg.box && !cfg.box->contains(z)) {
        traj.status = FlowStatus::ExitedBox;
        return traj;
      }
    }
    const double factor = e == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(e, -0.2), 0.2, 5.0);
    h *= factor;
    if (h < 1e-14 * std::max(1.0, span)) {
      traj.status = FlowStatus::StepLimit;
      return traj;
    }
  }
  return traj;
}

Point shift_map_apply(const PlanarPolyField& field, const BivariatePoly& sigma, Point z, const FlowConfig& cfg) {
  Trajectory tr = integrate_flow(field, z, sigma.eval(z.x, z.y), cfg);
  switch (tr.status) {
    case FlowStatus::ExitedBox:
      throw Error(ErrorKind::BlowUp, "orbit left the bounding box");
    case FlowStatus::StepLimit:
      throw Error(ErrorKind::StepLimit, "step limit reached");
    default:
      return tr.points.back().z;
  }
}

std::vector<RegularitySample> shift_regularity(const PlanarPolyField& field, const BivariatePoly& sigma,
                                               const std::vector<RationalPoint>& samples) {
  const BivariatePoly lie = sigma.partial_x() * field.P + sigma.partial_y() * field.Q;
  std::vector<RegularitySample> out;
  for (const auto& z : samples) {
    RegularitySample s{z, lie.eval(z.x, z.y), Regularity::Regular};
    const int order = cmp(s.lie_derivative, Rational(-1));
    s.regularity = order > 0 ? Regularity::Regular : (order == 0 ? Regularity::Degenerate : Regularity::Folding);
    out.push_back(std::move(s));
  }
  return out;
}

Point invariant_contraction(const WeightVector& w, Point z, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::InvalidArgument, "contraction parameter outside [0, 1]");
  return {std::pow(t, w.s1) * z.x, std::pow(t, w.s2) * z.y};
}

// ---------------------------------------------------------------------------
// Marching squares

namespace {

// Edge keys: horizontal edge from node (i, j) to (i+1, j) and vertical edge
// from (i, j) to (i, j+1), with i along x.
using EdgeKey = std::pair<long, int>;

struct Segment {
  EdgeKey from;
  EdgeKey to;
};

}  // namespace

std::vector<Polyline> level_set(const HomogeneousForm& f, double c, const Rect& window, int res) {
  if (res < 16) throw Error(ErrorKind::InvalidArgument, "level-set resolution must be at least 16");
  const std::vector<double> coeffs = f.to_double();
  auto value = [&coeffs](double x, double y) {
    const int p = static_cast<int>(coeffs.size()) - 1;
    double acc = 0.0;
    for (int i = 0; i <= p; ++i) {
      acc += coeffs[static_cast<std::size_t>(i)] * std::pow(x, p - i) * std::pow(y, i);
    }
    return acc;
  };
  const int n = res + 1;
  auto X = [&](int i) { return window.x0 + window.width() * i / res; };
  auto Y = [&](int j) { return window.y0 + window.height() * j / res; };
  std::vector<double> v(static_cast<std::size_t>(n) * n);
  auto at = [&v, n](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = value(X(i), Y(j)) - c;
  }

  auto hkey = [n](int i, int j) { return EdgeKey{static_cast<long>(i) * n + j, 0}; };
  auto vkey = [n](int i, int j) { return EdgeKey{static_cast<long>(i) * n + j, 1}; };
  auto crossing = [&](const EdgeKey& e) {
    const int i = static_cast<int>(e.first / n), j = static_cast<int>(e.first % n);
    const int i2 = e.second == 0 ? i + 1 : i, j2 = e.second == 0 ? j : j + 1;
    const double a = at(i, j), b = at(i2, j2);
    const double s = (a == b) ? 0.5 : a / (a - b);
    return Point{X(i) + s * (X(i2) - X(i)), Y(j) + s * (Y(j2) - Y(j))};
  };

  std::vector<Segment> segs;
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      // Corners counter-clockwise from bottom-left.
      const bool in0 = at(i, j) >= 0, in1 = at(i + 1, j) >= 0, in2 = at(i + 1, j + 1) >= 0, in3 = at(i, j + 1) >= 0;
      const int code = in0 | (in1 << 1) | (in2 << 2) | (in3 << 3);
      const EdgeKey bottom = hkey(i, j), right = vkey(i + 1, j), top = hkey(i, j + 1), left = vkey(i, j);
      switch (code) {
        case 0:
        case 15:
          break;
        case 1:
        case 14:
          segs.push_back({left, bottom});
          break;
        case 2:
        case 13:
          segs.push_back({bottom, right});
          break;
        case 3:
        case 12:
          segs.push_back({left, right});
          break;
        case 4:
        case 11:
          segs.push_back({right, top});
          break;
        case 6:
        case 9:
          segs.push_back({bottom, top});
          break;
        case 7:
        case 8:
          segs.push_back({left, top});
          break;
        case 5:
        case 10: {
          const bool center_in = value(0.5 * (X(i) + X(i + 1)), 0.5 * (Y(j) + Y(j + 1))) - c >= 0;
          // Corners 0 and 2 share a side when the center agrees with them.
          const bool diag02 = (code == 5) == center_in;
          if (diag02) {
            segs.push_back({left, top});
            segs.push_back({bottom, right});
          } else {
            segs.push_back({left, bottom});
            segs.push_back({right, top});
          }
          break;
        }
        default:
          break;
      }
    }
  }

  // Chain segments through shared edges.
  std::map<EdgeKey, std::vector<std::size_t>> incident;
  for (std::size_t s = 0; s < segs.size(); ++s) {
    incident[segs[s].from].push_back(s);
    incident[segs[s].to].push_back(s);
  }
  std::vector<bool> used(segs.size(), false);
  std::vector<Polyline> out;
  auto walk = [&](std::size_t start, const EdgeKey& origin) {
    std::vector<EdgeKey> keys{origin};
    EdgeKey cur = origin;
    std::size_t s = start;
    while (true) {
      used[s] = true;
      cur = (segs[s].from == cur) ? segs[s].to : segs[s].from;
      keys.push_back(cur);
      std::size_t next = segs.size();
      for (std::size_t cand : incident[cur]) {
        if (!used[cand]) {
          next = cand;
          break;
        }
      }
      if (next == segs.size()) break;
      s = next;
    }
    Polyline line;
    for (const auto& key : keys) {
      Point p = crossing(key);
      if (line.empty() || !(line.back() == p)) line.push_back(p);
    }
    if (line.size() >= 2) out.push_back(std::move(line));
  };
  // Open curves start at edges with a single incident segment.
  for (const auto& [key, list] : incident) {
    if (list.size() == 1 && !used[list[0]]) walk(list[0], key);
  }
  for (std::size_t s = 0; s < segs.size(); ++s) {
    if (!used[s]) walk(s, segs[s].from);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Portraits

Portrait orbit_portrait(const HomogeneousForm& f, const std::vector<Point>& seeds, const Rect& window,
                        const FlowConfig& cfg, int res, double time_budget) {
  if (seeds.empty()) throw Error(ErrorKind::InvalidArgument, "portrait needs at least one seed");
  Portrait portrait;
  portrait.window = window;
  portrait.resolution = res;
  const FactorizationStructure fs = factor_form(f);
  const PlanarPolyField field = reduced_field(f);
  portrait.origin_singular = classify_case(fs) != CaseLabel::A;

  FlowConfig flow = cfg;
  if (!flow.box) flow.box = window.scaled(2.0);

  for (const Point& seed : seeds) {
    Orbit orbit;
    orbit.seed = seed;
    if (!window.contains(seed)) {
      orbit.seed_outside_window = true;
      orbit.forward = orbit.backward = FlowStatus::ExitedBox;
      portrait.orbits.push_back(std::move(orbit));
      continue;
    }
    const Trajectory fwd = integrate_flow(field, seed, time_budget, flow);
    const Trajectory bwd = integrate_flow(field, seed, -time_budget, flow);
    orbit.forward = fwd.status;
    orbit.backward = bwd.status;
    auto inside_prefix = [&window](const Trajectory& tr) {
      std::size_t n = 0;
      while (n < tr.points.size() && window.contains(tr.points[n].z)) ++n;
      return n;
    };
    const std::size_t nb = inside_prefix(bwd), nf = inside_prefix(fwd);
    for (std::size_t i = nb; i-- > 1;) orbit.points.push_back(bwd.points[i]);
    for (std::size_t i = 0; i < nf; ++i) orbit.points.push_back(fwd.points[i]);
    const double f0 = f.eval(seed.x, seed.y);
    for (const auto& tp : orbit.points) {
      orbit.f_drift = std::max(orbit.f_drift, std::fabs(f.eval(tp.z.x, tp.z.y) - f0));
    }
    orbit.relative_drift = orbit.f_drift / (1.0 + std::fabs(f0));
    portrait.orbits.push_back(std::move(orbit));
  }

  std::vector<double> levels;
  for (const Point& seed : seeds) {
    if (!window.contains(seed)) continue;
    const double c = f.eval(seed.x, seed.y);
    if (std::find(levels.begin(), levels.end(), c) == levels.end()) levels.push_back(c);
  }
  if (fs.l() >= 1 && std::find(levels.begin(), levels.end(), 0.0) == levels.end()) levels.push_back(0.0);
  for (double c : levels) portrait.level_curves.push_back({c, level_set(f, c, window, res)});
  return portrait;
}

}  // namespace binform
