#pragma once

// Flows of planar polynomial fields, shift maps along orbits, contractions,
// and the numeric data behind orbit portraits.

#include <optional>
#include <string_view>
#include <vector>

#include "binform/hamfield.hpp"
#include "binform/mat2.hpp"
#include "binform/polyring.hpp"

namespace binform {

struct Rect {
  double x0 = -2.0;
  double y0 = -2.0;
  double x1 = 2.0;
  double y1 = 2.0;

  bool contains(Point z) const { return z.x >= x0 && z.x <= x1 && z.y >= y0 && z.y <= y1; }
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  /// Same center, sides multiplied by factor.
  Rect scaled(double factor) const;
};

struct FlowConfig {
  // 1e-9 lets f drift by up to ~5e-7 relative on long or steep orbits.
  double rel_tol = 1e-11;
  double abs_tol = 1e-11;
  double max_step = 1e-2;
  long max_steps = 1000000;
  std::optional<Rect> box;
  double min_speed = 1e-12;  // below this the point is treated as an equilibrium
};

struct TimedPoint {
  double t = 0.0;
  Point z;
};

enum class FlowStatus { Completed, ExitedBox, StepLimit, Stalled };

std::string_view to_string(FlowStatus s);

struct Trajectory {
  std::vector<TimedPoint> points;
  FlowStatus status = FlowStatus::Completed;
};

/// e^{A t}.
Mat2d mat_exp(const Mat2d& A, double t);

/// e^{A sigma(z)} z.
Point shift_linear(const Mat2d& A, const BivariatePoly& sigma, Point z);

/// Adaptive Dormand-Prince 5(4) over [0, T] (T may be negative). Early exit
/// is reported through the status; the last point is the last one computed.
Trajectory integrate_flow(const PlanarPolyField& field, Point z0, double T, const FlowConfig& cfg = {});

/// Phi(z, sigma(z)). Throws BlowUp when the orbit leaves cfg.box before
/// time sigma(z), StepLimit when max_steps is exhausted.
Point shift_map_apply(const PlanarPolyField& field, const BivariatePoly& sigma, Point z,
                      const FlowConfig& cfg = {});

enum class Regularity { Regular, Degenerate, Folding };

std::string_view to_string(Regularity r);

struct RegularitySample {
  RationalPoint z;
  Rational lie_derivative;  // d sigma(field) at z
  Regularity regularity = Regularity::Regular;
};

/// Exact classification of d sigma(field)(z) against -1.
std::vector<RegularitySample> shift_regularity(const PlanarPolyField& field, const BivariatePoly& sigma,
                                               const std::vector<RationalPoint>& samples);

/// (t^s1 z1, t^s2 z2).
Point invariant_contraction(const WeightVector& w, Point z, double t);

using Polyline = std::vector<Point>;

/// Marching squares on res x res cells; a node is inside when f >= c and
/// ambiguous saddle cells are resolved by the value at the cell center.
/// Closed curves repeat their first point at the end.
std::vector<Polyline> level_set(const HomogeneousForm& f, double c, const Rect& window, int res);

struct LevelCurve {
  double level = 0.0;
  std::vector<Polyline> polylines;
};

struct Orbit {
  Point seed;
  std::vector<TimedPoint> points;  // increasing time, seed at t = 0
  FlowStatus forward = FlowStatus::Completed;
  FlowStatus backward = FlowStatus::Completed;
  bool seed_outside_window = false;
  double f_drift = 0.0;           // max |f(z(t)) - f(seed)|
  double relative_drift = 0.0;    // f_drift / (1 + |f(seed)|)
};

struct Portrait {
  std::vector<LevelCurve> level_curves;
  std::vector<Orbit> orbits;
  Rect window;
  int resolution = 0;
  bool origin_singular = false;
};

inline constexpr double kDefaultTimeBudget = 10.0;

/// Orbits of hFld through each seed, cut at the first exit from the window,
/// with level curves at f(seed) for every seed and at 0 when f has real lines.
Portrait orbit_portrait(const HomogeneousForm& f, const std::vector<Point>& seeds, const Rect& window,
                        const FlowConfig& cfg = {}, int res = 256, double time_budget = kDefaultTimeBudget);

}  // namespace binform
