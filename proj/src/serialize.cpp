#include "binform/serialize.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "binform/expr.hpp"

namespace binform {

Json to_json(const Mat2d& m) { return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }

namespace {

Json interval_json(const Interval& iv) { return Json::array({to_string(iv.lo), to_string(iv.hi)}); }

Json point_json(Point z) { return Json::array({z.x, z.y}); }

}  // namespace

Json to_json(const FactorizationStructure& fs) {
  Json linear = Json::array();
  for (const auto& lf : fs.linear) {
    Json j;
    if (lf.is_axis()) {
      j["factor"] = "x";
      j["direction"] = point_json(lf.line_direction());
    } else {
      j["factor"] = "y - t*x";
      j["root"] = lf.root().approx;
      j["root_interval"] = interval_json(lf.root().interval);
    }
    j["alpha"] = lf.multiplicity;
    linear.push_back(j);
  }
  Json quadratic = Json::array();
  for (const auto& qf : fs.quadratic) {
    quadratic.push_back({{"a", qf.coeffs_approx[0]},
                         {"b", qf.coeffs_approx[1]},
                         {"c", qf.coeffs_approx[2]},
                         {"a_interval", interval_json(qf.a)},
                         {"b_interval", interval_json(qf.b)},
                         {"beta", qf.multiplicity}});
  }
  return {{"linear", linear}, {"quadratic", quadratic}, {"scale", to_string(fs.scale)}};
}

Json to_json(const SymmetryGroup& g) {
  Json j{{"kind", std::string(kind_name(g))}, {"contains_minus_identity", contains_minus_identity(g)}};
  if (const auto* a = std::get_if<CaseA>(&g)) {
    j["family"] = {{"form", "N*[[a,b],[0,1]]*N^-1, a > 0"}, {"N", to_json(a->N)}, {"alpha", a->alpha},
                   {"parity", a->odd ? "odd" : "even"}, {"components", a->odd ? 1 : 2}};
  } else if (const auto* b = std::get_if<CaseB>(&g)) {
    j["family"] = {{"form", "N*diag(exp(alpha2*t), exp(-alpha1*t))*N^-1"},
                   {"N", to_json(b->N)},
                   {"alpha1", b->alpha1},
                   {"alpha2", b->alpha2},
                   {"quarter_turn_in_group", b->quarter_turn_in_group},
                   {"minus_identity_in_group", b->minus_identity_in_group}};
  } else if (const auto* c = std::get_if<CaseC>(&g)) {
    j["family"] = {{"form", "N*R(theta)*N^-1"}, {"N", to_json(c->N)}};
  } else {
    const auto& fc = std::get<FiniteCyclic>(g);
    j["n"] = fc.n;
    j["generator"] = to_json(fc.generator);
    j["residual"] = fc.residual;
    Json elems = Json::array();
    for (const auto& e : fc.elements) elems.push_back(to_json(e));
    j["elements"] = elems;
  }
  return j;
}

Json to_json(const TheoremVerdict& v) {
  return {{"case", std::string(1, to_char(v.label))},
          {"p", v.p},
          {"l", v.l},
          {"k", v.k},
          {"stab1_ne_stab0", v.stab1_ne_stab0},
          {"chain", v.chain}};
}

Json to_json(const PartitionDescription& pd) {
  Json rays = Json::array();
  for (const auto& r : pd.zero_set_rays) {
    rays.push_back({{"angle", r.angle}, {"angle_interval", {r.angle_lo, r.angle_hi}}, {"line", r.line}});
  }
  return {{"case", std::string(1, to_char(pd.label))},
          {"singular_elements", to_string(pd.singular)},
          {"regular_elements", to_string(pd.regular)},
          {"level_sign", pd.level_sign},
          {"orientation_sign", pd.orientation_sign},
          {"zero_set_rays", rays}};
}

Json to_json(const Trajectory& tr) {
  Json pts = Json::array();
  for (const auto& tp : tr.points) pts.push_back({tp.t, tp.z.x, tp.z.y});
  return {{"status", std::string(to_string(tr.status))}, {"points", pts}};
}

Json to_json(const Portrait& p) {
  Json curves = Json::array();
  for (const auto& lc : p.level_curves) {
    Json lines = Json::array();
    for (const auto& pl : lc.polylines) {
      Json pts = Json::array();
      for (const auto& z : pl) pts.push_back(point_json(z));
      lines.push_back(pts);
    }
    curves.push_back({{"level", lc.level}, {"polylines", lines}});
  }
  Json orbits = Json::array();
  for (const auto& o : p.orbits) {
    Json pts = Json::array();
    for (const auto& tp : o.points) pts.push_back({tp.t, tp.z.x, tp.z.y});
    orbits.push_back({{"seed", point_json(o.seed)},
                      {"forward", std::string(to_string(o.forward))},
                      {"backward", std::string(to_string(o.backward))},
                      {"seed_outside_window", o.seed_outside_window},
                      {"f_drift", o.f_drift},
                      {"relative_drift", o.relative_drift},
                      {"points", pts}});
  }
  return {{"window", {p.window.x0, p.window.y0, p.window.x1, p.window.y1}},
          {"resolution", p.resolution},
          {"origin_singular", p.origin_singular},
          {"level_curves", curves},
          {"orbits", orbits}};
}

Json to_json(const Error& e) {
  Json j{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (e.offset()) j["offset"] = *e.offset();
  if (!e.details().empty()) j["details"] = e.details();
  return {{"error", j}};
}

Json hamiltonian_json(const HomogeneousForm& f) {
  auto [fx, fy] = partials(f);
  ReducedComponents rc = reduced_components(f);
  return {{"F", {to_text(Rational(-1) * fy), to_text(fx)}},
          {"D", to_text(rc.D)},
          {"hFld", {to_text(rc.P), to_text(rc.Q)}},
          {"deg_hFld", rc.P.degree()}};
}

namespace {

constexpr int kArrowEvery = 25;

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(8) << v;
  return os.str();
}

}  // namespace

std::string portrait_svg(const Portrait& p) {
  const Rect& w = p.window;
  const double unit = std::max(w.width(), w.height()) / 400.0;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(w.x0) << ' ' << fmt(-w.y1) << ' '
     << fmt(w.width()) << ' ' << fmt(w.height()) << "\" width=\"600\" height=\"600\">\n";
  os << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-linejoin=\"round\">\n";
  os << "<rect x=\"" << fmt(w.x0) << "\" y=\"" << fmt(w.y0) << "\" width=\"" << fmt(w.width()) << "\" height=\""
     << fmt(w.height()) << "\" fill=\"white\"/>\n";
  for (const auto& lc : p.level_curves) {
    const char* color = lc.level == 0.0 ? "#c0392b" : "#7f8c8d";
    for (const auto& pl : lc.polylines) {
      os << "<path stroke=\"" << color << "\" stroke-width=\"" << fmt(unit) << "\" d=\"";
      for (std::size_t i = 0; i < pl.size(); ++i) {
        os << (i == 0 ? "M" : " L") << fmt(pl[i].x) << ' ' << fmt(pl[i].y);
      }
      os << "\"/>\n";
    }
  }
  for (const auto& o : p.orbits) {
    if (o.points.size() < 2) continue;
    os << "<polyline stroke=\"#2471a3\" stroke-width=\"" << fmt(1.5 * unit) << "\" points=\"";
    for (std::size_t i = 0; i < o.points.size(); ++i) {
      os << (i == 0 ? "" : " ") << fmt(o.points[i].z.x) << ',' << fmt(o.points[i].z.y);
    }
    os << "\"/>\n";
    for (std::size_t i = kArrowEvery; i + 1 < o.points.size(); i += kArrowEvery) {
      const Point a = o.points[i].z, b = o.points[i + 1].z;
      const double dx = b.x - a.x, dy = b.y - a.y, len = std::hypot(dx, dy);
      if (len == 0) continue;
      const double ux = dx / len, uy = dy / len, s = 6 * unit;
      const Point tip{a.x + ux * s, a.y + uy * s};
      const Point l{a.x - uy * s * 0.5, a.y + ux * s * 0.5};
      const Point r{a.x + uy * s * 0.5, a.y - ux * s * 0.5};
      os << "<polygon fill=\"#2471a3\" points=\"" << fmt(tip.x) << ',' << fmt(tip.y) << ' ' << fmt(l.x) << ','
         << fmt(l.y) << ' ' << fmt(r.x) << ',' << fmt(r.y) << "\"/>\n";
    }
  }
  if (p.origin_singular && w.contains({0.0, 0.0})) {
    os << "<circle cx=\"0\" cy=\"0\" r=\"" << fmt(4 * unit) << "\" fill=\"black\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string portrait_csv(const Portrait& p) {
  std::ostringstream os;
  os << std::setprecision(17) << "kind,id,t_or_level,x,y\n";
  int id = 0;
  for (const auto& lc : p.level_curves) {
    for (const auto& pl : lc.polylines) {
      for (const auto& z : pl) os << "level," << id << ',' << lc.level << ',' << z.x << ',' << z.y << '\n';
      ++id;
    }
  }
  for (std::size_t i = 0; i < p.orbits.size(); ++i) {
    for (const auto& tp : p.orbits[i].points) {
      os << "orbit," << i << ',' << tp.t << ',' << tp.z.x << ',' << tp.z.y << '\n';
    }
  }
  return os.str();
}

}  // namespace binform
