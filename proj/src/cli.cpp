#include "binform/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "binform/expr.hpp"
#include "binform/serialize.hpp"

namespace binform {

namespace {

constexpr double kDefaultEps = 1e-14;

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorKind::InvalidArgument, msg); }

std::optional<std::string> option(const CommandRequest& req, const std::string& key) {
  auto it = req.options.find(key);
  if (it == req.options.end()) return std::nullopt;
  return it->second;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    usage("invalid " + what + " '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) usage("invalid " + what + " '" + text + "'");
  return v;
}

double positive_option(const CommandRequest& req, const std::string& key, double fallback) {
  auto text = option(req, key);
  if (!text) return fallback;
  const double v = parse_double(*text, "--" + key);
  if (!(v > 0)) usage("--" + key + " must be positive");
  return v;
}

double default_eps() {
  if (const char* env = std::getenv("BINFORM_PRECISION"); env && *env) {
    const double v = parse_double(env, "BINFORM_PRECISION");
    if (!(v > 0)) usage("BINFORM_PRECISION must be positive");
    return v;
  }
  return kDefaultEps;
}

Rect parse_window(const CommandRequest& req) {
  auto text = option(req, "window");
  if (!text) return Rect{};
  std::vector<double> v;
  std::stringstream ss(*text);
  for (std::string item; std::getline(ss, item, ',');) v.push_back(parse_double(item, "--window entry"));
  if (v.size() != 4 || !(v[2] > v[0]) || !(v[3] > v[1])) usage("--window expects X0,Y0,X1,Y1 with X0<X1, Y0<Y1");
  return {v[0], v[1], v[2], v[3]};
}

int parse_res(const CommandRequest& req) {
  auto text = option(req, "res");
  if (!text) return 256;
  const double v = parse_double(*text, "--res");
  if (v != std::floor(v) || v < 16 || v > 4096) usage("--res must be an integer in [16, 4096]");
  return static_cast<int>(v);
}

std::vector<Point> read_seeds(const std::string& path) {
  std::ifstream in(path);
  if (!in) usage("cannot open seed file '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) usage("seed file '" + path + "' is empty");
  line.erase(std::remove_if(line.begin(), line.end(), ::isspace), line.end());
  if (line != "x,y") usage("seed file must start with the header 'x,y'");
  std::vector<Point> seeds;
  while (std::getline(in, line)) {
    line.erase(std::remove_if(line.begin(), line.end(), ::isspace), line.end());
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) usage("malformed seed row '" + line + "'");
    seeds.push_back({parse_double(line.substr(0, comma), "seed x"), parse_double(line.substr(comma + 1), "seed y")});
  }
  if (seeds.empty()) usage("seed file has no rows");
  return seeds;
}

// Eight seeds on a circle inside the window, off the coordinate axes.
std::vector<Point> default_seeds(const Rect& w) {
  const double cx = 0.5 * (w.x0 + w.x1), cy = 0.5 * (w.y0 + w.y1);
  const double r = 0.35 * std::min(w.width(), w.height());
  std::vector<Point> seeds;
  for (int i = 0; i < 8; ++i) {
    const double a = std::numbers::pi / 8 + i * std::numbers::pi / 4;
    seeds.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
  }
  return seeds;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) usage("cannot write '" + path + "'");
  out << content;
}

struct Context {
  const CommandRequest& req;
  HomogeneousForm f;
  Json base;

  FactorizationStructure factors() const {
    if (f.degree() == 0) throw Error(ErrorKind::DegreeZero, "constant forms have no factorization");
    return refine(factor_form(f), from_double(default_eps_or_option()));
  }
  double default_eps_or_option() const { return positive_option(req, "eps", default_eps()); }
};

Json cmd_factor(const Context& ctx) {
  Json j = ctx.base;
  j["factors"] = to_json(ctx.factors());
  return j;
}

Json cmd_classify(const Context& ctx) {
  const FactorizationStructure fs = ctx.factors();
  Json j = ctx.base;
  j["factors"] = to_json(fs);
  j["case"] = std::string(1, to_char(classify_case(fs)));
  j["l"] = fs.l();
  j["k"] = fs.k();
  return j;
}

Json cmd_symmetry(const Context& ctx) {
  const FactorizationStructure fs = ctx.factors();
  const double tol = positive_option(ctx.req, "tol", kDefaultSymmetryTol);
  Json j = ctx.base;
  j["case"] = std::string(1, to_char(classify_case(fs)));
  j["symmetry"] = to_json(symmetry_group(ctx.f, fs, tol));
  return j;
}

Json cmd_hamiltonian(const Context& ctx) {
  const FactorizationStructure fs = ctx.factors();
  Json j = ctx.base;
  j["case"] = std::string(1, to_char(classify_case(fs)));
  j["hamiltonian"] = hamiltonian_json(ctx.f);
  j["partition"] = to_json(partition_description(ctx.f, fs));
  return j;
}

Json cmd_decide(const Context& ctx) {
  const TheoremVerdict v = decide_theorem(ctx.factors());
  Json j = ctx.base;
  j["case"] = std::string(1, to_char(v.label));
  j["stab1_ne_stab0"] = v.stab1_ne_stab0;
  j["l"] = v.l;
  j["k"] = v.k;
  j["p"] = v.p;
  j["verdict"] = {{"stab1_ne_stab0", v.stab1_ne_stab0}, {"chain", v.chain}};
  return j;
}

FlowConfig flow_config(const CommandRequest& req) {
  FlowConfig cfg;
  cfg.rel_tol = positive_option(req, "tol", cfg.rel_tol);
  cfg.abs_tol = cfg.rel_tol;
  return cfg;
}

Json cmd_portrait(const Context& ctx) {
  if (ctx.f.degree() == 0) throw Error(ErrorKind::DegreeZero, "portraits need degree at least 1");
  const Rect window = parse_window(ctx.req);
  const int res = parse_res(ctx.req);
  auto seeds_path = option(ctx.req, "seeds");
  const std::vector<Point> seeds = seeds_path ? read_seeds(*seeds_path) : default_seeds(window);
  const double budget = positive_option(ctx.req, "time", kDefaultTimeBudget);
  const std::string format = option(ctx.req, "format").value_or("svg");
  if (format != "svg" && format != "csv" && format != "json") usage("--format must be json, csv or svg");

  const Portrait portrait = orbit_portrait(ctx.f, seeds, window, flow_config(ctx.req), res, budget);
  Json j = ctx.base;
  j["case"] = std::string(1, to_char(classify_case(factor_form(ctx.f))));
  Json orbits = Json::array();
  for (const auto& o : portrait.orbits) {
    orbits.push_back({{"seed", {o.seed.x, o.seed.y}},
                      {"points", o.points.size()},
                      {"forward", std::string(to_string(o.forward))},
                      {"backward", std::string(to_string(o.backward))},
                      {"relative_drift", o.relative_drift}});
  }
  Json levels = Json::array();
  for (const auto& lc : portrait.level_curves) levels.push_back({{"level", lc.level}, {"polylines", lc.polylines.size()}});
  j["portrait"] = {{"window", {window.x0, window.y0, window.x1, window.y1}},
                   {"resolution", res},
                   {"orbits", orbits},
                   {"level_curves", levels}};
  if (auto out = option(ctx.req, "out")) {
    if (format == "svg") write_file(*out, portrait_svg(portrait));
    if (format == "csv") write_file(*out, portrait_csv(portrait));
    if (format == "json") write_file(*out, to_json(portrait).dump(1) + "\n");
    j["portrait"]["output"] = {{"path", *out}, {"format", format}};
  } else if (format == "json") {
    j["portrait"] = to_json(portrait);
  }
  return j;
}

Json cmd_dynamics(const Context& ctx) {
  if (ctx.f.degree() == 0) throw Error(ErrorKind::DegreeZero, "dynamics need degree at least 1");
  const Rect window = parse_window(ctx.req);
  auto seeds_path = option(ctx.req, "seeds");
  const std::vector<Point> seeds = seeds_path ? read_seeds(*seeds_path) : default_seeds(window);
  double T = 1.0;
  if (auto t = option(ctx.req, "time")) T = parse_double(*t, "--time");
  FlowConfig cfg = flow_config(ctx.req);
  cfg.box = window.scaled(2.0);
  const PlanarPolyField field = reduced_field(ctx.f);
  Json trajectories = Json::array();
  std::ostringstream csv;
  csv << std::setprecision(17) << "kind,id,t_or_level,x,y\n";
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const Trajectory tr = integrate_flow(field, seeds[i], T, cfg);
    const double f0 = ctx.f.eval(seeds[i].x, seeds[i].y);
    double drift = 0;
    for (const auto& tp : tr.points) drift = std::max(drift, std::fabs(ctx.f.eval(tp.z.x, tp.z.y) - f0));
    const Point end = tr.points.back().z;
    trajectories.push_back({{"seed", {seeds[i].x, seeds[i].y}},
                            {"status", std::string(to_string(tr.status))},
                            {"end", {tr.points.back().t, end.x, end.y}},
                            {"points", tr.points.size()},
                            {"relative_drift", drift / (1 + std::fabs(f0))}});
    for (const auto& tp : tr.points) csv << "orbit," << i << ',' << tp.t << ',' << tp.z.x << ',' << tp.z.y << '\n';
    if (option(ctx.req, "out") && option(ctx.req, "format").value_or("json") == "json") {
      trajectories.back()["trajectory"] = to_json(tr)["points"];
    }
  }
  Json j = ctx.base;
  j["dynamics"] = {{"field", hamiltonian_json(ctx.f)["hFld"]}, {"time", T}, {"trajectories", trajectories}};
  if (auto out = option(ctx.req, "out")) {
    const std::string format = option(ctx.req, "format").value_or("json");
    if (format == "csv") {
      write_file(*out, csv.str());
    } else if (format == "json") {
      write_file(*out, j.dump(1) + "\n");
    } else {
      usage("dynamics writes json or csv");
    }
  }
  return j;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"factor", "classify", "symmetry", "hamiltonian",
                                              "decide", "portrait", "dynamics"};
  return names;
}

CommandResult run(const CommandRequest& req) {
  CommandResult result;
  try {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), req.command) == names.end()) {
      usage("unknown command '" + req.command + "'");
    }
    static const std::vector<std::string> known{"tol", "eps", "window", "res", "seeds", "out", "format", "time"};
    for (const auto& [key, value] : req.options) {
      if (std::find(known.begin(), known.end(), key) == known.end()) usage("unknown option --" + key);
    }
    HomogeneousForm f = to_homogeneous(parse_polynomial(req.polynomial));
    Json base{{"command", req.command}, {"input", req.polynomial}, {"degree", f.degree()}, {"sign", f.sign()},
              {"canonical", to_text(f)}};
    Context ctx{req, f, base};
    Json out;
    if (req.command == "factor") out = cmd_factor(ctx);
    if (req.command == "classify") out = cmd_classify(ctx);
    if (req.command == "symmetry") out = cmd_symmetry(ctx);
    if (req.command == "hamiltonian") out = cmd_hamiltonian(ctx);
    if (req.command == "decide") out = cmd_decide(ctx);
    if (req.command == "portrait") out = cmd_portrait(ctx);
    if (req.command == "dynamics") out = cmd_dynamics(ctx);
    result.out = out.dump(2) + "\n";
  } catch (const Error& e) {
    result.exit_code = is_usage_error(e.kind()) ? 2 : 1;
    result.err = to_json(e).dump(2) + "\n";
  }
  return result;
}

}  // namespace binform
