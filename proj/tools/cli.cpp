#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <sstream>

#include "lctinf/bergman.hpp"
#include "lctinf/errors.hpp"
#include "lctinf/multipliers.hpp"
#include "lctinf/newton.hpp"
#include "lctinf/polynomial.hpp"
#include "lctinf/thresholds.hpp"
#include "lctinf/verifier.hpp"

namespace lctinf::cli {

namespace {

using Json = nlohmann::ordered_json;

Json point_json(const Point& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(to_string(x));
  return a;
}

Json points_json(const std::vector<Point>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(point_json(p));
  return a;
}

Json exponents_json(const std::vector<ExponentVector>& js) {
  Json a = Json::array();
  for (const auto& j : js) a.push_back(j);
  return a;
}

Json complex_json(const std::vector<std::complex<double>>& z) {
  Json a = Json::array();
  for (const auto& x : z) a.push_back({x.real(), x.imag()});
  return a;
}

Json interval_json(const ThresholdInterval& i) {
  if (i.is_exact()) return to_string(i.lo);
  return {{"lo", to_string(i.lo)}, {"hi", to_string(i.hi)}};
}

Json polytope_json(const Polytope& k) {
  Json j;
  j["affine_dim"] = k.affine_dim();
  j["full_dim"] = k.full_dim();
  j["vertices"] = points_json(k.vertices());
  Json fs = Json::array();
  for (const auto& f : k.facets()) fs.push_back({{"normal", point_json(f.normal)}, {"offset", to_string(f.offset)}});
  j["facets"] = fs;
  if (!k.equations().empty()) {
    Json es = Json::array();
    for (const auto& e : k.equations())
      es.push_back({{"normal", point_json(e.normal)}, {"offset", to_string(e.offset)}});
    j["equations"] = es;
  }
  return j;
}

Json basis_json(const MultiplierBasis& b) {
  Json j;
  j["scope"] = to_string(b.scope);
  j["exponents"] = exponents_json(b.exponents);
  if (b.note) j["note"] = *b.note;
  return j;
}

ExtendedRational divide(const ExtendedRational& x, const Rational& t) {
  return x.is_infinite() ? x : ExtendedRational(Rational(x.value() / t));
}

Rational power(const Rational& t, std::size_t k) {
  Rational p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= t;
  return p;
}

struct Input {
  std::optional<PolynomialMap> map;
  std::optional<ToricIndicatorSpec> indicator;
  NewtonData nd;
  NndResult nnd;
  bool toric = false;
  std::optional<Rational> scale;

  std::size_t dim() const { return nd.gamma_inf.dim(); }
};

Input load(const RunConfig& c) {
  if (c.dim < 1) throw InputError("--dim must be at least 1");
  if (c.map.has_value() == c.indicator.has_value())
    throw InputError("exactly one of --map and --indicator is required");
  Input in;
  if (c.map) {
    in.map = parse_map(*c.map, c.dim);
    in.nd = newton_polytopes(*in.map);
    NndBudget budget;
    budget.seed = c.seed;
    in.nnd = nnd_check(*in.map, budget);
    in.toric = in.map->is_monomial_map();
  } else {
    in.indicator = parse_indicator(*c.indicator, c.dim);
    in.nd = newton_data(*in.indicator);
    in.toric = true;
  }
  if (c.scale) {
    in.scale = parse_rational(*c.scale);
    if (*in.scale <= 0) throw InputError("--scale must be positive");
  }
  return in;
}

Json input_json(const Input& in) {
  if (in.map) return {{"kind", "map"}, {"map", to_string(*in.map)}};
  return {{"kind", "indicator"}, {"generators", points_json(in.indicator->generators)}};
}

Json newton_json(const Input& in) {
  const NewtonData& nd = in.nd;
  Json j;
  j["input"] = input_json(in);
  j["gamma"] = polytope_json(nd.gamma);
  j["gamma_inf"] = polytope_json(nd.gamma_inf);
  j["staircase"] = points_json(nd.staircase.generators);
  Json axes = Json::array();
  for (const auto& r : nd.axis_intercepts) axes.push_back(r ? Json(to_string(*r)) : Json());
  j["axis_intercepts"] = axes;
  j["convenient"] = is_convenient(nd).convenient;
  if (in.map) {
    j["degree"] = degree(*in.map);
    j["order_at_zero"] = order_at_zero(*in.map);
  }
  FaceList faces = faces_at_infinity(nd);
  Json fs = Json::array();
  for (const auto& f : faces.faces)
    fs.push_back({{"dimension", f.dimension},
                  {"normal", point_json(f.normal)},
                  {"offset", to_string(f.offset)},
                  {"vertices", points_json(f.vertices)}});
  j["faces_at_infinity"] = fs;
  if (faces.warning) j["faces_warning"] = *faces.warning;
  if (in.map) {
    Json nnd;
    nnd["status"] = to_string(in.nnd.status);
    nnd["faces_checked"] = in.nnd.faces_checked;
    nnd["faces_exact"] = in.nnd.faces_exact;
    if (in.nnd.status == NndStatus::refuted) {
      nnd["witness"] = complex_json(in.nnd.witness);
      if (in.nnd.face) nnd["face_normal"] = point_json(in.nnd.face->normal);
    }
    j["nnd"] = nnd;
  }
  return j;
}

ThresholdReport base_thresholds(const Input& in) {
  return in.map ? lct_map(*in.map, in.nnd.status) : lct_indicator(*in.indicator);
}

Json lct_json(const Input& in) {
  ThresholdReport r = base_thresholds(in);
  std::optional<LocGlob> lg;
  if (in.toric && r.c_inf.is_exact() && !r.c_inf.lo.is_infinite() && in.nd.gamma_inf.full_dim())
    lg = locglob_compare(in.nd.staircase, in.nd.gamma_inf);
  if (in.scale) {
    r = scale_threshold(r, *in.scale);
    if (lg) {
      lg->c_inf = divide(lg->c_inf, *in.scale);
      lg->c_zero = divide(lg->c_zero, *in.scale);
    }
  }
  Json j;
  j["c_inf"] = interval_json(r.c_inf);
  j["lambda_inf"] = interval_json(r.lambda_inf);
  j["c_zero"] = to_string(r.c_zero);
  j["c_zero_certified"] = r.c_zero_certified;
  j["sigma"] = to_string(r.sigma);
  j["loja"] = r.loja ? Json(to_string(*r.loja)) : Json();
  j["convenient"] = r.convenient;
  if (in.map) j["nnd_status"] = to_string(r.nnd_status);
  j["method"] = to_string(r.method);
  if (in.scale) j["scale"] = to_string(*in.scale);
  if (lg)
    j["locglob"] = {{"c_inf", to_string(lg->c_inf)},
                    {"c_zero", to_string(lg->c_zero)},
                    {"equality", lg->equality},
                    {"simplex_detected", lg->simplex_detected}};
  return j;
}

Json multipliers_json(const Input& in) {
  Json j;
  j["at_infinity"] = basis_json(multipliers_at_infinity(in.nd.gamma_inf));
  j["local"] = basis_json(multipliers_local(in.nd.staircase));
  j["global"] = basis_json(multipliers_global(in.nd.gamma_inf, in.nd.staircase));
  return j;
}

Json mass_json(const Input& in) {
  ThresholdReport r = base_thresholds(in);
  std::optional<ExtendedRational> c;
  if (r.c_inf.is_exact()) c = r.c_inf.lo;
  MassReport m = mass_report(in.nd, in.map ? &*in.map : nullptr, in.nnd.status, c);
  const std::size_t n = in.dim();
  const Rational t = in.scale.value_or(Rational(1));
  Json j;
  j["vol_inf"] = to_string(Rational(m.vol_inf * power(t, n)));
  Json ms = Json::array();
  for (const auto& x : scale_masses(m.m, t)) ms.push_back(to_string(x));
  j["m"] = ms;
  j["global_multiplicity"] = m.global_multiplicity ? Json(to_string(*m.global_multiplicity)) : Json();
  j["local_residual_bound"] =
      m.local_residual_bound ? Json(to_string(*m.local_residual_bound)) : Json("inf");
  j["lower_set"] = m.lower_set ? Json(*m.lower_set) : Json();
  if (m.fmd) {
    const FmdRecord& f = *m.fmd;
    Json fj;
    fj["applicable"] = f.applicable;
    fj["c_inf"] = to_string(divide(f.c_inf, t));
    fj["m_n"] = to_string(Rational(f.m_n * power(t, n)));
    fj["lhs_power"] = f.c_inf.is_infinite() ? Json("inf") : Json(to_string(f.lhs_power));
    fj["rhs_power"] = to_string(f.rhs_power);
    fj["holds"] = f.holds;
    fj["equality"] = f.equality;
    j["fmd"] = fj;
  } else {
    j["fmd"] = nullptr;
  }
  if (in.scale) j["scale"] = to_string(t);
  return j;
}

Json verdict_json(const ConvergenceVerdict& v) {
  Json j;
  j["c"] = v.c;
  j["classification"] = to_string(v.classification);
  j["increments"] = v.increments;
  j["tail_ratios"] = v.tail_ratios;
  Json rs = Json::array();
  for (const auto& e : v.records) rs.push_back(Json::parse(to_json_line(e)));
  j["records"] = rs;
  return j;
}

Json verify_json(const Input& in, const RunConfig& c) {
  if (!c.c) throw InputError("verify needs --c");
  ConvergenceVerdict v;
  Json j;
  if (in.map) {
    ShellParams p;
    p.r_inner = c.r_inner;
    p.shells = c.shells;
    p.samples_per_shell = c.samples;
    p.seed = c.seed;
    v = shell_mc_integral(*in.map, *c.c, p);
    j["quantity"] = "c_hat_inf";
  } else {
    ToricTailParams p = default_toric_tail(in.dim());
    if (c.mesh) p.mesh = *c.mesh;
    v = toric_tail_integral(in.nd.gamma_inf, *c.c, p);
    j["quantity"] = "c_inf";
  }
  j.update(verdict_json(v));
  return j;
}

double parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("not a number: '" + std::string(s) + "'");
  return x;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<ComplexPoint> sample_points(const RunConfig& c, std::size_t n) {
  if (!c.points) return bergman_sample_points(n, c.num_points, c.seed);
  std::vector<ComplexPoint> out;
  for (auto item : split(*c.points, ';')) {
    ComplexPoint z;
    for (auto x : split(item, ',')) z.emplace_back(parse_double(x), 0.0);
    if (z.size() != n) throw DimensionError("--points: expected " + std::to_string(n) + " coordinates");
    out.push_back(std::move(z));
  }
  return out;
}

Json bergman_json(const Input& in, const RunConfig& c) {
  if (!in.indicator) throw InputError("bergman needs --indicator");
  ToricFunction u(*in.indicator);
  const Rational kappa = parse_rational(c.kappa);
  std::vector<Rational> ms;
  for (auto s : split(c.m, ',')) {
    ms.push_back(parse_rational(s));
    if (ms.back() <= 0) throw InputError("--m values must be positive");
  }
  const auto zs = sample_points(c, in.dim());
  Json j;
  j["kappa"] = to_string(kappa);
  j["c2"] = mean_value_c2(in.dim());
  std::vector<BergmanRun> ladder;
  Json runs = Json::array();
  for (const auto& m : ms) {
    BergmanRun run = toric_bergman(u, m, kappa, zs);
    Json r;
    r["m"] = to_string(m);
    r["admissible_count"] = run.admissible.size();
    if (run.admissible.empty()) r["empty_admissible"] = true;
    r["admissible"] = exponents_json(run.admissible);
    r["log_norms"] = run.log_norms;
    Json ss = Json::array();
    for (const auto& s : run.samples)
      ss.push_back({{"z", complex_json(s.z)},
                    {"u", s.u},
                    {"u_m", s.u_m},
                    {"sup_u", s.sup_u},
                    {"upper_bound", s.upper_bound},
                    {"upper_ok", s.u_m <= s.upper_bound}});
    r["samples"] = ss;
    runs.push_back(r);
    ladder.push_back(std::move(run));
  }
  j["runs"] = runs;
  if (ladder.size() >= 2) {
    try {
      GapFit f = fit_gap(ladder);
      j["gap_fit"] = {{"m", f.m},         {"gap", f.gap},       {"slope", f.slope},
                      {"c1", f.c1},       {"log_c2", f.log_c2}, {"log_c2_measured", f.log_c2_measured}};
    } catch (const InputError&) {
      j["gap_fit"] = nullptr;
    }
  }
  return j;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += scalar_text(v[i]);
    }
    return s + "]";
  }
  return v.dump();
}

bool has_object(const Json& v) {
  if (v.is_object()) return true;
  if (v.is_array())
    for (const auto& x : v)
      if (x.is_object()) return true;
  return false;
}

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : j.items()) {
    if (!has_object(v)) {
      out << pad << key << ": " << scalar_text(v) << '\n';
    } else if (v.is_object()) {
      out << pad << key << ":\n";
      render_text(v, out, indent + 2);
    } else {
      out << pad << key << ":\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          out << pad << "  -\n";
          render_text(x, out, indent + 4);
        } else {
          out << pad << "  - " << scalar_text(x) << '\n';
        }
      }
    }
  }
}

std::string command_name(Command c) {
  switch (c) {
    case Command::newton: return "newton";
    case Command::lct: return "lct";
    case Command::multipliers: return "multipliers";
    case Command::mass: return "mass";
    case Command::verify: return "verify";
    case Command::bergman: return "bergman";
    case Command::report: return "report";
  }
  return "report";
}

Json dispatch(const RunConfig& c) {
  Input in = load(c);
  Json j;
  j["command"] = command_name(c.command);
  j["dim"] = c.dim;
  switch (c.command) {
    case Command::newton: j.update(newton_json(in)); break;
    case Command::lct: j.update(lct_json(in)); break;
    case Command::multipliers: j.update(multipliers_json(in)); break;
    case Command::mass: j.update(mass_json(in)); break;
    case Command::verify: j.update(verify_json(in, c)); break;
    case Command::bergman: j.update(bergman_json(in, c)); break;
    case Command::report:
      j["newton"] = newton_json(in);
      j["lct"] = lct_json(in);
      j["multipliers"] = multipliers_json(in);
      j["mass"] = mass_json(in);
      if (c.c) j["verify"] = verify_json(in, c);
      break;
  }
  return j;
}

int fail(const RunConfig& c, std::ostream& out, std::ostream& err, const std::string& code,
         const std::exception& e, int status) {
  if (c.json) {
    Json j;
    j["error"]["code"] = code;
    j["error"]["message"] = e.what();
    if (auto* p = dynamic_cast<const ParseError*>(&e)) {
      j["error"]["position"] = p->position();
      if (p->component() >= 0) j["error"]["component"] = p->component();
    }
    out << j.dump(2) << '\n';
  } else {
    err << "error (" << code << "): " << e.what() << '\n';
  }
  return status;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    Json j = dispatch(c);
    if (c.json) {
      out << j.dump(2) << '\n';
    } else {
      if (j.contains("records"))
        for (const auto& r : j["records"]) out << r.dump() << '\n';
      if (j.contains("verify"))
        for (const auto& r : j["verify"]["records"]) out << r.dump() << '\n';
      render_text(j, out, 0);
    }
    return 0;
  } catch (const ParseError& e) {
    return fail(c, out, err, "parse_error", e, 2);
  } catch (const DimensionError& e) {
    return fail(c, out, err, "dimension_error", e, 2);
  } catch (const InputError& e) {
    return fail(c, out, err, "input_error", e, 2);
  } catch (const ConsistencyError& e) {
    return fail(c, out, err, "consistency_error", e, 3);
  } catch (const QuadratureError& e) {
    return fail(c, out, err, "quadrature_error", e, 3);
  } catch (const std::exception& e) {
    return fail(c, out, err, "internal_error", e, 3);
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thresholds, multipliers and masses at infinity for toric and polynomial data",
               "lctinf"};
  app.require_subcommand(1);

  RunConfig c;
  std::string map, indicator, scale, points;
  double cval = 0, mesh = 0;

  const std::vector<std::pair<Command, std::string>> commands{
      {Command::newton, "Newton polytopes, staircase, faces at infinity, non-degeneracy"},
      {Command::lct, "log canonical thresholds at infinity and at 0"},
      {Command::multipliers, "monomial multiplier bases"},
      {Command::mass, "Monge-Ampere masses and the lower-set inequality"},
      {Command::verify, "numeric integrability check at a given c"},
      {Command::bergman, "toric Bergman approximation ladder"},
      {Command::report, "newton, lct, multipliers and mass (plus verify with --c)"}};
  std::vector<std::pair<Command, CLI::App*>> subs;
  for (const auto& [cmd, help] : commands) {
    CLI::App* s = app.add_subcommand(command_name(cmd), help);
    s->add_option("--map", map, "comma-separated polynomial components");
    s->add_option("--indicator", indicator, "semicolon-separated generator points");
    s->add_option("--dim", c.dim, "ambient dimension n")->required()->check(CLI::PositiveNumber);
    s->add_option("--seed", c.seed, "random seed");
    s->add_flag("--json", c.json, "emit one JSON document");
    if (cmd == Command::lct || cmd == Command::mass || cmd == Command::report)
      s->add_option("--scale", scale, "report for t*u instead of u");
    if (cmd == Command::verify || cmd == Command::report) {
      s->add_option("--c", cval, "exponent c")->check(CLI::PositiveNumber);
      s->add_option("--shells", c.shells, "dyadic shells")->check(CLI::PositiveNumber);
      s->add_option("--samples", c.samples, "samples per shell")->check(CLI::PositiveNumber);
      s->add_option("--r-inner", c.r_inner, "inner radius")->check(CLI::PositiveNumber);
      s->add_option("--mesh", mesh, "quadrature mesh for indicator data")->check(CLI::PositiveNumber);
    }
    if (cmd == Command::bergman) {
      s->add_option("--m", c.m, "comma-separated list of m");
      s->add_option("--kappa", c.kappa, "weight exponent, > n");
      s->add_option("--points", points, "semicolon-separated real sample points");
      s->add_option("--num-points", c.num_points, "seeded sample count")->check(CLI::PositiveNumber);
    }
    subs.emplace_back(cmd, s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  for (const auto& [cmd, s] : subs) {
    if (!s->parsed()) continue;
    c.command = cmd;
    if (s->count("--map")) c.map = map;
    if (s->count("--indicator")) c.indicator = indicator;
    if (s->get_option_no_throw("--scale") && s->count("--scale")) c.scale = scale;
    if (s->get_option_no_throw("--c") && s->count("--c")) c.c = cval;
    if (s->get_option_no_throw("--mesh") && s->count("--mesh")) c.mesh = mesh;
    if (s->get_option_no_throw("--points") && s->count("--points")) c.points = points;
  }
  return run(c, out, err);
}

}  // namespace lctinf::cli
