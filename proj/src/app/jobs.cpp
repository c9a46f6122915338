#include "app/jobs.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "app/svg.hpp"
#include "core/error.hpp"
#include "core/exparabola.hpp"
#include "core/horocycle.hpp"
#include "core/max_parabola.hpp"
#include "core/min_horocycle.hpp"
#include "core/parallel.hpp"

namespace cx::app {

using json = nlohmann::ordered_json;

namespace {

// ---- input helpers --------------------------------------------------------

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("field '") + what + "' must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string("field '") + what + "' is not finite");
  return v;
}

double number_or(const json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j.at(key), key) : fallback;
}

Point2 point(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw ParseError(std::string("'") + what + "' must be an [x, y] pair");
  return {number(j[0], what), number(j[1], what)};
}

json point_json(const Point2& p) { return json::array({p.x() + 0.0, p.y() + 0.0}); }

json matrix_json(const ConicMatrix& c) {
  const Matrix3 m = c.matrix() / c.frobenius();
  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(json::array({m(i, 0), m(i, 1), m(i, 2)}));
  return rows;
}

json horocycle_json(const Horocycle& h) { return {{"theta", h.theta()}, {"a", h.a()}}; }

Triangle triangle(const json& in) {
  const json& t = in.contains("triangle") ? in.at("triangle") : in;
  return Triangle(point(member(t, "A"), "A"), point(member(t, "B"), "B"), point(member(t, "C"), "C"));
}

std::vector<HalfPlane> halfplanes(const json& in) {
  const json& list = member(in, "halfplanes");
  if (!list.is_array()) throw ParseError("'halfplanes' must be an array");
  std::vector<HalfPlane> out;
  for (const json& h : list) {
    out.push_back(HalfPlane::normalized(point(member(h, "normal"), "normal"), number(member(h, "offset"), "offset")));
  }
  return out;
}

std::vector<HoroPoint> horo_points(const json& in) {
  const json& list = member(in, "points");
  if (!list.is_array()) throw ParseError("'points' must be an array");
  std::vector<HoroPoint> out;
  for (const json& p : list) {
    const Point2 q = point(p, "points");
    out.emplace_back(q.x(), q.y());
  }
  return out;
}

Viewport viewport(const json& in, const Viewport& fallback) {
  if (!in.contains("viewport")) return fallback;
  const json& v = in.at("viewport");
  if (!v.is_array() || v.size() != 4) throw ParseError("'viewport' must be [xmin, xmax, ymin, ymax]");
  Viewport out{number(v[0], "viewport"), number(v[1], "viewport"), number(v[2], "viewport"),
               number(v[3], "viewport")};
  if (!(out.xmin < out.xmax && out.ymin < out.ymax)) throw ParseError("'viewport' is empty");
  return out;
}

double tolerance(const JobOptions& o, const char* key, double fallback) {
  const auto it = o.tolerances.find(key);
  return it == o.tolerances.end() ? fallback : it->second;
}

constexpr Viewport kDiskView{-1.15, 1.15, -1.15, 1.15};

std::string circle_path(double r) { return ellipse_path(Point2::Zero(), r, r, 0.0); }

// ---- exparabola -------------------------------------------------------------

json exparabola_json(const ExparabolaResult& e) {
  const Parabola& p = e.parabola;
  return {{"side", side_name(e.side)},
          {"opposite", std::string(1, vertex_name(e.opposite))},
          {"lambda", e.lambda},
          {"parameter", p.parameter()},
          {"tangency", point_json(e.tangency)},
          {"apex", point_json(p.apex())},
          {"axis_angle", p.axis_angle()},
          {"focus", point_json(p.focus())},
          {"frame", {{"a1", e.frame.a1()}, {"b1", e.frame.b1()}, {"c2", e.frame.c2()}}},
          {"conic", matrix_json(p.conic())}};
}

JobOutput run_exparabola(const json& in, const JobOptions& opt) {
  const Triangle t = triangle(in);
  const auto ex = exparabolas(t);
  json out = {{"command", "exparabola"},
              {"triangle", {{"A", point_json(t.A())}, {"B", point_json(t.B())}, {"C", point_json(t.C())}}}};
  json list = json::array();
  for (const auto& e : ex) list.push_back(exparabola_json(e));
  out["exparabolas"] = std::move(list);

  JobOutput r;
  r.json = out.dump(2) + "\n";
  if (opt.want_svg) {
    const Viewport vp = viewport(in, Viewport{});
    SvgCanvas svg(vp);
    const auto sides = triangle_region(t, Side::AB);
    const char* names[3] = {"AB", "BC", "CA"};
    for (int i = 0; i < 3; ++i) svg.add_path(line_path(sides[i], vp), "#888888", std::string("line-") + names[i], 1.0, true);
    const char* colours[3] = {"#d62728", "#1f77b4", "#2ca02c"};
    for (int i = 0; i < 3; ++i) {
      svg.add_path(parabola_path(ex[i].parabola, vp), colours[i], std::string("exparabola-") + side_name(ex[i].side));
      svg.add_point(ex[i].tangency, colours[i], std::string("tangency-") + side_name(ex[i].side));
    }
    svg.add_point(t.A(), "black", "A");
    svg.add_point(t.B(), "black", "B");
    svg.add_point(t.C(), "black", "C");
    r.svg = svg.str();
  }
  return r;
}

// ---- max-parabola -----------------------------------------------------------

json max_parabola_json(const ConvexRegion& region, const MaxParabolaSolution& s) {
  json hs = json::array();
  for (const HalfPlane& h : region.halfplanes()) hs.push_back({{"normal", point_json(h.normal)}, {"offset", h.offset}});
  const Convergence& c = s.convergence;
  return {{"command", "max-parabola"},
          {"halfplanes", std::move(hs)},
          {"scale", region.scale()},
          {"witness", point_json(region.witness())},
          {"parameter", s.parabola.parameter()},
          {"apex", point_json(s.apex)},
          {"axis_angle", s.axis_angle},
          {"focus", point_json(s.parabola.focus())},
          {"conic", matrix_json(s.parabola.conic())},
          {"active_constraints", s.active_constraints},
          {"min_gap", s.min_gap},
          {"convergence",
           {{"starts", c.starts},
            {"converged", c.converged},
            {"agreeing_starts", c.agreeing_starts},
            {"spread", c.spread},
            {"angle_spread", c.angle_spread},
            {"certified", c.certified},
            {"bimodal", c.bimodal}}}};
}

MaxParabolaOptions max_options(const json& in, const JobOptions& opt) {
  MaxParabolaOptions o;
  o.seed = opt.seed;
  if (in.contains("starts")) o.starts = static_cast<int>(number(in.at("starts"), "starts"));
  if (opt.starts) o.starts = *opt.starts;
  if (o.starts < 1) throw ParseError("starts must be positive");
  return o;
}

JobOutput run_max_parabola(const json& in, const JobOptions& opt) {
  const double scale = tolerance(opt, "scale", number_or(in, "scale", 1e3));
  const ConvexRegion region(halfplanes(in), scale);
  const MaxParabolaSolution s = solve_max_parabola(region, max_options(in, opt));

  JobOutput r;
  r.json = max_parabola_json(region, s).dump(2) + "\n";
  if (opt.want_svg) {
    const Viewport vp = viewport(in, Viewport{});
    SvgCanvas svg(vp);
    for (std::size_t i = 0; i < region.halfplanes().size(); ++i) {
      svg.add_path(line_path(region.halfplanes()[i], vp), "#888888", "boundary-" + std::to_string(i), 1.0, true);
    }
    svg.add_path(parabola_path(s.parabola, vp), "#d62728", "max-parabola");
    svg.add_point(s.apex, "#d62728", "apex");
    r.svg = svg.str();
  }
  return r;
}

// ---- lemma-shrink -----------------------------------------------------------

JobOutput run_lemma_shrink(const json& in, const JobOptions& opt) {
  const double a = number(member(in, "a"), "a");
  const double omega = number(member(in, "omega"), "omega");
  bool unchecked = false;
  if (in.contains("unchecked")) {
    if (!in.at("unchecked").is_boolean()) throw ParseError("'unchecked' must be a boolean");
    unchecked = in.at("unchecked").get<bool>();
  }
  if (!(a > 0.0 && a < 1.0)) fail(ErrorCode::InvalidArgument, "size a must lie in (0, 1)");
  if (!(omega >= 0.0 && omega < std::numbers::pi)) fail(ErrorCode::InvalidArgument, "omega must lie in [0, pi)");

  const Horocycle h0(0.5 * std::numbers::pi + omega, a);
  const Horocycle h1(0.5 * std::numbers::pi - omega, a);
  const IntersectionPoints lu = intersection_points(a, omega);
  const Horocycle h = unchecked ? lemma_shrink_unchecked(a, omega) : lemma_shrink(a, omega);

  json out = {{"command", "lemma-shrink"},
              {"a", a},
              {"omega", omega},
              {"unchecked", unchecked},
              {"H0", horocycle_json(h0)},
              {"H1", horocycle_json(h1)},
              {"H", horocycle_json(h)},
              {"L", point_json({0.0, lu.lower})},
              {"U", point_json({0.0, lu.upper})},
              {"size_decreased", h.a() < a}};
  JobOutput r;
  r.json = out.dump(2) + "\n";
  if (opt.want_svg) {
    SvgCanvas svg(viewport(in, kDiskView));
    svg.add_path(circle_path(1.0), "black", "N");
    svg.add_path(horocycle_path(h0), "#1f77b4", "H0");
    svg.add_path(horocycle_path(h1), "#2ca02c", "H1");
    svg.add_path(horocycle_path(h), "#d62728", "H", 2.0);
    svg.add_point({0.0, lu.lower}, "black", "L");
    svg.add_point({0.0, lu.upper}, "black", "U");
    r.svg = svg.str();
  }
  return r;
}

// ---- min-horocycle ----------------------------------------------------------

MinHorocycleOptions min_options(const json& in, const JobOptions& opt) {
  MinHorocycleOptions o;
  if (in.contains("grid")) o.grid = static_cast<int>(number(in.at("grid"), "grid"));
  if (opt.grid) o.grid = *opt.grid;
  if (o.grid < 8) throw ParseError("grid must be at least 8");
  o.refine_tol = tolerance(opt, "refine_tol", o.refine_tol);
  if (!(o.refine_tol > 0.0)) throw ParseError("refine_tol must be positive");
  if (opt.seed != 0) {
    std::mt19937_64 rng(mix_seed(opt.seed, 0x686f726fULL));
    o.grid_offset = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi / o.grid)(rng);
  }
  return o;
}

json min_horocycle_json(const PointSet& ps, const MinHorocycleSolution& s, const MinHorocycleOptions& o,
                        const SolutionCheck& check) {
  json pts = json::array();
  for (const HoroPoint& p : ps.points()) pts.push_back(json::array({p.x(), p.y()}));
  json minimizers = json::array();
  for (const ProfileSample& m : s.minimizers) minimizers.push_back({{"theta", m.theta}, {"a", m.a}});
  json profile = json::array();
  for (const ProfileSample& m : s.profile) profile.push_back({{"theta", m.theta}, {"a", m.a}});
  return {{"command", "min-horocycle"},
          {"points", std::move(pts)},
          {"horocycle", horocycle_json(s.horocycle)},
          {"a", s.horocycle.a()},
          {"unique", s.unique},
          {"support", s.support},
          {"minimizers", std::move(minimizers)},
          {"grid", o.grid},
          {"grid_offset", o.grid_offset},
          {"verification",
           {{"min_margin", check.min_margin},
            {"min_perturbed_excess", check.min_perturbed_excess},
            {"perturbations", check.perturbations},
            {"uniqueness_checked", check.uniqueness_checked}}},
          {"profile", std::move(profile)}};
}

JobOutput run_min_horocycle(const json& in, const JobOptions& opt) {
  const PointSet ps(horo_points(in));
  const MinHorocycleOptions o = min_options(in, opt);
  const MinHorocycleSolution s = solve_min_horocycle(ps, o);
  const auto perturbations = static_cast<std::size_t>(tolerance(opt, "perturbations", 64));
  const SolutionCheck check = verify_solution(ps, s, perturbations, opt.seed);

  JobOutput r;
  r.json = min_horocycle_json(ps, s, o, check).dump(2) + "\n";
  if (opt.want_svg) {
    SvgCanvas svg(viewport(in, kDiskView));
    svg.add_path(circle_path(1.0), "black", "N");
    svg.add_path(horocycle_path(s.horocycle), "#d62728", "horocycle", 2.0);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      svg.add_point(ps.points()[i].cartesian(), "#1f77b4", "point-" + std::to_string(i));
    }
    r.svg = svg.str();
  }
  return r;
}

// ---- verify -----------------------------------------------------------------

json check_lemma_identities(const json& c) {
  const LemmaIdentityReport r = verify_lemma_identities(number(member(c, "a"), "a"), number(member(c, "t"), "t"));
  return {{"kind", "lemma-identities"},
          {"passed", r.passed},
          {"a", r.a},
          {"t", r.t},
          {"q", r.q},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"inequality_holds", r.inequality_holds},
          {"rhs_at_one", r.rhs_at_one},
          {"rhs_at_one_expected", r.rhs_at_one_expected},
          {"rhs_at_one_rel_error", r.rhs_at_one_rel_error},
          {"difference_rel_error", r.difference_rel_error},
          {"rhs_decreasing", r.rhs_decreasing},
          {"size_decreases", r.size_decreases}};
}

json check_containment(const json& c, const JobOptions& opt) {
  const auto samples = static_cast<std::size_t>(number_or(c, "samples", tolerance(opt, "samples", 1e5)));
  const ContainmentReport r =
      verify_containment_implication(number(member(c, "a"), "a"), number(member(c, "t"), "t"), samples, opt.seed);
  // Above the critical size the implication is not claimed; the counts are
  // reported for inspection only.
  const bool passed = r.form_mismatches == 0 &&
                      (!r.lemma_applies || (r.k_violations == 0 && r.containment_violations == 0));
  return {{"kind", "containment-implication"},
          {"passed", passed},
          {"a", r.a},
          {"t", r.t},
          {"samples", r.samples},
          {"lens_points", r.lens_points},
          {"k_violations", r.k_violations},
          {"containment_violations", r.containment_violations},
          {"form_mismatches", r.form_mismatches},
          {"min_k", r.min_k},
          {"lemma_applies", r.lemma_applies},
          {"shrunk_size", r.shrunk_size}};
}

json check_exparabola(const json& c) {
  const Triangle t = triangle(c);
  const auto ex = exparabolas(t);
  const double diam = t.diameter();
  double residual = 0.0;
  bool contained = true;
  bool local_max = true;
  for (const auto& e : ex) {
    const auto region = triangle_region(t, e.side);
    for (const HalfPlane& h : region) {
      residual = std::max(residual, std::abs(e.parabola.gap(h.normal, h.offset)) / diam);
      contained = contained && parabola_in_halfplane(e.parabola, h);
    }
    const double eps = 1e-5 * (e.frame.b1() - e.frame.a1());
    const double p2 = pencil_squared_parameter(e.frame, e.lambda);
    local_max = local_max && pencil_squared_parameter(e.frame, e.lambda - eps) < p2 &&
                pencil_squared_parameter(e.frame, e.lambda + eps) < p2;
  }
  json params = json::array();
  for (const auto& e : ex) params.push_back(e.parabola.parameter());
  return {{"kind", "exparabola"},
          {"passed", residual <= 1e-9 && contained && local_max},
          {"parameters", std::move(params)},
          {"max_tangency_residual", residual},
          {"contained", contained},
          {"strict_local_max", local_max}};
}

json check_cubic_sign(const json& c, const JobOptions& opt) {
  const auto frames = static_cast<int>(number_or(c, "frames", 1000));
  std::mt19937_64 rng(mix_seed(opt.seed, 0x637562ULL));
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_real_distribution<double> h(0.1, 5.0);
  double worst = 0.0;
  for (int i = 0; i < frames; ++i) {
    double a1 = u(rng);
    double b1 = u(rng);
    if (a1 > b1) std::swap(a1, b1);
    if (b1 - a1 < 1e-3) b1 = a1 + 1e-3;
    const double c2 = h(rng);
    const MonicCubic e = extremum_cubic(CanonicalFrame(a1, b1, c2));
    const double lhs = evaluate(e, a1) * evaluate(e, b1);
    const double rhs = (b1 * b1 + c2 * c2) * (a1 - b1) * (a1 - b1) * (a1 * a1 + c2 * c2);
    worst = std::max(worst, std::abs(lhs + rhs) / std::abs(rhs));
  }
  return {{"kind", "cubic-sign-identity"}, {"passed", worst <= 1e-9}, {"frames", frames}, {"max_rel_error", worst}};
}

json check_min_horocycle(const json& c, const JobOptions& opt) {
  const PointSet ps(horo_points(c));
  const MinHorocycleSolution s = solve_min_horocycle(ps, min_options(c, opt));
  const auto perturbations = static_cast<std::size_t>(number_or(c, "perturbations", 64));
  json out = {{"kind", "min-horocycle"}, {"a", s.horocycle.a()}, {"theta", s.horocycle.theta()}, {"unique", s.unique}};
  try {
    const SolutionCheck check = verify_solution(ps, s, perturbations, opt.seed);
    out["passed"] = true;
    out["min_margin"] = check.min_margin;
    out["min_perturbed_excess"] = check.min_perturbed_excess;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::VerificationFailure) throw;
    out["passed"] = false;
    out["failure"] = e.what();
  }
  return out;
}

json check_max_parabola(const json& c, const JobOptions& opt) {
  const ConvexRegion region(halfplanes(c), number_or(c, "scale", 1e3));
  const MaxParabolaSolution s = solve_max_parabola(region, max_options(c, opt));
  bool contained = true;
  for (const HalfPlane& h : region.halfplanes()) contained = contained && parabola_in_halfplane(s.parabola, h);
  const bool feasible = s.min_gap >= -1e-7 * region.scale();
  const bool passed = contained && feasible && s.active_constraints.size() >= 3 && s.convergence.certified;
  return {{"kind", "max-parabola"},
          {"passed", passed},
          {"parameter", s.parabola.parameter()},
          {"min_gap", s.min_gap},
          {"contained", contained},
          {"active_constraints", s.active_constraints},
          {"certified", s.convergence.certified},
          {"agreeing_starts", s.convergence.agreeing_starts}};
}

json default_checks() {
  const json tri = {{"A", {-1.0, 0.0}}, {"B", {1.0, 0.0}}, {"C", {0.0, 1.0}}};
  return json::array({
      {{"kind", "lemma-identities"}, {"a", 0.5}, {"t", 0.2}},
      {{"kind", "lemma-identities"}, {"a", 0.65}, {"t", 0.3}},
      {{"kind", "containment-implication"}, {"a", 0.5}, {"t", 0.2}, {"samples", 100000}},
      {{"kind", "exparabola"}, {"triangle", tri}},
      {{"kind", "cubic-sign-identity"}, {"frames", 1000}},
      {{"kind", "min-horocycle"}, {"points", {{0.0, 0.5}, {0.3, 0.2}, {-0.3, 0.2}}}},
      {{"kind", "max-parabola"},
       {"halfplanes",
        {{{"normal", {0.0, 1.0}}, {"offset", 0.0}},
         {{"normal", {1.0, 1.0}}, {"offset", 1.0}},
         {{"normal", {-1.0, 1.0}}, {"offset", 1.0}}}}},
  });
}

JobOutput run_verify(const json& in, const JobOptions& opt) {
  const json checks = in.contains("checks") ? in.at("checks") : default_checks();
  if (!checks.is_array()) throw ParseError("'checks' must be an array");
  json results = json::array();
  bool all = true;
  for (const json& c : checks) {
    if (!c.is_object() || !c.contains("kind") || !c.at("kind").is_string()) throw ParseError("check without 'kind'");
    const std::string kind = c.at("kind").get<std::string>();
    json r;
    if (kind == "lemma-identities") {
      r = check_lemma_identities(c);
    } else if (kind == "containment-implication") {
      r = check_containment(c, opt);
    } else if (kind == "exparabola") {
      r = check_exparabola(c);
    } else if (kind == "cubic-sign-identity") {
      r = check_cubic_sign(c, opt);
    } else if (kind == "min-horocycle") {
      r = check_min_horocycle(c, opt);
    } else if (kind == "max-parabola") {
      r = check_max_parabola(c, opt);
    } else {
      throw ParseError("unknown check kind '" + kind + "'");
    }
    all = all && r.at("passed").get<bool>();
    results.push_back(std::move(r));
  }
  json out = {{"command", "verify"}, {"passed", all}, {"seed", opt.seed}, {"checks", std::move(results)}};
  JobOutput r;
  r.exit_code = all ? kSuccess : kVerificationFailed;
  r.json = out.dump(2) + "\n";
  return r;
}

std::string diagnostic(std::string_view error, const std::string& message, int code) {
  return json{{"error", error}, {"message", message}, {"exit_code", code}}.dump();
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::Exparabola, Command::MaxParabola, Command::LemmaShrink, Command::MinHorocycle,
                    Command::Verify}) {
    if (command_name(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view command_name(Command c) noexcept {
  switch (c) {
    case Command::Exparabola: return "exparabola";
    case Command::MaxParabola: return "max-parabola";
    case Command::LemmaShrink: return "lemma-shrink";
    case Command::MinHorocycle: return "min-horocycle";
    case Command::Verify: return "verify";
  }
  return "?";
}

JobOutput execute(Command command, const std::string& input, const JobOptions& options) {
  for (const auto& [key, value] : options.tolerances) {
    if (key != "scale" && key != "refine_tol" && key != "perturbations" && key != "samples") {
      throw ParseError("unknown tolerance key '" + key + "'");
    }
    if (!std::isfinite(value)) throw ParseError("tolerance '" + key + "' is not finite");
  }
  json in;
  try {
    in = json::parse(input);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!in.is_object()) throw ParseError("input must be a JSON object");
  try {
    switch (command) {
      case Command::Exparabola: return run_exparabola(in, options);
      case Command::MaxParabola: return run_max_parabola(in, options);
      case Command::LemmaShrink: return run_lemma_shrink(in, options);
      case Command::MinHorocycle: return run_min_horocycle(in, options);
      case Command::Verify: return run_verify(in, options);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("schema error: ") + e.what());
  }
  throw ParseError("unknown command");
}

RunOutcome execute_to(Command command, const std::string& input, const JobOptions& options, JobOutput& out) {
  try {
    out = execute(command, input, options);
    return {out.exit_code, {}};
  } catch (const ParseError& e) {
    return {kIoError, diagnostic("ParseError", e.what(), kIoError)};
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::VerificationFailure ? kVerificationFailed : kDomainError;
    return {code, diagnostic(to_string(e.code()), e.what(), code)};
  } catch (const std::exception& e) {
    return {kDomainError, diagnostic("InternalError", e.what(), kDomainError)};
  }
}

RunOutcome run(const JobSpec& spec) {
  std::ifstream in(spec.input_path, std::ios::binary);
  if (!in) return {kIoError, diagnostic("IoError", "cannot read " + spec.input_path, kIoError)};
  std::ostringstream text;
  text << in.rdbuf();

  JobOptions options = spec.options;
  options.want_svg = spec.svg_path.has_value();
  JobOutput out;
  RunOutcome outcome = execute_to(spec.command, text.str(), options, out);
  if (outcome.exit_code != kSuccess && outcome.exit_code != kVerificationFailed) return outcome;
  if (out.json.empty()) return outcome;

  std::ofstream o(spec.output_path, std::ios::binary | std::ios::trunc);
  if (!(o << out.json) || !o.flush()) return {kIoError, diagnostic("IoError", "cannot write " + spec.output_path, kIoError)};
  if (spec.svg_path && out.svg) {
    std::ofstream s(*spec.svg_path, std::ios::binary | std::ios::trunc);
    if (!(s << *out.svg) || !s.flush()) return {kIoError, diagnostic("IoError", "cannot write " + *spec.svg_path, kIoError)};
  }
  if (outcome.exit_code == kVerificationFailed && outcome.diagnostic.empty()) {
    outcome.diagnostic = diagnostic("VerificationFailure", "one or more checks failed", kVerificationFailed);
  }
  return outcome;
}

}  // namespace cx::app
