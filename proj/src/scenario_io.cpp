#include "fpcheck/scenario_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fpcheck {

const char* const kToolVersion = "0.1.0";

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& context) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = std::any_of(allowed.begin(), allowed.end(),
                          [&](const char* k) { return it.key() == k; });
    if (!ok) throw ParseError("unknown key '" + it.key() + "' in " + context);
  }
}

const json& need(const json& obj, const char* key, const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing key '" + std::string(key) + "' in " + context);
  return *it;
}

double need_finite(const json& j, const std::string& context) {
  if (!j.is_number()) throw ParseError(context + " must be a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(context + " must be finite");
  return v;
}

MetricSpace space_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("space must be an object");
  std::string kind = need(j, "kind", "space").get<std::string>();
  if (kind == "finite") {
    reject_unknown_keys(j, {"kind", "labels", "matrix"}, "space");
    auto labels = need(j, "labels", "space").get<std::vector<std::string>>();
    auto matrix = need(j, "matrix", "space").get<std::vector<std::vector<double>>>();
    MetricSpace s = MetricSpace::finite(std::move(labels), std::move(matrix));
    AxiomReport axioms = check_metric_axioms(s);
    if (!axioms.all_ok())
      throw InvalidArgument("finite distance matrix violates the metric axioms (" +
                            axioms.violations.front().axiom + ")");
    return s;
  }
  if (kind == "real_line") {
    reject_unknown_keys(j, {"kind", "interval"}, "space");
    const json& iv = need(j, "interval", "space");
    if (!iv.is_array() || iv.size() != 2) throw ParseError("interval must be [a, b]");
    return MetricSpace::real_line(need_finite(iv[0], "interval a"),
                                  need_finite(iv[1], "interval b"));
  }
  if (kind == "euclidean") {
    reject_unknown_keys(j, {"kind", "box_lo", "box_hi"}, "space");
    return MetricSpace::euclidean(need(j, "box_lo", "space").get<std::vector<double>>(),
                                  need(j, "box_hi", "space").get<std::vector<double>>());
  }
  throw ParseError("unknown space kind '" + kind + "'");
}

json space_to_json(const MetricSpace& s) {
  switch (s.kind) {
    case SpaceKind::Finite:
      return {{"kind", "finite"}, {"labels", s.labels}, {"matrix", s.dist}};
    case SpaceKind::RealLine:
      return {{"kind", "real_line"}, {"interval", {s.lo, s.hi}}};
    case SpaceKind::Euclidean:
      return {{"kind", "euclidean"}, {"box_lo", s.box_lo}, {"box_hi", s.box_hi}};
  }
  return {};
}

SelfMap map_from_json(const json& j, const MetricSpace& space) {
  if (!j.is_object()) throw ParseError("map must be an object");
  std::string family = need(j, "family", "map").get<std::string>();
  if (family == "affine") {
    reject_unknown_keys(j, {"family", "slope", "offset"}, "map");
    return SelfMap::affine(need_finite(need(j, "slope", "map"), "slope"),
                           need_finite(need(j, "offset", "map"), "offset"));
  }
  if (family == "constant") {
    reject_unknown_keys(j, {"family", "target"}, "map");
    return SelfMap::constant(point_from_json(need(j, "target", "map"), space));
  }
  if (family == "translation") {
    reject_unknown_keys(j, {"family", "offset"}, "map");
    const json& off = need(j, "offset", "map");
    if (off.is_array()) return SelfMap::translation_vec(off.get<std::vector<double>>());
    return SelfMap::translation(need_finite(off, "offset"));
  }
  if (family == "negate") {
    reject_unknown_keys(j, {"family"}, "map");
    return SelfMap::negate();
  }
  if (family == "finite_table") {
    reject_unknown_keys(j, {"family", "table"}, "map");
    return SelfMap::finite_table(need(j, "table", "map").get<std::vector<int>>());
  }
  if (family == "compose") {
    reject_unknown_keys(j, {"family", "maps"}, "map");
    const json& parts = need(j, "maps", "map");
    if (!parts.is_array() || parts.empty())
      throw ParseError("compose needs a nonempty maps array");
    std::vector<SelfMap> maps;
    for (const auto& p : parts) maps.push_back(map_from_json(p, space));
    return SelfMap::compose(std::move(maps));
  }
  throw ParseError("unknown map family '" + family + "'");
}

json map_to_json(const SelfMap& m) {
  switch (m.family) {
    case SelfMap::Family::Affine:
      return {{"family", "affine"}, {"slope", m.slope}, {"offset", m.offset}};
    case SelfMap::Family::Constant:
      return {{"family", "constant"}, {"target", point_to_json(m.target)}};
    case SelfMap::Family::Translation:
      if (!m.voffset.empty()) return {{"family", "translation"}, {"offset", m.voffset}};
      return {{"family", "translation"}, {"offset", m.offset}};
    case SelfMap::Family::Negate:
      return {{"family", "negate"}};
    case SelfMap::Family::FiniteTable:
      return {{"family", "finite_table"}, {"table", m.table}};
    case SelfMap::Family::Compose: {
      json parts = json::array();
      for (const auto& p : m.parts) parts.push_back(map_to_json(p));
      return {{"family", "compose"}, {"maps", parts}};
    }
  }
  return {};
}

ConditionFamily family_from_string(const std::string& s) {
  if (s == "banach") return ConditionFamily::Banach;
  if (s == "nonexpansive") return ConditionFamily::Nonexpansive;
  if (s == "pata_original") return ConditionFamily::PataOriginal;
  if (s == "berinde_linear") return ConditionFamily::BerindeLinear;
  if (s == "growth_bound") return ConditionFamily::GrowthBound;
  if (s == "berinde_316") return ConditionFamily::Berinde316;
  if (s == "almost_contraction") return ConditionFamily::AlmostContraction;
  throw ParseError("unknown condition family '" + s + "'");
}

std::string family_to_string(ConditionFamily f) {
  switch (f) {
    case ConditionFamily::Banach: return "banach";
    case ConditionFamily::Nonexpansive: return "nonexpansive";
    case ConditionFamily::PataOriginal: return "pata_original";
    case ConditionFamily::BerindeLinear: return "berinde_linear";
    case ConditionFamily::GrowthBound: return "growth_bound";
    case ConditionFamily::Berinde316: return "berinde_316";
    case ConditionFamily::AlmostContraction: return "almost_contraction";
  }
  return "";
}

ConditionSpec condition_from_json(const json& j, const MetricSpace& space) {
  if (!j.is_object()) throw ParseError("condition must be an object");
  reject_unknown_keys(j,
                      {"family", "quantifier", "eps", "lambda_cap", "alpha", "beta",
                       "gauge", "lambda", "bound", "delta", "base"},
                      "condition");
  ConditionSpec spec;
  spec.family = family_from_string(need(j, "family", "condition").get<std::string>());
  spec.base = point_from_json(need(j, "base", "condition"), space);

  if (j.contains("quantifier")) {
    std::string q = j["quantifier"].get<std::string>();
    if (q == "forall") spec.quantifier = Quantifier::ForallEps;
    else if (q == "exists") spec.quantifier = Quantifier::ExistsEps;
    else if (q == "fixed") spec.quantifier = Quantifier::FixedEps;
    else throw ParseError("unknown quantifier '" + q + "'");
  }
  if (spec.quantifier == Quantifier::FixedEps)
    spec.fixed_eps = need_finite(need(j, "eps", "condition"), "eps");
  else if (j.contains("eps"))
    throw ParseError("'eps' is only valid with the fixed quantifier");

  switch (spec.family) {
    case ConditionFamily::Banach:
      spec.banach_lambda = need_finite(need(j, "lambda", "condition"), "lambda");
      break;
    case ConditionFamily::Nonexpansive:
      break;
    case ConditionFamily::GrowthBound:
      spec.growth_bound = need_finite(need(j, "bound", "condition"), "bound");
      break;
    case ConditionFamily::AlmostContraction:
      spec.almost_delta = need_finite(need(j, "delta", "condition"), "delta");
      spec.almost_bound = need_finite(need(j, "bound", "condition"), "bound");
      break;
    default:
      spec.pata.lambda_cap = need_finite(need(j, "lambda_cap", "condition"), "lambda_cap");
      spec.pata.alpha = need_finite(need(j, "alpha", "condition"), "alpha");
      spec.pata.beta = need_finite(need(j, "beta", "condition"), "beta");
      spec.pata.gauge = gauge_from_json(need(j, "gauge", "condition"));
      break;
  }
  spec.validate();
  return spec;
}

json condition_to_json(const ConditionSpec& spec) {
  json j;
  j["family"] = family_to_string(spec.family);
  switch (spec.quantifier) {
    case Quantifier::ForallEps: j["quantifier"] = "forall"; break;
    case Quantifier::ExistsEps: j["quantifier"] = "exists"; break;
    case Quantifier::FixedEps:
      j["quantifier"] = "fixed";
      j["eps"] = spec.fixed_eps;
      break;
  }
  switch (spec.family) {
    case ConditionFamily::Banach:
      j["lambda"] = spec.banach_lambda;
      break;
    case ConditionFamily::Nonexpansive:
      break;
    case ConditionFamily::GrowthBound:
      j["bound"] = spec.growth_bound;
      break;
    case ConditionFamily::AlmostContraction:
      j["delta"] = spec.almost_delta;
      j["bound"] = spec.almost_bound;
      break;
    default:
      j["lambda_cap"] = spec.pata.lambda_cap;
      j["alpha"] = spec.pata.alpha;
      j["beta"] = spec.pata.beta;
      j["gauge"] = gauge_to_json(spec.pata.gauge);
      break;
  }
  j["base"] = point_to_json(spec.base);
  return j;
}

}  // namespace

json point_to_json(const Point& p) {
  if (p.is_finite()) return p.index();
  if (p.is_real()) return p.scalar();
  return p.coords();
}

Point point_from_json(const json& j, const MetricSpace& space) {
  switch (space.kind) {
    case SpaceKind::Finite: {
      if (j.is_string()) {
        const auto& labels = space.labels;
        auto it = std::find(labels.begin(), labels.end(), j.get<std::string>());
        if (it == labels.end())
          throw InvalidArgument("unknown finite-space label '" + j.get<std::string>() + "'");
        return Point::finite(static_cast<int>(it - labels.begin()));
      }
      if (!j.is_number_integer()) throw ParseError("finite point must be an index or label");
      int idx = j.get<int>();
      if (idx < 0 || idx >= space.size())
        throw InvalidArgument("finite point index out of range");
      return Point::finite(idx);
    }
    case SpaceKind::RealLine:
      return Point::real(need_finite(j, "point"));
    case SpaceKind::Euclidean: {
      if (!j.is_array()) throw ParseError("euclidean point must be an array");
      auto v = j.get<std::vector<double>>();
      if (static_cast<int>(v.size()) != space.dim)
        throw InvalidArgument("point dimension does not match space");
      return Point::vec(std::move(v));
    }
  }
  throw ParseError("bad point");
}

json gauge_to_json(const Gauge& g) {
  switch (g.family) {
    case Gauge::Family::Power:
      return {{"family", "power"}, {"gamma", g.gamma}};
    case Gauge::Family::Identity:
      return {{"family", "identity"}};
    case Gauge::Family::Table: {
      json pts = json::array();
      for (const auto& [t, v] : g.table) pts.push_back({t, v});
      return {{"family", "table"}, {"points", pts}};
    }
  }
  return {};
}

Gauge gauge_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("gauge must be an object");
  std::string family = need(j, "family", "gauge").get<std::string>();
  if (family == "power") {
    reject_unknown_keys(j, {"family", "gamma"}, "gauge");
    return Gauge::power(need_finite(need(j, "gamma", "gauge"), "gamma"));
  }
  if (family == "identity") {
    reject_unknown_keys(j, {"family"}, "gauge");
    return Gauge::identity();
  }
  if (family == "table") {
    reject_unknown_keys(j, {"family", "points"}, "gauge");
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : need(j, "points", "gauge")) {
      if (!p.is_array() || p.size() != 2) throw ParseError("table point must be [t, value]");
      pts.emplace_back(need_finite(p[0], "table t"), need_finite(p[1], "table value"));
    }
    return Gauge::from_table(std::move(pts));
  }
  throw ParseError("unknown gauge family '" + family + "'");
}

Gauge gauge_from_string(const std::string& text) {
  if (text == "identity") return Gauge::identity();
  if (text.rfind("pow:", 0) == 0) {
    try {
      return Gauge::power(std::stod(text.substr(4)));
    } catch (const std::logic_error&) {
      throw ParseError("bad power gauge spec '" + text + "'");
    }
  }
  throw ParseError("unknown gauge spec '" + text + "' (expected pow:<gamma> or identity)");
}

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) throw ParseError("scenario document must be an object");
  reject_unknown_keys(doc,
                      {"name", "description", "space", "map", "condition", "iteration",
                       "sampling", "expected"},
                      "scenario");
  Scenario s;
  if (doc.contains("name")) s.name = doc["name"].get<std::string>();
  if (doc.contains("description")) s.description = doc["description"].get<std::string>();
  s.space = space_from_json(need(doc, "space", "scenario"));
  s.map = map_from_json(need(doc, "map", "scenario"), s.space);
  s.spec = condition_from_json(need(doc, "condition", "scenario"), s.space);

  if (doc.contains("iteration")) {
    const json& it = doc["iteration"];
    reject_unknown_keys(it, {"x0", "max_iter", "tol"}, "iteration");
    if (it.contains("x0")) s.iteration.x0 = point_from_json(it["x0"], s.space);
    else s.iteration.x0 = s.spec.base;
    if (it.contains("max_iter")) {
      s.iteration.max_iter = it["max_iter"].get<int>();
      if (s.iteration.max_iter < 1) throw InvalidArgument("max_iter must be >= 1");
    }
    if (it.contains("tol")) {
      s.iteration.tol_conv = need_finite(it["tol"], "tol");
      if (!(s.iteration.tol_conv > 0.0)) throw InvalidArgument("tol must be positive");
    }
  } else {
    s.iteration.x0 = s.spec.base;
  }

  if (doc.contains("sampling")) {
    const json& sp = doc["sampling"];
    reject_unknown_keys(sp, {"eps_grid", "pairs", "seed"}, "sampling");
    if (sp.contains("eps_grid")) {
      s.sampling.eps_grid = sp["eps_grid"].get<int>();
      if (s.sampling.eps_grid < 2) throw InvalidArgument("eps_grid must be >= 2");
    }
    if (sp.contains("pairs")) {
      s.sampling.pairs = sp["pairs"].get<int>();
      if (s.sampling.pairs < 1) throw InvalidArgument("pairs must be >= 1");
    }
    if (sp.contains("seed")) s.sampling.seed = sp["seed"].get<std::uint64_t>();
  }

  if (doc.contains("expected")) {
    const json& ex = doc["expected"];
    reject_unknown_keys(ex, {"condition_holds", "fixed_point", "audits_pass"}, "expected");
    if (ex.contains("condition_holds"))
      s.expected.condition_holds = ex["condition_holds"].get<bool>();
    if (ex.contains("fixed_point")) s.expected.fixed_point = ex["fixed_point"].get<bool>();
    if (ex.contains("audits_pass")) s.expected.audits_pass = ex["audits_pass"].get<bool>();
  }
  return s;
}

json scenario_to_json(const Scenario& s) {
  json doc;
  if (!s.name.empty()) doc["name"] = s.name;
  if (!s.description.empty()) doc["description"] = s.description;
  doc["space"] = space_to_json(s.space);
  doc["map"] = map_to_json(s.map);
  doc["condition"] = condition_to_json(s.spec);
  doc["iteration"] = {{"x0", point_to_json(s.iteration.x0)},
                      {"max_iter", s.iteration.max_iter},
                      {"tol", s.iteration.tol_conv}};
  doc["sampling"] = {{"eps_grid", s.sampling.eps_grid},
                     {"pairs", s.sampling.pairs},
                     {"seed", s.sampling.seed}};
  json ex = json::object();
  if (s.expected.condition_holds) ex["condition_holds"] = *s.expected.condition_holds;
  if (s.expected.fixed_point) ex["fixed_point"] = *s.expected.fixed_point;
  if (s.expected.audits_pass) ex["audits_pass"] = *s.expected.audits_pass;
  if (!ex.empty()) doc["expected"] = ex;
  return doc;
}

json verification_to_json(const VerificationReport& r) {
  json per_eps = json::array();
  for (const auto& e : r.per_eps) per_eps.push_back({{"eps", e.eps}, {"min_margin", e.min_margin}});
  return {{"holds", r.holds},
          {"min_margin", r.min_margin},
          {"worst_witness",
           {{"eps", r.worst_witness.eps},
            {"x", point_to_json(r.worst_witness.x)},
            {"y", point_to_json(r.worst_witness.y)},
            {"margin", r.worst_witness.margin},
            {"pair_index", r.worst_witness.pair_index}}},
          {"per_eps", per_eps},
          {"samples_used",
           {{"eps_count", r.eps_count}, {"pair_count", r.pair_count}, {"seed", r.seed}}},
          {"grid_certified_only", r.grid_certified_only}};
}

json orbit_to_json(const Orbit& o, const MetricSpace& space) {
  const char* verdict = "budget_exhausted";
  switch (o.verdict) {
    case OrbitVerdict::Converged: verdict = "converged"; break;
    case OrbitVerdict::Cycle: verdict = "cycle"; break;
    case OrbitVerdict::Diverged: verdict = "diverged"; break;
    case OrbitVerdict::BudgetExhausted: break;
  }
  json j;
  j["verdict"] = verdict;
  j["start"] = point_to_json(o.start);
  j["steps"] = o.points.size() - 1;
  j["last_point"] = point_to_json(o.points.back());
  if (o.verdict == OrbitVerdict::Converged) {
    j["converged_at"] = o.converged_at;
    j["limit"] = point_to_json(o.limit);
    j["fixed_point_residual"] = o.fixed_point_residual;
  }
  if (o.verdict == OrbitVerdict::Cycle) {
    j["cycle_period"] = o.cycle_period;
    j["cycle_offset"] = o.cycle_offset;
  }
  // First gaps tell the decay story; cap the payload for long orbits.
  std::size_t keep = std::min<std::size_t>(o.step_gaps.size(), 64);
  j["step_gaps"] = std::vector<double>(o.step_gaps.begin(), o.step_gaps.begin() + keep);
  if (!o.step_gaps.empty()) j["last_gap"] = o.step_gaps.back();
  (void)space;
  return j;
}

json bound_audit_to_json(const BoundAudit& a) {
  json rows = json::array();
  for (const auto& r : a.rows)
    rows.push_back({{"n", r.n},
                    {"lhs", r.lhs},
                    {"omega", r.omega_n},
                    {"bound", r.bound},
                    {"ratio", r.ratio}});
  return {{"rows", rows},
          {"c_emp", a.c_emp},
          {"c_cap", a.c_cap},
          {"pass", a.pass},
          {"fixed_point_residual", a.fixed_point_residual}};
}

json almost_audit_to_json(const AlmostAudit& a) {
  // Row count grows quadratically in orbit length; report the verdict, the
  // extremal ratio, and the worst row.
  const AlmostAuditRow* worst = nullptr;
  double worst_ratio = -1.0;
  for (const auto& r : a.rows) {
    if (r.rhs > 0.0 && r.lhs / r.rhs > worst_ratio) {
      worst_ratio = r.lhs / r.rhs;
      worst = &r;
    }
  }
  json j = {{"pass", a.pass}, {"max_ratio", a.max_ratio}, {"row_count", a.rows.size()}};
  if (worst)
    j["worst_row"] = {{"n", worst->n}, {"i", worst->i}, {"lhs", worst->lhs}, {"rhs", worst->rhs}};
  return j;
}

json falsification_to_json(const FalsificationReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    json nums = json::object();
    for (const auto& [k, v] : s.numbers) nums[k] = v;
    steps.push_back(
        {{"claim", s.claim}, {"check", s.check}, {"passed", s.passed}, {"numbers", nums}});
  }
  return {{"case", r.title},
          {"steps", steps},
          {"conclusion", r.conclusion},
          {"as_expected", r.as_expected}};
}

json provenance_block(const SamplingConfig& sampling, const IterationConfig& iteration) {
  return {{"tool_version", kToolVersion},
          {"seed", sampling.seed},
          {"eps_grid", sampling.eps_grid},
          {"pairs", sampling.pairs},
          {"max_iter", iteration.max_iter},
          {"tol_conv", iteration.tol_conv},
          {"margin_tol", "1e-9 * (1 + |rhs| + d(x,y))"},
          {"triangle_tol", 1e-12}};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string bound_audit_csv(const BoundAudit& a) {
  std::string out = "n,lhs,omega,bound,ratio\n";
  for (const auto& r : a.rows) {
    out += std::to_string(r.n);
    out += ',';
    out += format_double(r.lhs);
    out += ',';
    out += format_double(r.omega_n);
    out += ',';
    out += format_double(r.bound);
    out += ',';
    out += format_double(r.ratio);
    out += '\n';
  }
  return out;
}

}  // namespace fpcheck
