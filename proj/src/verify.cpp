#include "modstruve/verify.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "modstruve/errors.hpp"

#ifdef MODSTRUVE_HAVE_OPENMP
#include <omp.h>
#endif

namespace modstruve {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

namespace {

bool name_matches(std::string_view name, std::string_view query) {
  if (name == query) return true;
  return name.size() > query.size() && name.substr(0, query.size()) == query && name[query.size()] == '_';
}

template <class T, class GetName>
std::vector<const T*> select(const std::vector<T>& all, const std::vector<std::string>& names, GetName get,
                             const char* kind) {
  std::vector<bool> keep(all.size(), false);
  for (const auto& raw : names) {
    std::string_view q = raw;
    bool any = false;
    for (int pass = 0; pass < 2 && !any; ++pass) {
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (name_matches(get(all[i]), q)) {
          keep[i] = true;
          any = true;
        }
      }
      if (q.substr(0, 5) == "case_") q.remove_prefix(5);
      else break;
    }
    if (!any) throw config_error(std::string("no ") + kind + " matches '" + raw + "'");
  }
  std::vector<const T*> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (keep[i]) out.push_back(&all[i]);
  return out;
}

double oriented(const InequalityRecord& r) {
  return r.expectation == Expectation::reversed ? -r.margin : r.margin;
}

CaseSummary summarize_case(const InequalityCase& c, bool inverted_sides, std::vector<InequalityRecord> records) {
  CaseSummary s;
  s.name = c.name;
  s.citation = c.citation;
  s.inverted = inverted_sides;
  s.points = static_cast<long>(records.size());
  for (const auto& r : records) {
    if (!r.error.empty()) {
      ++s.errors;
      continue;
    }
    if (r.expectation == Expectation::equality) {
      ++s.equality_points;
    } else {
      const double m = oriented(r);
      const double scale = std::max(std::fabs(r.lhs), std::fabs(r.rhs));
      s.min_margin = std::min(s.min_margin, m);
      if (scale > 0.0) s.min_rel_margin = std::min(s.min_rel_margin, m / scale);
    }
    if (!r.satisfied) s.violations.push_back(r);
  }
  s.records = std::move(records);
  return s;
}

json point_json(const CasePoint& p) {
  json j;
  j["nu"] = p.nu;
  if (p.mu) j["mu"] = *p.mu;
  j["x"] = p.x;
  if (p.y) j["y"] = *p.y;
  return j;
}

json record_json(const InequalityRecord& r) {
  json j = point_json(r.point);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["expected"] = std::string(to_string(r.expectation));
  return j;
}

json grid_json(const GridSpec& g) {
  return json{{"spec", g.to_string()},
              {"nu_min", g.nu_min},
              {"nu_max", g.nu_max},
              {"nu_steps", g.nu_steps},
              {"x_min", g.x_min},
              {"x_max", g.x_max},
              {"x_steps", g.x_steps},
              {"x_scale", g.x_scale == AxisScale::linear ? "linear" : "logarithmic"}};
}

// finite numbers as-is, infinities as strings so the field survives a JSON round trip
json number_or_text(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

}  // namespace

std::vector<const InequalityCase*> select_cases(const std::vector<std::string>& names) {
  return select(registry(), names, [](const InequalityCase& c) -> std::string_view { return c.name; }, "case");
}

std::vector<const PropertyCheck*> select_properties(const std::vector<std::string>& names) {
  return select(property_catalogue(), names, [](const PropertyCheck& c) -> std::string_view { return c.name; },
                "property");
}

int SweepReport::exit_code() const {
  if (evaluator_errors > 0) return 3;
  return pass ? 0 : 1;
}

SweepReport run_verification(const VerifyConfig& config) {
  config.grid.validate();
  const bool all = config.cases.empty() && config.properties.empty();

  // resolve every name before any work so config errors surface first
  std::vector<const InequalityCase*> cases;
  if (!config.cases.empty()) {
    cases = select_cases(config.cases);
  } else if (all) {
    for (const auto& c : registry()) cases.push_back(&c);
  }
  const auto flipped = select_cases(config.inverted);
  for (const auto* f : flipped)
    if (std::find(cases.begin(), cases.end(), f) == cases.end()) cases.push_back(f);
  std::sort(cases.begin(), cases.end());  // registry storage order is catalogue order

  std::vector<const PropertyCheck*> props;
  if (!config.properties.empty()) {
    props = select_properties(config.properties);
  } else if (all) {
    for (const auto& p : property_catalogue()) props.push_back(&p);
  }

#ifdef MODSTRUVE_HAVE_OPENMP
  const int saved_threads = omp_get_max_threads();
  if (config.threads > 0) omp_set_num_threads(config.threads);
#endif

  const auto t0 = std::chrono::steady_clock::now();
  SweepReport rep;
  rep.config = config;
  const SweepAxes axes = SweepAxes::from(config.grid);
  for (const auto* c : cases) {
    const bool flip = std::find(flipped.begin(), flipped.end(), c) != flipped.end();
    rep.case_names.push_back(c->name);
    auto records = flip ? sweep_case(inverted(*c), axes, config.mode) : sweep_case(*c, axes, config.mode);
    rep.cases.push_back(summarize_case(*c, flip, std::move(records)));
    const auto& s = rep.cases.back();
    rep.evaluator_errors += s.errors;
    if (!s.violations.empty()) rep.pass = false;
  }
  for (const auto* p : props) {
    rep.property_names.push_back(p->name);
    rep.properties.push_back(run_property(*p, config.grid, config.mode));
    const auto& r = rep.properties.back();
    if (!r.error.empty()) ++rep.evaluator_errors;
    if (!r.pass) rep.pass = false;
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

#ifdef MODSTRUVE_HAVE_OPENMP
  omp_set_num_threads(saved_threads);
#endif
  return rep;
}

std::string report_json(const SweepReport& r, bool with_wall_time) {
  json j;
  j["tool_version"] = std::string(kToolVersion);
  json inverted = json::array();
  for (const auto& c : r.cases)
    if (c.inverted) inverted.push_back(c.name);
  j["config"] = json{{"grid", grid_json(r.config.grid)},
                     {"cases", r.case_names},
                     {"properties", r.property_names},
                     {"inverted", inverted}};

  json cases = json::array();
  for (const auto& c : r.cases) {
    json v = json::array();
    for (const auto& rec : c.violations) v.push_back(record_json(rec));
    json errs = json::array();
    for (const auto& rec : c.records) {
      if (rec.error.empty()) continue;
      json e = point_json(rec.point);
      e["message"] = rec.error;
      errs.push_back(std::move(e));
    }
    json cj{{"name", c.name},
            {"citation", c.citation},
            {"inverted", c.inverted},
            {"points", c.points},
            {"equality_points", c.equality_points},
            {"min_margin", number_or_text(c.min_margin)},
            {"min_rel_margin", number_or_text(c.min_rel_margin)},
            {"violation_count", c.violations.size()},
            {"violations", std::move(v)}};
    if (!errs.empty()) cj["errors"] = std::move(errs);
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);

  json props = json::array();
  for (const auto& p : r.properties) {
    json worst = nullptr;
    if (!p.worst.coords.empty()) {
      worst = json::object();
      for (const auto& [k, v] : p.worst.coords) worst[k] = v;
      worst["slack"] = number_or_text(p.worst.slack);
    }
    json pj{{"name", p.name},
            {"direction", std::string(to_string(p.direction))},
            {"pass", p.pass},
            {"comparisons", p.comparisons},
            {"failures", p.failures},
            {"worst_point", std::move(worst)}};
    if (!p.error.empty()) pj["error"] = p.error;
    props.push_back(std::move(pj));
  }
  j["properties"] = std::move(props);
  j["pass"] = r.pass;
  j["exit_code"] = r.exit_code();
  if (with_wall_time) j["wall_time"] = r.wall_time;
  return j.dump(2) + "\n";
}

std::string report_csv(const SweepReport& r) {
  std::string out = "case,nu,mu,x,y,lhs,rhs,margin,satisfied\n";
  for (const auto& c : r.cases) {
    for (const auto& rec : c.records) {
      out += c.name;
      out += ',' + format_double(rec.point.nu);
      out += ',' + (rec.point.mu ? format_double(*rec.point.mu) : std::string());
      out += ',' + format_double(rec.point.x);
      out += ',' + (rec.point.y ? format_double(*rec.point.y) : std::string());
      out += ',' + format_double(rec.lhs);
      out += ',' + format_double(rec.rhs);
      out += ',' + format_double(rec.margin);
      out += rec.satisfied ? ",true\n" : ",false\n";
    }
  }
  return out;
}

std::string summarize_report(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw config_error(std::string("not a JSON report: ") + e.what());
  }
  if (!j.is_object() || !j.contains("cases") || !j.contains("properties") || !j.contains("pass"))
    throw config_error("not a verification report: missing cases, properties or pass");

  std::ostringstream os;
  os << "modstruve report (tool " << j.value("tool_version", "?") << ")\n";
  if (j.contains("config") && j["config"].contains("grid")) os << "grid " << j["config"]["grid"].value("spec", "?") << "\n";

  std::size_t total = 0;
  std::size_t bad_cases = 0;
  if (!j["cases"].empty()) os << "\ncases\n";
  for (const auto& c : j["cases"]) {
    const std::size_t nv = c.value("violation_count", c["violations"].size());
    const long pts = c.value("points", 0L);
    total += static_cast<std::size_t>(pts);
    if (nv > 0) ++bad_cases;
    std::string margin = c["min_rel_margin"].is_number() ? format_double(c["min_rel_margin"].get<double>())
                                                          : c["min_rel_margin"].dump();
    char line[256];
    std::snprintf(line, sizeof line, "  %-4s %-24s %8ld points  %6zu violations  min rel margin %s%s\n",
                  nv == 0 && !c.contains("errors") ? "ok" : "FAIL", c.value("name", "?").c_str(), pts, nv,
                  margin.c_str(), c.value("inverted", false) ? "  (inverted)" : "");
    os << line;
  }
  std::size_t bad_props = 0;
  if (!j["properties"].empty()) os << "\nproperties\n";
  for (const auto& p : j["properties"]) {
    const bool ok = p.value("pass", false);
    if (!ok) ++bad_props;
    os << "  " << (ok ? "ok  " : "FAIL") << " " << p.value("name", "?") << " (" << p.value("direction", "?") << ")";
    if (!ok && p["worst_point"].is_object()) os << " worst " << p["worst_point"].dump();
    if (p.contains("error")) os << " error: " << p["error"].get<std::string>();
    os << "\n";
  }
  os << "\n" << total << " points, " << bad_cases << " failing cases, " << bad_props << " failing properties\n";
  os << "overall " << (j["pass"].get<bool>() ? "PASS" : "FAIL");
  if (j.contains("wall_time")) os << " in " << format_double(j["wall_time"].get<double>()) << " s";
  os << "\n";
  return os.str();
}

std::string catalogue_json() {
  json cases = json::array();
  for (const auto& c : registry()) {
    const auto& a = c.applicability;
    json cj{{"name", c.name},
            {"citation", c.citation},
            {"relation", std::string(to_string(c.relation))},
            {"nu_range", json::array({number_or_text(a.nu_range.lo), number_or_text(a.nu_range.hi)})},
            {"needs_mu", a.needs_second_order},
            {"needs_y", a.needs_second_point}};
    if (a.reversal_nu_range)
      cj["reversal_nu_range"] =
          json::array({number_or_text(a.reversal_nu_range->lo), number_or_text(a.reversal_nu_range->hi)});
    cj["equality_points"] = a.equality_points;
    cases.push_back(std::move(cj));
  }
  json props = json::array();
  for (const auto& p : property_catalogue())
    props.push_back(json{{"name", p.name},
                         {"target", p.target},
                         {"citation", p.citation},
                         {"domain", p.domain},
                         {"direction", std::string(to_string(p.direction))}});
  return json{{"cases", std::move(cases)}, {"properties", std::move(props)}}.dump(2) + "\n";
}

std::vector<InequalityRecord> tabulate_bounds(const CasePoint& p) {
  std::vector<InequalityRecord> out;
  for (const auto& c : registry()) {
    const auto& a = c.applicability;
    if (a.needs_second_order && !p.mu) continue;
    if (a.needs_second_point && (!p.y || !(*p.y > p.x))) continue;
    CasePoint q = p;
    if (!a.needs_second_order) q.mu.reset();
    if (!a.needs_second_point) q.y.reset();
    if (expected_direction(c, q) == Expectation::outside) continue;
    try {
      out.push_back(evaluate_case(c, q));
    } catch (const std::exception& e) {
      InequalityRecord rec;
      rec.case_name = c.name;
      rec.point = q;
      rec.expectation = expected_direction(c, q);
      rec.lhs = rec.rhs = rec.margin = std::nan("");
      rec.error = e.what();
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace modstruve
