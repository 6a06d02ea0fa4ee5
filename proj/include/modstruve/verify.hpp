#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "modstruve/bounds.hpp"
#include "modstruve/grid.hpp"
#include "modstruve/properties.hpp"

namespace modstruve {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// What a verification run covers. When only cases are named the property suite is skipped,
/// and the other way round; naming neither runs everything.
struct VerifyConfig {
  GridSpec grid;
  std::vector<std::string> cases;
  std::vector<std::string> properties;
  /// Cases to run with their sides exchanged (negative controls). They are added to the run
  /// if not otherwise selected.
  std::vector<std::string> inverted;
  ExecutionMode mode = ExecutionMode::parallel;
  int threads = 0;  ///< 0 keeps the OpenMP default
};

/// Registry cases matching the names, in registry order. A name matches a case exactly, after
/// dropping a "case_" prefix, or as a family prefix ("turan" selects turan_left, turan_right
/// and turan_sharpened_lower). Throws config_error when a name matches nothing.
std::vector<const InequalityCase*> select_cases(const std::vector<std::string>& names);

/// Same matching rules over the property catalogue.
std::vector<const PropertyCheck*> select_properties(const std::vector<std::string>& names);

struct CaseSummary {
  std::string name;
  std::string citation;
  bool inverted = false;
  long points = 0;
  long equality_points = 0;
  /// Smallest margin oriented toward the expected direction (negated in reversal ranges),
  /// over non-equality records; +inf when there are none.
  double min_margin = kInf;
  double min_rel_margin = kInf;
  long errors = 0;
  std::vector<InequalityRecord> violations;
  std::vector<InequalityRecord> records;
};

struct SweepReport {
  VerifyConfig config;
  std::vector<std::string> case_names;
  std::vector<std::string> property_names;
  std::vector<CaseSummary> cases;
  std::vector<PropertyResult> properties;
  bool pass = true;
  long evaluator_errors = 0;
  double wall_time = 0.0;

  /// 0 pass, 1 violations, 3 evaluator failure (takes precedence over 1). Config errors never
  /// produce a report; the CLI maps them to 2.
  int exit_code() const;
};

/// Throws config_error for a bad grid or unknown names.
SweepReport run_verification(const VerifyConfig& config);

/// Stable-field JSON. Execution settings (mode, threads) are left out so serial and parallel
/// runs of one configuration give identical text; wall_time is the only varying field.
std::string report_json(const SweepReport& r, bool with_wall_time = true);

/// Header case,nu,mu,x,y,lhs,rhs,margin,satisfied; one row per record, shortest round-trip
/// number formatting, empty cells for absent mu and y.
std::string report_csv(const SweepReport& r);

/// Human-readable digest of a JSON report. Throws config_error when the text is not a report.
std::string summarize_report(std::string_view json_text);

/// Cases and properties with their stated domains, as JSON.
std::string catalogue_json();

/// Every registry case applicable at p. Cases reading mu or y are included only when p has
/// them. Evaluator failures are kept in the record's error field.
std::vector<InequalityRecord> tabulate_bounds(const CasePoint& p);

/// Shortest decimal that reads back to v.
std::string format_double(double v);

}  // namespace modstruve
