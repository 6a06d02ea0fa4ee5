// modstruve: evaluate modified Struve functions and sweep the inequality registry.
// Exit codes: 0 pass, 1 violations, 2 bad arguments or config, 3 evaluator failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modstruve/errors.hpp"
#include "modstruve/relations.hpp"
#include "modstruve/struve.hpp"
#include "modstruve/verify.hpp"

using namespace modstruve;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitEvaluator = 3;

int run_eval(const std::string& fn, double nu, double x, const std::string& method) {
  Evaluation e;
  if (fn == "L") {
    if (method == "series") e = struve_l(nu, x);
    else if (method == "quad") e = struve_l_quad(nu, x);
    else e = struve_closed_form(nu, x);
  } else {
    if (method != "series" && !(fn == "next_shifted" && method == "quad"))
      throw config_error("--method " + method + " is only available for L");
    if (fn == "L_prime") e = struve_l_prime(nu, x);
    else if (fn == "norm") e = struve_norm(nu, x);
    else if (fn == "I") e = bessel_i(nu, x);
    else if (fn == "next_shifted") e = struve_next_shifted(nu, x);
    else {  // delta
      e.value = turan_delta(nu, x);
    }
  }
  std::cout << "function=" << fn << " nu=" << format_double(nu) << " x=" << format_double(x)
            << " method=" << to_string(e.method) << " value=" << format_double(e.value)
            << " abs_error_est=" << format_double(e.abs_error_est) << " terms=" << e.terms_used;
  if (e.accuracy_warning) std::cout << " warning=tolerance_not_met";
  std::cout << "\n";
  return 0;
}

int run_bounds(double nu, double x, const std::vector<double>& mu, const std::vector<double>& y) {
  CasePoint p{nu, std::nullopt, x, std::nullopt};
  if (!mu.empty()) p.mu = mu.front();
  if (!y.empty()) p.y = y.front();
  const auto recs = tabulate_bounds(p);
  std::printf("%-24s %-9s %-23s %-23s %-23s %s\n", "case", "expected", "lhs", "rhs", "margin", "ok");
  int code = 0;
  for (const auto& r : recs) {
    if (!r.error.empty()) {
      std::printf("%-24s %-9s error: %s\n", r.case_name.c_str(), std::string(to_string(r.expectation)).c_str(),
                  r.error.c_str());
      code = kExitEvaluator;
      continue;
    }
    std::printf("%-24s %-9s %-23s %-23s %-23s %s\n", r.case_name.c_str(),
                std::string(to_string(r.expectation)).c_str(), format_double(r.lhs).c_str(),
                format_double(r.rhs).c_str(), format_double(r.margin).c_str(), r.satisfied ? "yes" : "NO");
    if (!r.satisfied && code == 0) code = 1;
  }
  if (recs.empty()) std::printf("(no case applies at this point)\n");
  return code;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw config_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw config_error("write to '" + path + "' failed");
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw config_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modified Struve function evaluator and inequality verifier"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "evaluate one function at (nu, x)");
  std::string fn;
  double e_nu = 0.0, e_x = 1.0;
  std::string method = "series";
  eval->add_option("function", fn, "L, L_prime, norm, I, delta or next_shifted")
      ->required()
      ->check(CLI::IsMember({"L", "L_prime", "norm", "I", "delta", "next_shifted"}));
  eval->add_option("--nu", e_nu)->required();
  eval->add_option("--x", e_x)->required();
  eval->add_option("--method", method)->check(CLI::IsMember({"series", "quad", "closed"}));

  auto* bounds = app.add_subcommand("bounds", "tabulate every case applicable at a point");
  double b_nu = 0.0, b_x = 1.0;
  std::vector<double> b_mu, b_y;
  bounds->add_option("--nu", b_nu)->required();
  bounds->add_option("--x", b_x)->required();
  bounds->add_option("--mu", b_mu, "second order, for cases that compare two orders")->expected(1);
  bounds->add_option("--y", b_y, "second point y > x, for two-point cases")->expected(1);

  auto* verify = app.add_subcommand("verify", "sweep cases and property checks over a grid");
  VerifyConfig cfg;
  std::string grid_text, out_path, format = "json";
  bool serial = false, no_wall_time = false;
  verify->add_option("--case", cfg.cases, "case name, case_ prefixed name or family prefix; repeatable");
  verify->add_option("--property", cfg.properties, "property name or prefix; repeatable");
  verify->add_option("--invert", cfg.inverted, "run this case with its sides exchanged; repeatable");
  verify->add_option("--grid", grid_text, "nu=a:b:n,x=a:b:n[:lin|log]");
  verify->add_option("--out", out_path, "report path; stdout when omitted");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--serial", serial, "use the serial kernels");
  verify->add_option("--threads", cfg.threads, "OpenMP thread count")->check(CLI::NonNegativeNumber);
  verify->add_flag("--no-wall-time", no_wall_time, "omit wall_time so reports compare byte for byte");

  auto* report = app.add_subcommand("report", "summarize a JSON report");
  std::string in_path;
  report->add_option("--in", in_path)->required();

  auto* cases = app.add_subcommand("cases", "list registry cases and property checks");
  bool cases_json = false;
  cases->add_flag("--json", cases_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*eval) return run_eval(fn, e_nu, e_x, method);
    if (*bounds) return run_bounds(b_nu, b_x, b_mu, b_y);
    if (*verify) {
      if (!grid_text.empty()) cfg.grid = GridSpec::parse(grid_text);
      cfg.mode = serial ? ExecutionMode::serial : ExecutionMode::parallel;
      const SweepReport rep = run_verification(cfg);
      write_text(out_path, format == "json" ? report_json(rep, !no_wall_time) : report_csv(rep));
      if (!out_path.empty() && out_path != "-") {
        std::cerr << summarize_report(report_json(rep));
      }
      return rep.exit_code();
    }
    if (*report) {
      std::cout << summarize_report(read_text(in_path));
      return 0;
    }
    if (*cases) {
      if (cases_json) {
        std::cout << catalogue_json();
      } else {
        std::cout << "cases\n";
        for (const auto& c : registry()) std::cout << "  " << c.name << "  " << c.citation << "\n";
        std::cout << "properties\n";
        for (const auto& p : property_catalogue()) std::cout << "  " << p.name << "  " << p.citation << "\n";
      }
      return 0;
    }
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const modstruve::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const modstruve::range_error& e) {
    std::cerr << "range error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "evaluator failure: " << e.what() << "\n";
    return kExitEvaluator;
  }
  return kExitConfig;
}
