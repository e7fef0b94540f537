// Command-line surface: evaluate one Euler-Apery-type series, tabulate all
// supported ones up to a weight bound, or run the invariant selftest.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "apery/closed_forms.hpp"
#include "apery/report.hpp"
#include "apery/selftest.hpp"
#include "apery/series_id.hpp"

namespace {

using namespace apery;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct CommonArgs {
  std::string format = "text";
  double precision = 1e-10;
  long nmax = 100000;
  std::string table_path;
};

[[noreturn]] void usage_error(const std::string& msg, bool json_mode) {
  if (json_mode) {
    nlohmann::ordered_json j;
    j["error"] = msg;
    std::cout << j.dump() << "\n";
  } else {
    std::cerr << "error: " << msg << "\n";
  }
  std::exit(kExitUsage);
}

SeriesId series_from_flags(const std::string& family, const std::string& orders_csv, int m, int p,
                           bool json_mode) {
  SeriesId id;
  std::vector<int> orders;
  if (!orders_csv.empty()) {
    std::stringstream ss(orders_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        orders.push_back(std::stoi(tok));
      } catch (...) {
        usage_error("bad --orders value '" + tok + "'", json_mode);
      }
    }
    std::sort(orders.begin(), orders.end());
  }

  if (family == "s") {
    id.family = Family::S;
    id.orders = orders;
  } else if (family == "squad") {
    id.family = Family::S;
    id.orders = {1, m > 0 ? m : 1};
    std::sort(id.orders.begin(), id.orders.end());
  } else if (family == "scubic") {
    id.family = Family::S;
    id.orders = {1, 1, 1};
  } else if (family == "sstar") {
    id.family = orders == std::vector<int>{1} ? Family::SStar1 : Family::SStar;
    if (!orders.empty() && orders != std::vector<int>{1})
      usage_error("sstar accepts only --orders 1 (the H_n-weighted star family)", json_mode);
    id.m = m;
  } else if (family == "t1") {
    id.family = Family::T1;
  } else if (family == "u1") {
    id.family = Family::U1;
  } else if (family == "ts") {
    id.family = Family::tS;
  } else if (family == "ts1") {
    id.family = Family::tS1;
  } else if (family == "tt1") {
    id.family = Family::tT1;
  } else if (family == "tu1") {
    id.family = Family::tU1;
  } else {
    usage_error("unknown family '" + family + "'", json_mode);
  }
  id.p = p;
  return id;
}

ReportOptions make_report_options(const CommonArgs& c, bool verify, bool latex,
                                  const ClosedFormTable*& owned) {
  ReportOptions r;
  r.verify_oracle = verify;
  r.with_latex = latex;
  r.eval.target = static_cast<real_t>(c.precision);
  r.oracle.n_max = c.nmax;
  if (!c.table_path.empty()) {
    static ClosedFormTable loaded;
    loaded = ClosedFormTable::load_file(c.table_path);
    owned = &loaded;
    r.table = owned;
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit evaluation of Euler-Apery-type central-binomial series"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  CommonArgs common;
  app.add_option("--format", common.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--precision", common.precision, "Absolute numeric target (default 1e-10)");
  app.add_option("--nmax", common.nmax, "Oracle summation length (default 100000)");
  app.add_option("--table", common.table_path, "Closed-form table file (JSON)");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one series");
  std::string family, orders_csv, variant;
  int m = 0, p = -1, q = -1;
  bool verify = false, latex = false;
  eval_cmd->add_option("--family", family,
                       "Series family: s, sstar, squad, scubic, t1, u1, ts, ts1, tt1, tu1")
      ->required();
  eval_cmd->add_option("--orders", orders_csv, "Comma list of harmonic orders (family s)");
  eval_cmd->add_option("--m", m, "Star length (sstar) or second order (squad)");
  eval_cmd->add_option("--p", p, "Denominator exponent");
  eval_cmd->add_option("--q", q, "Alias of --p");
  eval_cmd->add_option("--variant", variant,
                       "Where dual derivations exist: mixed|s1p, two1|six32, contour|chen");
  eval_cmd->add_flag("--verify", verify, "Cross-check against the direct-summation oracle");
  eval_cmd->add_flag("--latex", latex, "Include a LaTeX rendering");

  // table
  auto* table_cmd = app.add_subcommand("table", "Evaluate every supported series up to a weight");
  int max_weight = 6;
  bool table_verify = false, table_latex = false;
  table_cmd->add_option("--max-weight", max_weight, "Weight bound (default 6)");
  table_cmd->add_flag("--verify", table_verify, "Cross-check each entry against the oracle");
  table_cmd->add_flag("--latex", table_latex, "Include LaTeX renderings");

  // selftest
  auto* self_cmd = app.add_subcommand("selftest", "Run the module invariant suites");
  std::string only;
  double self_precision = 1e-8;
  self_cmd->add_option("--only", only, "Run only checks with this prefix (e.g. exact)");
  self_cmd->add_option("--precision", self_precision, "Numeric gate (default 1e-8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  const bool json_mode = common.format == "json";

  try {
    if (eval_cmd->parsed()) {
      int expo = p >= 0 ? p : q;
      if (expo < 0) usage_error("missing --p/--q", json_mode);
      SeriesId id = series_from_flags(family, orders_csv, m, expo, json_mode);
      if (!id.supported())
        usage_error("unsupported or divergent series " + id.str() +
                        (id.convergent() ? "" : " (exponent below convergence range)"),
                    json_mode);

      const ClosedFormTable* owned = nullptr;
      ReportOptions ropts = make_report_options(common, verify, latex, owned);
      EvalReport rep;
      if (!variant.empty()) {
        // variant-pinned evaluation
        Formula f;
        if (variant == "mixed")
          f = formula_S_1(expo - 1, S1Variant::coro_mixed);
        else if (variant == "s1p")
          f = formula_S_1(expo - 1, S1Variant::coro_s1p);
        else if (variant == "two1")
          f = formula_S_cubic(expo, CubicVariant::two_one);
        else if (variant == "six32")
          f = formula_S_cubic(expo, CubicVariant::six_three_two);
        else if (variant == "contour")
          f = formula_tS(expo, TsVariant::contour);
        else if (variant == "chen")
          f = formula_tS(expo, TsVariant::chen);
        else
          usage_error("unknown variant '" + variant + "'", json_mode);
        if (f.id != id)
          usage_error("variant '" + variant + "' does not apply to " + id.str(), json_mode);
        rep = evaluate_formula(f, ropts);
      } else {
        rep = evaluate_series(id, ropts);
      }
      std::cout << (json_mode ? rep.to_json() + "\n" : rep.to_text());
      if (!report_verified(rep, id)) return kExitVerifyFail;
      return kExitOk;
    }

    if (table_cmd->parsed()) {
      if (max_weight < 1 || max_weight > 8)
        usage_error("--max-weight must be between 1 and 8", json_mode);
      const ClosedFormTable* owned = nullptr;
      ReportOptions ropts = make_report_options(common, table_verify, table_latex, owned);
      bool all_ok = true;
      std::vector<EvalReport> reports;
      for (const auto& id : enumerate_series(max_weight)) {
        EvalReport rep = evaluate_series(id, ropts);
        all_ok = report_verified(rep, id) && all_ok;
        reports.push_back(std::move(rep));
      }
      if (json_mode) {
        std::string out = "[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
          if (i) out += ",";
          out += reports[i].to_json();
        }
        std::cout << out << "]\n";
      } else {
        for (const auto& r : reports) std::cout << r.to_text() << "\n";
        std::cout << reports.size() << " series, "
                  << (all_ok ? "all residuals within tolerance" : "VERIFICATION FAILURES") << "\n";
      }
      return all_ok ? kExitOk : kExitVerifyFail;
    }

    if (self_cmd->parsed()) {
      auto results = selftest(only, static_cast<real_t>(self_precision));
      bool all_ok = true;
      for (const auto& r : results) {
        all_ok = r.pass && all_ok;
        if (json_mode) {
          nlohmann::ordered_json j;
          j["check"] = r.name;
          j["pass"] = r.pass;
          if (!r.detail.empty()) j["detail"] = r.detail;
          std::cout << j.dump() << "\n";
        } else {
          std::printf("%-42s %s\n", r.name.c_str(), r.pass ? "pass" : "FAIL");
          if (!r.pass) std::printf("    %s\n", r.detail.c_str());
        }
      }
      return all_ok ? kExitOk : kExitVerifyFail;
    }
  } catch (const UnsupportedSeries& e) {
    usage_error(e.what(), json_mode);
  } catch (const DivergentWord& e) {
    usage_error(e.what(), json_mode);
  } catch (const std::exception& e) {
    if (json_mode) {
      nlohmann::ordered_json j;
      j["error"] = e.what();
      std::cout << j.dump() << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return kExitVerifyFail;
  }
  return kExitUsage;
}
