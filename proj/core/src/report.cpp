#include "apery/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace apery {

std::string format_residual(real_t r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3Le", r);
  return buf;
}

EvalReport evaluate_series(const SeriesId& id, const ReportOptions& opts) {
  return evaluate_formula(formula_for(id), opts);
}

EvalReport evaluate_formula(const Formula& f, const ReportOptions& opts) {
  const SeriesId& id = f.id;
  EvalReport rep;
  rep.series = id.str();
  rep.weight = id.weight();
  rep.mixed_form = f.mixed.str();
  rep.expanded_form = f.expanded.str();
  rep.numeric = eval_expr(f.expanded, opts.eval);
  rep.value = rep.numeric.str();
  rep.err = format_residual(rep.numeric.err);
  if (opts.with_latex) rep.latex = f.mixed.latex();

  const ClosedFormTable& table = opts.table ? *opts.table : default_table();
  if (auto cf = table.find(id)) {
    NumericValue cv = eval_expr(*cf, opts.eval);
    rep.closed_form = cf->str();
    rep.closed_value = cv.str();
    rep.residual_closed = format_residual(fabsl(cv.value - rep.numeric.value));
  }
  if (opts.verify_oracle) {
    OracleResult ov = sum_series(id, opts.oracle);
    rep.oracle_value = ov.value.str();
    rep.oracle_err = format_residual(ov.value.err);
    rep.residual_oracle = format_residual(fabsl(ov.value.value - rep.numeric.value));
  }
  return rep;
}

bool report_verified(const EvalReport& r, const SeriesId& id) {
  if (r.residual_closed && strtold(r.residual_closed->c_str(), nullptr) > 1e-8L) return false;
  if (r.residual_oracle) {
    real_t res = strtold(r.residual_oracle->c_str(), nullptr);
    real_t oerr = strtold(r.oracle_err->c_str(), nullptr);
    if (res > std::max(oracle_default_tolerance(id), 3 * oerr)) return false;
  }
  return true;
}

std::string EvalReport::to_json() const {
  nlohmann::ordered_json j;
  j["series"] = series;
  j["weight"] = weight;
  j["mixed_form"] = mixed_form;
  j["expanded_form"] = expanded_form;
  j["value"] = value;
  j["err"] = err;
  if (closed_form) {
    j["closed_form"] = *closed_form;
    j["closed_value"] = *closed_value;
    j["residual_closed"] = *residual_closed;
  }
  if (oracle_value) {
    j["oracle_value"] = *oracle_value;
    j["oracle_err"] = *oracle_err;
    j["residual_oracle"] = *residual_oracle;
  }
  if (latex) j["latex"] = *latex;
  return j.dump();
}

std::optional<EvalReport> EvalReport::from_json(const std::string& s) {
  nlohmann::json j = nlohmann::json::parse(s, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  EvalReport r;
  try {
    r.series = j.at("series").get<std::string>();
    r.weight = j.at("weight").get<int>();
    r.mixed_form = j.at("mixed_form").get<std::string>();
    r.expanded_form = j.at("expanded_form").get<std::string>();
    r.value = j.at("value").get<std::string>();
    r.err = j.at("err").get<std::string>();
    if (j.contains("closed_form")) {
      r.closed_form = j.at("closed_form").get<std::string>();
      r.closed_value = j.at("closed_value").get<std::string>();
      r.residual_closed = j.at("residual_closed").get<std::string>();
    }
    if (j.contains("oracle_value")) {
      r.oracle_value = j.at("oracle_value").get<std::string>();
      r.oracle_err = j.at("oracle_err").get<std::string>();
      r.residual_oracle = j.at("residual_oracle").get<std::string>();
    }
    if (j.contains("latex")) r.latex = j.at("latex").get<std::string>();
    r.numeric.value = strtold(r.value.c_str(), nullptr);
    r.numeric.err = strtold(r.err.c_str(), nullptr);
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  return r;
}

std::string EvalReport::to_text() const {
  std::ostringstream os;
  os << series << "  (weight " << weight << ")\n";
  os << "  statement: " << mixed_form << "\n";
  os << "  expansion: " << expanded_form << "\n";
  os << "  value:     " << value << "  (err " << err << ")\n";
  if (closed_form) {
    os << "  closed:    " << *closed_form << " = " << *closed_value
       << "  |residual " << *residual_closed << "|\n";
  }
  if (oracle_value) {
    os << "  oracle:    " << *oracle_value << "  (err " << *oracle_err << ", residual "
       << *residual_oracle << ")\n";
  }
  if (latex) os << "  latex:     " << *latex << "\n";
  return os.str();
}

}  // namespace apery
