#pragma once

#include <optional>
#include <string>

#include "apery/closed_forms.hpp"
#include "apery/formulas.hpp"
#include "apery/oracle.hpp"

namespace apery {

// Everything one evaluation produces. Numeric fields are kept both as
// numbers and as the trimmed strings that appear in the JSON form, so a
// parsed report re-serializes byte-identically.
struct EvalReport {
  std::string series;
  int weight = 0;
  std::string mixed_form;
  std::string expanded_form;
  std::string value, err;
  std::optional<std::string> closed_form;
  std::optional<std::string> closed_value;
  std::optional<std::string> oracle_value, oracle_err;
  std::optional<std::string> residual_closed;
  std::optional<std::string> residual_oracle;
  std::optional<std::string> latex;  // filled on request

  NumericValue numeric{};  // not serialized beyond the trimmed strings

  std::string to_json() const;
  std::string to_text() const;
  static std::optional<EvalReport> from_json(const std::string& s);
};

struct ReportOptions {
  bool verify_oracle = false;
  bool with_latex = false;
  EvalOptions eval{};
  OracleOptions oracle{};
  const ClosedFormTable* table = nullptr;  // default_table() when null
};

EvalReport evaluate_series(const SeriesId& id, const ReportOptions& opts = {});
EvalReport evaluate_formula(const Formula& f, const ReportOptions& opts = {});

// True when every residual present in the report meets its tolerance:
// 1e-8 against the closed-form table, oracle_default_tolerance for the
// direct summation.
bool report_verified(const EvalReport& r, const SeriesId& id);

std::string format_residual(real_t r);

}  // namespace apery
