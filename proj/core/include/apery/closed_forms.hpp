#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apery/expr.hpp"
#include "apery/series_id.hpp"

namespace apery {

// One known evaluation over the basis {ln2, zeta(2..5), Li4(1/2), Li5(1/2)}
// and products thereof, with a short attribution string.
struct ClosedFormEntry {
  SeriesId id;
  Expr expr;
  std::string source;
};

// Table of known closed forms. The default ships embedded; a JSON file in
// the same format can be loaded instead (CLI --table or APERY_TABLE).
class ClosedFormTable {
 public:
  static const ClosedFormTable& embedded();
  static ClosedFormTable load_file(const std::string& path);
  static ClosedFormTable parse(const std::string& json_text);

  std::optional<Expr> find(const SeriesId& id) const;
  const std::vector<ClosedFormEntry>& entries() const { return entries_; }
  std::string to_json() const;

 private:
  std::vector<ClosedFormEntry> entries_;
};

// Lookup in the embedded table (or the APERY_TABLE override when set).
std::optional<Expr> known_closed_form(const SeriesId& id);

// The table used by known_closed_form: APERY_TABLE override or embedded.
const ClosedFormTable& default_table();

}  // namespace apery
