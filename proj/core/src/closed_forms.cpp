#include "apery/closed_forms.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

namespace apery {

namespace {

// Known evaluations of weight <= 5. Coefficients are exact rational strings;
// monomials use the atom syntax, repetition marks powers.
const char* kEmbeddedTable = R"json({
  "format": "apery-closed-forms/1",
  "entries": [
    {"id": "S:1", "source": "central binomial generating function at 1",
     "terms": [{"coeff": "2", "monomial": ["L2"]}]},
    {"id": "S:2", "source": "Boyadzhiev 2012; Sun 2015",
     "terms": [{"coeff": "1", "monomial": ["z(2)"]}, {"coeff": "-2", "monomial": ["L2", "L2"]}]},
    {"id": "S:3", "source": "single sums, weight 3",
     "terms": [{"coeff": "2", "monomial": ["z(3)"]}, {"coeff": "-2", "monomial": ["z(2)", "L2"]},
               {"coeff": "4/3", "monomial": ["L2", "L2", "L2"]}]},
    {"id": "S:4", "source": "single sums, weight 4",
     "terms": [{"coeff": "9/4", "monomial": ["z(4)"]}, {"coeff": "-4", "monomial": ["z(3)", "L2"]},
               {"coeff": "2", "monomial": ["z(2)", "L2", "L2"]},
               {"coeff": "-2/3", "monomial": ["L2", "L2", "L2", "L2"]}]},
    {"id": "S:2,1", "source": "Sun 2015",
     "terms": [{"coeff": "3/2", "monomial": ["z(3)"]}]},
    {"id": "S:2,2", "source": "linear sums, weight 4",
     "terms": [{"coeff": "3", "monomial": ["z(4)"]}, {"coeff": "-3", "monomial": ["z(3)", "L2"]}]},
    {"id": "S:1,1", "source": "Alzer-Karayannakis-Srivastava 2006; Boyadzhiev 2012",
     "terms": [{"coeff": "2", "monomial": ["z(2)"]}]},
    {"id": "S:1,2", "source": "linear sums, weight 3",
     "terms": [{"coeff": "9/2", "monomial": ["z(3)"]}, {"coeff": "-4", "monomial": ["z(2)", "L2"]}]},
    {"id": "S:1,3", "source": "linear sums, weight 4",
     "terms": [{"coeff": "8", "monomial": ["Li4h"]}, {"coeff": "-13/4", "monomial": ["z(4)"]},
               {"coeff": "-2", "monomial": ["z(3)", "L2"]},
               {"coeff": "2", "monomial": ["z(2)", "L2", "L2"]},
               {"coeff": "1/3", "monomial": ["L2", "L2", "L2", "L2"]}]},
    {"id": "S:1,4", "source": "linear sums, weight 5",
     "terms": [{"coeff": "16", "monomial": ["Li5h"]}, {"coeff": "-23/8", "monomial": ["z(5)"]},
               {"coeff": "13/2", "monomial": ["z(4)", "L2"]},
               {"coeff": "-5", "monomial": ["z(3)", "z(2)"]},
               {"coeff": "2", "monomial": ["z(3)", "L2", "L2"]},
               {"coeff": "-4/3", "monomial": ["z(2)", "L2", "L2", "L2"]},
               {"coeff": "-2/15", "monomial": ["L2", "L2", "L2", "L2", "L2"]}]},
    {"id": "S:1^2,1", "source": "quadratic sums, weight 3",
     "terms": [{"coeff": "21/2", "monomial": ["z(3)"]}]},
    {"id": "S:1^2,2", "source": "quadratic sums, weight 4",
     "terms": [{"coeff": "32", "monomial": ["Li4h"]}, {"coeff": "-14", "monomial": ["z(4)"]},
               {"coeff": "7", "monomial": ["z(3)", "L2"]},
               {"coeff": "-8", "monomial": ["z(2)", "L2", "L2"]},
               {"coeff": "4/3", "monomial": ["L2", "L2", "L2", "L2"]}]},
    {"id": "S:1,2,1", "source": "quadratic sums, weight 4",
     "terms": [{"coeff": "-8", "monomial": ["Li4h"]}, {"coeff": "49/4", "monomial": ["z(4)"]},
               {"coeff": "-7", "monomial": ["z(3)", "L2"]},
               {"coeff": "2", "monomial": ["z(2)", "L2", "L2"]},
               {"coeff": "-1/3", "monomial": ["L2", "L2", "L2", "L2"]}]},
    {"id": "S:1^3,1", "source": "cubic sums, weight 4",
     "terms": [{"coeff": "40", "monomial": ["Li4h"]}, {"coeff": "115/4", "monomial": ["z(4)"]},
               {"coeff": "35", "monomial": ["z(3)", "L2"]},
               {"coeff": "-10", "monomial": ["z(2)", "L2", "L2"]},
               {"coeff": "5/3", "monomial": ["L2", "L2", "L2", "L2"]}]},
    {"id": "S*:2,1", "source": "star sums, single closed form",
     "terms": [{"coeff": "6", "monomial": ["z(3)"]}]},
    {"id": "S*:3,1", "source": "star sums, single closed form",
     "terms": [{"coeff": "14", "monomial": ["z(4)"]}]},
    {"id": "S1*:1,1", "source": "equals the quadratic sum of weight 3",
     "terms": [{"coeff": "21/2", "monomial": ["z(3)"]}]},
    {"id": "tS:2", "source": "Sprugnoli 2006",
     "terms": [{"coeff": "3", "monomial": ["z(2)"]}]},
    {"id": "tS:3", "source": "Zucker 1985; Coppo-Candelpergher 2015",
     "terms": [{"coeff": "-7/2", "monomial": ["z(3)"]}, {"coeff": "6", "monomial": ["z(2)", "L2"]}]},
    {"id": "tS:4", "source": "reciprocal single sums, weight 4",
     "terms": [{"coeff": "8", "monomial": ["Li4h"]}, {"coeff": "-19/4", "monomial": ["z(4)"]},
               {"coeff": "4", "monomial": ["z(2)", "L2", "L2"]},
               {"coeff": "1/3", "monomial": ["L2", "L2", "L2", "L2"]}]},
    {"id": "tS1:2", "source": "reciprocal linear sums, weight 3",
     "terms": [{"coeff": "7/2", "monomial": ["z(3)"]}, {"coeff": "6", "monomial": ["z(2)", "L2"]}]},
    {"id": "tS1:3", "source": "reciprocal linear sums, weight 4",
     "terms": [{"coeff": "-8", "monomial": ["Li4h"]}, {"coeff": "1", "monomial": ["z(4)"]},
               {"coeff": "8", "monomial": ["z(2)", "L2", "L2"]},
               {"coeff": "-1/3", "monomial": ["L2", "L2", "L2", "L2"]}]},
    {"id": "tS1:4", "source": "reciprocal linear sums, weight 5",
     "terms": [{"coeff": "16", "monomial": ["Li5h"]}, {"coeff": "-31/2", "monomial": ["z(5)"]},
               {"coeff": "2", "monomial": ["z(4)", "L2"]},
               {"coeff": "3", "monomial": ["z(3)", "z(2)"]},
               {"coeff": "16/3", "monomial": ["z(2)", "L2", "L2", "L2"]},
               {"coeff": "-2/15", "monomial": ["L2", "L2", "L2", "L2", "L2"]}]},
    {"id": "tT1:2", "source": "Sun 2015",
     "terms": [{"coeff": "35/4", "monomial": ["z(3)"]}, {"coeff": "3", "monomial": ["z(2)", "L2"]}]},
    {"id": "tT1:3", "source": "reciprocal linear sums, weight 4",
     "terms": [{"coeff": "-20", "monomial": ["Li4h"]}, {"coeff": "65/8", "monomial": ["z(4)"]},
               {"coeff": "8", "monomial": ["z(2)", "L2", "L2"]},
               {"coeff": "-5/6", "monomial": ["L2", "L2", "L2", "L2"]}]},
    {"id": "tT1:4", "source": "reciprocal linear sums, weight 5",
     "terms": [{"coeff": "40", "monomial": ["Li5h"]}, {"coeff": "-217/16", "monomial": ["z(5)"]},
               {"coeff": "-9", "monomial": ["z(3)", "z(2)"]},
               {"coeff": "65/4", "monomial": ["z(4)", "L2"]},
               {"coeff": "16/3", "monomial": ["z(2)", "L2", "L2", "L2"]},
               {"coeff": "-1/3", "monomial": ["L2", "L2", "L2", "L2", "L2"]}]},
    {"id": "T1:1", "source": "even-index harmonic sums, weight 2",
     "terms": [{"coeff": "5/2", "monomial": ["z(2)"]}]},
    {"id": "T1:2", "source": "even-index harmonic sums, weight 3",
     "terms": [{"coeff": "23/4", "monomial": ["z(3)"]}, {"coeff": "-5", "monomial": ["z(2)", "L2"]}]},
    {"id": "T1:3", "source": "even-index harmonic sums, weight 4",
     "terms": [{"coeff": "4", "monomial": ["Li4h"]}, {"coeff": "17/8", "monomial": ["z(4)"]},
               {"coeff": "-8", "monomial": ["z(3)", "L2"]},
               {"coeff": "4", "monomial": ["z(2)", "L2", "L2"]},
               {"coeff": "1/6", "monomial": ["L2", "L2", "L2", "L2"]}]},
    {"id": "T1:4", "source": "even-index harmonic sums, weight 5",
     "terms": [{"coeff": "8", "monomial": ["Li5h"]}, {"coeff": "225/16", "monomial": ["z(5)"]},
               {"coeff": "-17/4", "monomial": ["z(4)", "L2"]},
               {"coeff": "8", "monomial": ["z(3)", "L2", "L2"]},
               {"coeff": "-8/3", "monomial": ["z(2)", "L2", "L2", "L2"]},
               {"coeff": "-9", "monomial": ["z(3)", "z(2)"]},
               {"coeff": "-1/15", "monomial": ["L2", "L2", "L2", "L2", "L2"]}]},
    {"id": "U1:1", "source": "Alzer-Karayannakis-Srivastava 2006",
     "terms": [{"coeff": "3/2", "monomial": ["z(2)"]}]},
    {"id": "U1:2", "source": "odd harmonic sums, weight 3",
     "terms": [{"coeff": "7/2", "monomial": ["z(3)"]}, {"coeff": "-3", "monomial": ["z(2)", "L2"]}]},
    {"id": "U1:3", "source": "odd harmonic sums, weight 4",
     "terms": [{"coeff": "15/4", "monomial": ["z(4)"]}, {"coeff": "-7", "monomial": ["z(3)", "L2"]},
               {"coeff": "3", "monomial": ["z(2)", "L2", "L2"]}]},
    {"id": "U1:4", "source": "odd harmonic sums, weight 5",
     "terms": [{"coeff": "31/2", "monomial": ["z(5)"]},
               {"coeff": "-15/2", "monomial": ["z(4)", "L2"]},
               {"coeff": "-13/2", "monomial": ["z(3)", "z(2)"]},
               {"coeff": "7", "monomial": ["z(3)", "L2", "L2"]},
               {"coeff": "-2", "monomial": ["z(2)", "L2", "L2", "L2"]}]},
    {"id": "tU1:2", "source": "Chen 2019; Coppo-Candelpergher 2015",
     "terms": [{"coeff": "7", "monomial": ["z(3)"]}]},
    {"id": "tU1:3", "source": "reciprocal odd harmonic sums, weight 4",
     "terms": [{"coeff": "-16", "monomial": ["Li4h"]}, {"coeff": "61/8", "monomial": ["z(4)"]},
               {"coeff": "4", "monomial": ["z(2)", "L2", "L2"]},
               {"coeff": "-2/3", "monomial": ["L2", "L2", "L2", "L2"]}]},
    {"id": "tU1:4", "source": "reciprocal odd harmonic sums, weight 5",
     "terms": [{"coeff": "32", "monomial": ["Li5h"]}, {"coeff": "-93/16", "monomial": ["z(5)"]},
               {"coeff": "61/4", "monomial": ["z(4)", "L2"]},
               {"coeff": "-21/2", "monomial": ["z(3)", "z(2)"]},
               {"coeff": "8/3", "monomial": ["z(2)", "L2", "L2", "L2"]},
               {"coeff": "-4/15", "monomial": ["L2", "L2", "L2", "L2", "L2"]}]}
  ]
})json";

}  // namespace

ClosedFormTable ClosedFormTable::parse(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (j.value("format", "") != "apery-closed-forms/1")
    throw std::invalid_argument("closed-form table: unknown format tag");
  ClosedFormTable t;
  for (const auto& je : j.at("entries")) {
    ClosedFormEntry e;
    auto id = SeriesId::parse(je.at("id").get<std::string>());
    if (!id) throw std::invalid_argument("closed-form table: bad id " + je.at("id").dump());
    e.id = *id;
    for (const auto& jt : je.at("terms")) {
      Rational coeff = Rational::parse(jt.at("coeff").get<std::string>());
      Monomial mono;
      for (const auto& ja : jt.at("monomial")) {
        auto a = Atom::parse(ja.get<std::string>());
        if (!a) throw std::invalid_argument("closed-form table: bad atom " + ja.dump());
        mono.push_back(*a);
      }
      e.expr += Expr::monomial(std::move(mono), coeff);
    }
    e.source = je.value("source", "");
    t.entries_.push_back(std::move(e));
  }
  return t;
}

ClosedFormTable ClosedFormTable::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("closed-form table: cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

const ClosedFormTable& ClosedFormTable::embedded() {
  static const ClosedFormTable t = parse(kEmbeddedTable);
  return t;
}

std::optional<Expr> ClosedFormTable::find(const SeriesId& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return e.expr;
  return std::nullopt;
}

std::string ClosedFormTable::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = "apery-closed-forms/1";
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json je;
    je["id"] = e.id.str();
    je["source"] = e.source;
    je["terms"] = nlohmann::ordered_json::array();
    for (const auto& [mono, coeff] : e.expr.terms()) {
      nlohmann::ordered_json jt;
      jt["coeff"] = coeff.str();
      jt["monomial"] = nlohmann::ordered_json::array();
      for (const auto& a : mono) jt["monomial"].push_back(a.str());
      je["terms"].push_back(std::move(jt));
    }
    j["entries"].push_back(std::move(je));
  }
  return j.dump(2);
}

const ClosedFormTable& default_table() {
  static std::once_flag flag;
  static const ClosedFormTable* table = nullptr;
  std::call_once(flag, [] {
    if (const char* env = std::getenv("APERY_TABLE")) {
      static ClosedFormTable loaded = ClosedFormTable::load_file(env);
      table = &loaded;
    } else {
      table = &ClosedFormTable::embedded();
    }
  });
  return *table;
}

std::optional<Expr> known_closed_form(const SeriesId& id) { return default_table().find(id); }

}  // namespace apery
