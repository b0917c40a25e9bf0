#pragma once

// JSON, JSON-lines and CSV encodings shared by the CLI and the cache.
// Polynomials are JSON arrays of decimal strings so that coefficients of any
// size round-trip exactly.

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "riley/classify.hpp"
#include "riley/epimorphism.hpp"
#include "riley/exact_arith.hpp"
#include "riley/rep_verify.hpp"
#include "riley/riley.hpp"
#include "riley/two_bridge.hpp"

namespace riley {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

inline Json to_json(const IntPoly& f) {
  Json arr = Json::array();
  for (const auto& c : f.coeffs()) arr.push_back(c.str());
  return arr;
}

inline IntPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("polynomial must be a JSON array");
  std::vector<Integer> coeffs;
  for (const auto& c : j) {
    if (!c.is_string() || !is_decimal(c.get<std::string>()))
      throw FormatError("polynomial coefficients must be decimal strings");
    coeffs.emplace_back(c.get<std::string>());
  }
  IntPoly f(coeffs);
  if (f.coeffs().size() != coeffs.size()) throw FormatError("polynomial has trailing zero coefficients");
  return f;
}

inline std::string rational_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

inline Json to_json(const EpsilonSequence& eps) {
  Json arr = Json::array();
  for (int s : eps.signs()) arr.push_back(s);
  return arr;
}

inline Json to_json(const TwoBridgePair& p) { return Json{{"alpha", p.alpha()}, {"beta", p.beta()}}; }

inline Json to_json(const RileyRecord& r) {
  return Json{{"alpha", r.pair.alpha()}, {"beta", r.pair.beta()}, {"eps", to_json(r.eps)}, {"phi", to_json(r.phi)}};
}

inline RileyRecord record_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("record must be a JSON object");
  for (const char* key : {"alpha", "beta", "eps", "phi"})
    if (!j.contains(key)) throw FormatError(std::string("record is missing \"") + key + "\"");
  if (!j["alpha"].is_number_integer() || !j["beta"].is_number_integer())
    throw FormatError("alpha and beta must be integers");
  if (!j["eps"].is_array()) throw FormatError("eps must be an array");
  std::vector<int> signs;
  for (const auto& s : j["eps"]) {
    if (!s.is_number_integer()) throw FormatError("eps entries must be integers");
    signs.push_back(s.get<int>());
  }
  try {
    return {TwoBridgePair::validate(j["alpha"].get<std::int64_t>(), j["beta"].get<std::int64_t>()),
            EpsilonSequence(std::move(signs)), poly_from_json(j["phi"])};
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

inline std::string render_eps(const EpsilonSequence& eps) {
  std::string s = "(";
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(eps[i]);
  }
  return s + ")";
}

// --- JSON-lines tables ---------------------------------------------------

inline void write_jsonl(std::ostream& os, const std::vector<RileyRecord>& records) {
  for (const auto& r : records) os << to_json(r).dump() << '\n';
}

inline std::vector<RileyRecord> read_jsonl(std::istream& is) {
  std::vector<RileyRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(record_from_json(Json::parse(line)));
    } catch (const std::exception& e) {
      throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

/// Every cached record must match a fresh computation.
inline void verify_records(const std::vector<RileyRecord>& records) {
  for (const auto& r : records) {
    if (r != make_record(r.pair)) throw FormatError("cached record for " + to_string(r.pair) + " does not match");
  }
}

// --- CSV -----------------------------------------------------------------

inline std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline constexpr const char* kTableCsvHeader = "alpha,beta,degree,coefficients";

inline std::string table_csv_row(const RileyRecord& r) {
  std::string coeffs;
  for (std::size_t k = 0; k < r.phi.coeffs().size(); ++k) {
    if (k) coeffs += ';';
    coeffs += r.phi.coeffs()[k].str();
  }
  const std::string degree = r.phi.is_zero() ? "-inf" : std::to_string(r.phi.degree().value());
  return std::to_string(r.pair.alpha()) + "," + std::to_string(r.pair.beta()) + "," + degree + "," + coeffs;
}

inline Json cofactor_json(const EpiPair& e) {
  if (e.cofactor) return to_json(*e.cofactor);
  Json arr = Json::array();
  for (const auto& q : e.cofactor_rational) arr.push_back(rational_string(q));
  return arr;
}

inline constexpr const char* kEpiCsvHeader = "alpha1,beta1,alpha2,beta2,cofactor";

inline std::string epi_csv_row(const EpiPair& e) {
  return std::to_string(e.source.alpha()) + "," + std::to_string(e.source.beta()) + "," +
         std::to_string(e.target.alpha()) + "," + std::to_string(e.target.beta()) + "," +
         csv_quote(cofactor_json(e).dump());
}

// --- Reports -------------------------------------------------------------

inline Json to_json(const EpiPair& e) {
  return Json{{"source", to_json(e.source)},
              {"target", to_json(e.target)},
              {"integral", e.integral()},
              {"cofactor", cofactor_json(e)}};
}

inline Json to_json(const PolyGroup& g) {
  Json members = Json::array();
  for (const auto& p : g.members) members.push_back(to_json(p));
  return Json{{"phi", to_json(g.phi)}, {"members", members}};
}

inline Json to_json(const ClassificationReport& r) {
  Json groups = Json::array();
  for (const auto& g : r.duplicate_groups) groups.push_back(to_json(g));
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back(Json{{"first", to_json(v.first)}, {"second", to_json(v.second)}, {"phi", to_json(v.phi)}});
  return Json{{"max_alpha", r.max_alpha},
              {"sbar_size", r.sbar_size},
              {"duplicate_groups", groups},
              {"violations", violations}};
}

inline Json to_json(const KnotClass& k) {
  Json members = Json::array();
  for (const auto& p : k.members) members.push_back(to_json(p));
  return Json{{"canonical", to_json(k.canonical)}, {"members", members}};
}

inline Json to_json(const FullReport& r) {
  Json per_alpha = Json::array();
  for (const auto& c : r.per_alpha)
    per_alpha.push_back(Json{{"alpha", c.alpha}, {"sbar_size", c.sbar_size}, {"classes", c.class_count}});
  Json classes = Json::array();
  for (const auto& k : r.classes) classes.push_back(to_json(k));
  Json epis = Json::array();
  for (const auto& e : r.epi_pairs) epis.push_back(to_json(e));
  return Json{{"max_alpha", r.table.max_alpha()},
              {"records", r.table.records().size()},
              {"passed", r.passed()},
              {"equal_polynomials", to_json(r.equal_polynomials)},
              {"injectivity",
               Json{{"sbar_size", r.injectivity.sbar_size},
                    {"injective", r.injectivity.duplicate_groups.empty()},
                    {"collisions", to_json(r.injectivity)["duplicate_groups"]}}},
              {"per_alpha", per_alpha},
              {"classes", classes},
              {"epi_pairs", epis}};
}

inline Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline Json to_json(const RepCheckReport& r) {
  Json roots = Json::array();
  for (const auto& c : r.roots) {
    roots.push_back(Json{{"re", c.u.real()},
                         {"im", c.u.imag()},
                         {"multiplicity", c.multiplicity},
                         {"phi_residual", c.phi_residual},
                         {"relator_residual", c.relator_residual},
                         {"nonabelian", c.nonabelian},
                         {"passed", c.passed}});
  }
  return Json{{"alpha", r.pair.alpha()},
              {"beta", r.pair.beta()},
              {"phi", to_json(r.phi)},
              {"root_tolerance", r.root_tolerance},
              {"rep_tolerance", r.rep_tolerance},
              {"roots", roots},
              {"passed", r.passed()}};
}

}  // namespace riley
