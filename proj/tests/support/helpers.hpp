#pragma once

#include <string>
#include <vector>

#include "skolog/database.hpp"
#include "skolog/engine.hpp"
#include "skolog/parser.hpp"

namespace skolog::testing {

inline Term T(std::string_view text) { return parse_term(text); }

inline Clause C(std::string_view text) {
  auto clauses = parse_program(text);
  return clauses.at(0).clause;
}

inline std::vector<Clause> program(std::string_view text) {
  std::vector<Clause> out;
  for (auto& sc : parse_program(text)) out.push_back(sc.clause);
  return out;
}

inline Database db_of(std::string_view text) {
  Database db;
  db.consult(parse_program(text));
  return db;
}

inline Outcome run(Database& db, std::string_view query, SolveOptions opts = {}, Oracle* oracle = nullptr) {
  return solve(db, parse_query(query), opts, oracle);
}

/// "X = a, Y = b" for one solution, in query-variable order.
inline std::string answer(const Solution& s) {
  std::string out;
  for (const Var& v : s.query_vars) {
    const Term* t = s.bindings.find(v);
    if (!t) continue;
    if (!out.empty()) out += ", ";
    out += v.name + " = " + format_term(*t);
  }
  return out.empty() ? "yes" : out;
}

inline std::vector<std::string> answers(const Outcome& o) {
  std::vector<std::string> out;
  for (const auto& s : o.solutions) out.push_back(answer(s));
  return out;
}

inline std::vector<std::string> clause_texts(const Database& db, const PredicateIndicator& pi) {
  std::vector<std::string> out;
  for (const auto& ref : *db.clauses(pi)) out.push_back(format_clause(ref->clause));
  return out;
}

}  // namespace skolog::testing
