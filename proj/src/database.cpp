#include "skolog/database.hpp"

#include <algorithm>

namespace skolog {

ClauseRef Database::store(Clause c, bool front) {
  const PredicateIndicator pi = c.indicator();
  auto ref = std::make_shared<const StoredClause>(StoredClause{next_id_++, std::move(c)});
  auto it = preds_.find(pi);
  auto next = std::make_shared<std::vector<ClauseRef>>();
  if (it == preds_.end()) {
    order_.push_back(pi);
  } else {
    next->reserve(it->second->size() + 1);
    *next = *it->second;
  }
  if (front) {
    next->insert(next->begin(), ref);
  } else {
    next->push_back(ref);
  }
  preds_[pi] = std::move(next);
  return ref;
}

ClauseRef Database::asserta(Clause c) { return store(std::move(c), true); }

ClauseRef Database::assertz(Clause c) { return store(std::move(c), false); }

std::optional<Retraction> Database::retract(const Clause& pattern, VarSupply& supply) {
  auto it = preds_.find(pattern.indicator());
  if (it == preds_.end()) return std::nullopt;
  const auto& current = *it->second;
  const Term wanted = pattern.as_term();
  for (std::size_t i = 0; i < current.size(); ++i) {
    const Clause& candidate = current[i]->clause;
    if (candidate.body.size() != pattern.body.size()) continue;
    auto theta = unify(wanted, rename(candidate, supply).as_term());
    if (!theta) continue;
    auto next = std::make_shared<std::vector<ClauseRef>>(current);
    ClauseRef removed = (*next)[i];
    next->erase(next->begin() + static_cast<std::ptrdiff_t>(i));
    it->second = std::move(next);
    return Retraction{std::move(removed), std::move(*theta)};
  }
  return std::nullopt;
}

std::size_t Database::retract_all(const PredicateIndicator& pi) {
  auto it = preds_.find(pi);
  if (it == preds_.end()) return 0;
  const std::size_t n = it->second->size();
  it->second = std::make_shared<const std::vector<ClauseRef>>();
  return n;
}

void Database::consult(const std::vector<SourceClause>& clauses) {
  for (const auto& sc : clauses) assertz(sc.clause);
}

ClauseList Database::clauses(const PredicateIndicator& pi) const {
  auto it = preds_.find(pi);
  if (it == preds_.end()) return std::make_shared<const std::vector<ClauseRef>>();
  return it->second;
}

std::vector<ClauseRef> Database::all_clauses() const {
  std::vector<ClauseRef> out;
  for (const auto& pi : order_) {
    const auto& list = *preds_.at(pi);
    out.insert(out.end(), list.begin(), list.end());
  }
  return out;
}

std::size_t Database::size() const {
  std::size_t n = 0;
  for (const auto& [_, list] : preds_) n += list->size();
  return n;
}

bool operator==(const Database& a, const Database& b) {
  auto non_empty = [](const Database& db) {
    std::map<PredicateIndicator, std::vector<Clause>> out;
    for (const auto& [pi, list] : db.preds_) {
      if (list->empty()) continue;
      auto& v = out[pi];
      for (const auto& ref : *list) v.push_back(ref->clause);
    }
    return out;
  };
  return non_empty(a) == non_empty(b);
}

namespace {

void collect_constants(const Term& t, std::set<Term>& out) {
  if (t.is_atomic()) {
    out.insert(t);
  } else if (t.is_struct()) {
    for (const Term& a : t.args()) collect_constants(a, out);
  }
}

void collect_from_goal(const Term& goal, std::set<Term>& out) {
  if (goal.is_struct()) {
    for (const Term& a : goal.args()) collect_constants(a, out);
  }
}

}  // namespace

std::set<Term> constants_of(std::span<const Clause> clauses) {
  std::set<Term> out;
  for (const Clause& c : clauses) {
    collect_from_goal(c.head, out);
    for (const Term& g : c.body) collect_from_goal(g, out);
  }
  return out;
}

std::set<Term> constants_of(const Database& db) {
  std::vector<Clause> clauses;
  for (const auto& ref : db.all_clauses()) clauses.push_back(ref->clause);
  return constants_of(clauses);
}

std::string listing(const Database& db) {
  std::string out;
  for (const auto& ref : db.all_clauses()) {
    out += format_clause(ref->clause);
    out += ".\n";
  }
  return out;
}

}  // namespace skolog
