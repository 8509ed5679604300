#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "skolog/parser.hpp"
#include "skolog/term.hpp"

namespace skolog {

using ClauseId = std::uint64_t;

struct StoredClause {
  ClauseId id;
  Clause clause;
};

using ClauseRef = std::shared_ptr<const StoredClause>;
/// Immutable snapshot of one predicate's clauses. Running solves hold on to
/// the snapshot taken when a goal was called, so later updates do not disturb them.
using ClauseList = std::shared_ptr<const std::vector<ClauseRef>>;

struct Retraction {
  ClauseRef removed;
  Substitution bindings;
};

/// Ordered clause store shared by consulted and asserted clauses.
class Database {
 public:
  ClauseRef asserta(Clause c);
  ClauseRef assertz(Clause c);
  ClauseRef assert_clause(Clause c) { return assertz(std::move(c)); }

  /// Removes the first clause whose head and body unify with the pattern.
  std::optional<Retraction> retract(const Clause& pattern, VarSupply& supply);

  /// Removes every clause of the predicate; returns how many were removed.
  std::size_t retract_all(const PredicateIndicator& pi);

  void consult(const std::vector<SourceClause>& clauses);

  ClauseList clauses(const PredicateIndicator& pi) const;
  bool defines(const PredicateIndicator& pi) const { return preds_.contains(pi); }
  /// Predicates in order of first definition.
  const std::vector<PredicateIndicator>& predicates() const { return order_; }
  std::vector<ClauseRef> all_clauses() const;
  std::size_t size() const;

  /// Equal clause sequences per predicate, ignoring ids and empty predicates.
  friend bool operator==(const Database& a, const Database& b);

 private:
  ClauseRef store(Clause c, bool front);

  std::map<PredicateIndicator, ClauseList> preds_;
  std::vector<PredicateIndicator> order_;
  ClauseId next_id_ = 1;
};

/// Atoms and integers in argument positions anywhere in the database;
/// predicate and functor names are not collected.
std::set<Term> constants_of(const Database& db);
std::set<Term> constants_of(std::span<const Clause> clauses);

/// Clause text for `listing`: one clause per line, each ending in a full stop.
std::string listing(const Database& db);

}  // namespace skolog
