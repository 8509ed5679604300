#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "skolog/database.hpp"
#include "skolog/oracle.hpp"
#include "skolog/term.hpp"

namespace skolog {

/// A fact p(x1..xn, t1..tm) negated by Skolemizing its variables: stored as
/// s(neg(p), c1..cn, t1..tm) with every argument kept in its original position.
struct NegatedFact {
  PredicateIndicator source;
  std::vector<Term> skolem_constants;
  std::vector<Term> retained_terms;
  Term stored_form;
  ClauseRef clause;
  /// Oracle proposals refused because they already occur in the knowledge base.
  std::vector<Term> rejected;
};

/// Constants handed out by fresh_constant during one session.
class FreshnessLedger {
 public:
  bool issued(const Term& c) const { return issued_.contains(c); }
  void record(const Term& c) { issued_.insert(c); }
  const std::set<Term>& constants() const { return issued_; }

 private:
  std::set<Term> issued_;
};

inline constexpr int kSkolemReprompts = 3;

/// The candidate if it is an atom absent from the knowledge base and the
/// ledger; otherwise the first free sk_<k>. The result is recorded in the ledger.
Term fresh_constant(const Database& db, const std::optional<Term>& candidate, FreshnessLedger& ledger);

/// Negates a fact by replacing each of its variables with a fresh constant
/// obtained from the oracle (question `skolem of person <p> is ?`), then
/// appends the s-fact to the database. Throws Error("not_a_fact") for rules.
NegatedFact negate_fact(Database& db, const Clause& fact, Oracle& oracle, FreshnessLedger& ledger,
                        const WhyText& why = {});

/// s(neg(p), a1..ak) for a goal p(a1..ak).
Term negated_form(const Term& goal);

/// The stored s-fact matching a ground goal, if any.
std::optional<ClauseRef> holds_negated(const Database& db, const Term& goal);

}  // namespace skolog
