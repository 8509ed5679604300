#include "skolog/negation.hpp"

#include "skolog/error.hpp"
#include "skolog/parser.hpp"

namespace skolog {

Term fresh_constant(const Database& db, const std::optional<Term>& candidate, FreshnessLedger& ledger) {
  const std::set<Term> used = constants_of(db);
  auto is_fresh = [&](const Term& c) { return !used.contains(c) && !ledger.issued(c); };
  if (candidate && candidate->is_atom() && is_fresh(*candidate)) {
    ledger.record(*candidate);
    return *candidate;
  }
  for (std::uint64_t k = 1;; ++k) {
    Term c = Term::atom("sk_" + std::to_string(k));
    if (is_fresh(c)) {
      ledger.record(c);
      return c;
    }
  }
}

Term negated_form(const Term& goal) {
  std::vector<Term> args;
  args.reserve(goal.arity() + 1);
  args.push_back(Term::compound("neg", {Term::atom(goal.name())}));
  for (const Term& a : goal.args()) args.push_back(a);
  return Term::compound("s", std::move(args));
}

NegatedFact negate_fact(Database& db, const Clause& fact, Oracle& oracle, FreshnessLedger& ledger,
                        const WhyText& why) {
  if (!fact.is_fact()) throw Error("not_a_fact", format_clause(fact));
  const Term& head = fact.head;
  if (!head.is_callable()) throw Error("type_error", "cannot negate " + format_term(head));

  NegatedFact out{head.indicator(), {}, {}, head, nullptr, {}};

  // Variables of a fact are universally quantified; under negation each one
  // becomes existential and is replaced by a constant new to the knowledge base.
  Substitution skolem;
  const std::set<Term> used = constants_of(db);
  const Question question{"skolem", head.name(), std::nullopt};
  for (const Var& x : variables_of(head)) {
    std::optional<Term> accepted;
    for (int attempt = 0; attempt <= kSkolemReprompts && !accepted; ++attempt) {
      Answer a = oracle.consult(question);
      while (a.kind == Answer::Kind::WhyRequest) {
        oracle.explain(why ? why() : "negating " + format_term(head) + "\n");
        a = oracle.consult(question);
      }
      if (a.kind != Answer::Kind::Value) break;
      const Term& proposal = *a.value;
      if (proposal.is_atom() && !used.contains(proposal) && !ledger.issued(proposal)) {
        accepted = proposal;
      } else {
        out.rejected.push_back(proposal);
        oracle.explain("constant_occurs_in_kb: " + format_term(proposal) + " is not a new constant\n");
      }
    }
    Term c = fresh_constant(db, accepted, ledger);
    skolem.bind(x, c);
    out.skolem_constants.push_back(std::move(c));
  }

  for (const Term& a : head.args()) {
    if (a.is_ground()) out.retained_terms.push_back(a);
  }
  out.stored_form = negated_form(skolem.apply(head));
  out.clause = db.assertz(Clause{out.stored_form, {}});
  return out;
}

std::optional<ClauseRef> holds_negated(const Database& db, const Term& goal) {
  if (!goal.is_callable()) throw Error("type_error", "holds_negated/1 needs a callable goal");
  if (!goal.is_ground()) throw Error("instantiation_error", "holds_negated/1 needs a ground goal");
  const Term wanted = negated_form(goal);
  VarSupply supply;
  for (const auto& ref : *db.clauses(wanted.indicator())) {
    if (ref->clause.is_fact() && unify(wanted, rename(ref->clause, supply).head)) return ref;
  }
  return std::nullopt;
}

}  // namespace skolog
