#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "skolog/database.hpp"
#include "skolog/oracle.hpp"
#include "skolog/term.hpp"

namespace skolog {

namespace justification {

/// Reduced by a rule of the database.
struct ByClause {
  ClauseId id;
  Clause clause;
};
/// Reduced by a fact of the database.
struct Fact {
  ClauseId id;
  Clause clause;
};
struct Builtin {
  std::string name;  // name/arity
};
struct UserSaid {
  Question question;
  Answer answer;
};
/// holds_negated/1 matched a stored s-fact.
struct SFact {
  ClauseId id;
  Term fact;
};
/// Synthetic root joining the goals of a multi-goal query.
struct Conjunction {};

}  // namespace justification

using Justification = std::variant<justification::ByClause, justification::Fact, justification::Builtin,
                                   justification::UserSaid, justification::SFact, justification::Conjunction>;

struct ProofNode {
  /// Goal as instantiated in the final answer.
  Term goal;
  /// Goal as it stood when it was selected from the resolvent.
  Term selected;
  Justification justification;
  /// Unifier of the reduction, restricted to the variables of `selected`.
  Substitution theta;
  /// Values of the justifying clause's own variables in the final answer.
  std::vector<std::pair<std::string, Term>> clause_bindings;
  std::vector<ProofNode> children;
};

struct TraceEntry {
  Term goal;
  Substitution bindings;
};

struct WhyFrame {
  Term goal;
  Clause clause;
};

struct WhyContext {
  /// Innermost first.
  std::vector<WhyFrame> frames;
  std::vector<Term> query;
};

/// Pre-order (goal, restricted unifier) pairs for every reduction, closed by a
/// `true` entry for the empty resolvent.
std::vector<TraceEntry> trace_of(const ProofNode& proof);

std::string format_bindings(const Substitution& theta);
std::string format_trace(const std::vector<TraceEntry>& trace);

/// Renders the inference chain behind a solution, children indented two spaces.
std::string how(const ProofNode& proof);

/// Renders the chain of goals being pursued while a question is pending.
std::string why(const WhyContext& ctx);

std::string justification_kind(const Justification& j);

}  // namespace skolog
