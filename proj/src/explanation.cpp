#include "skolog/explanation.hpp"

#include "skolog/parser.hpp"

namespace skolog {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void collect_trace(const ProofNode& node, std::vector<TraceEntry>& out) {
  const bool emits = std::visit(
      overloaded{
          [](const justification::Builtin&) { return false; },
          [](const justification::Conjunction&) { return false; },
          [](const auto&) { return true; },
      },
      node.justification);
  // Builtins count as a reduction only when they bound something.
  if (emits || (std::holds_alternative<justification::Builtin>(node.justification) && !node.theta.empty())) {
    out.push_back(TraceEntry{node.selected, node.theta});
  }
  for (const auto& child : node.children) collect_trace(child, out);
}

std::string render_line(const ProofNode& node) {
  const std::string goal = format_term(node.goal);
  return std::visit(
      overloaded{
          [&](const justification::ByClause& j) {
            std::string out = goal + " BECAUSE " + format_clause(j.clause);
            if (!node.clause_bindings.empty()) {
              out += " WITH ";
              for (std::size_t i = 0; i < node.clause_bindings.size(); ++i) {
                if (i > 0) out += ", ";
                out += node.clause_bindings[i].first + " = " + format_term(node.clause_bindings[i].second);
              }
            }
            return out;
          },
          [&](const justification::Fact& j) {
            std::string out = goal + " is a fact";
            if (!j.clause.head.is_ground()) out += " (instance of " + format_term(j.clause.head) + ")";
            return out;
          },
          [&](const justification::Builtin& j) { return goal + " BY BUILTIN " + j.name; },
          [&](const justification::UserSaid& j) {
            return goal + " BECAUSE user said " + j.answer.to_string() + " to \"" + prompt_text(j.question) + "\"";
          },
          [&](const justification::SFact& j) { return goal + " BECAUSE negated by s-fact " + format_term(j.fact); },
          [&](const justification::Conjunction&) { return std::string(); },
      },
      node.justification);
}

void render(const ProofNode& node, int depth, std::string& out) {
  int child_depth = depth;
  if (!std::holds_alternative<justification::Conjunction>(node.justification)) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += render_line(node);
    out += '\n';
    child_depth = depth + 1;
  }
  for (const auto& child : node.children) render(child, child_depth, out);
}

}  // namespace

std::vector<TraceEntry> trace_of(const ProofNode& proof) {
  std::vector<TraceEntry> out;
  collect_trace(proof, out);
  out.push_back(TraceEntry{Term::atom("true"), {}});
  return out;
}

std::string format_bindings(const Substitution& theta) {
  std::string out;
  for (const auto& [v, t] : theta) {
    if (!out.empty()) out += ", ";
    out += format_term(Term::variable(v)) + " = " + format_term(t);
  }
  return out;
}

std::string format_trace(const std::vector<TraceEntry>& trace) {
  std::string out;
  for (const auto& e : trace) {
    out += format_term(e.goal);
    if (!e.bindings.empty()) out += "    " + format_bindings(e.bindings);
    out += '\n';
  }
  return out;
}

std::string how(const ProofNode& proof) {
  std::string out;
  render(proof, 0, out);
  return out;
}

std::string why(const WhyContext& ctx) {
  std::string out;
  for (const auto& frame : ctx.frames) {
    out += "trying to prove " + format_term(frame.goal) + " using " + format_clause(frame.clause) + "\n";
  }
  out += "to answer your query " + format_goals(ctx.query) + "\n";
  return out;
}

std::string justification_kind(const Justification& j) {
  return std::visit(overloaded{
                        [](const justification::ByClause&) { return std::string("clause"); },
                        [](const justification::Fact&) { return std::string("asserted_fact"); },
                        [](const justification::Builtin&) { return std::string("builtin"); },
                        [](const justification::UserSaid&) { return std::string("user_said"); },
                        [](const justification::SFact&) { return std::string("s_fact"); },
                        [](const justification::Conjunction&) { return std::string("conjunction"); },
                    },
                    j);
}

}  // namespace skolog
