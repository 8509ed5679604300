#include "skolog/engine.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "skolog/negation.hpp"
#include "skolog/parser.hpp"

namespace skolog {

std::string_view to_string(Outcome::Status s) {
  switch (s) {
    case Outcome::Status::Yes: return "yes";
    case Outcome::Status::No: return "no";
    case Outcome::Status::DepthExceeded: return "depth_exceeded";
  }
  return "no";
}

std::optional<Reduction> reduce(const Term& goal, const Clause& renamed) {
  auto theta = unify(goal, renamed.head);
  if (!theta) return std::nullopt;
  Reduction r{{}, std::move(*theta)};
  r.body.reserve(renamed.body.size());
  for (const Term& b : renamed.body) r.body.push_back(r.theta.apply(b));
  return r;
}

const std::vector<PredicateIndicator>& builtin_predicates() {
  static const std::vector<PredicateIndicator> all{
      {"true", 0},    {"fail", 0},   {"!", 0},       {"not", 1},       {"=", 2},       {"\\=", 2},
      {"plus", 3},    {"write", 1},  {"nl", 0},      {"ask", 3},       {"ask_value", 3}, {"asserta", 1},
      {"assertz", 1}, {"assert", 1}, {"retract", 1}, {"holds_negated", 1},
  };
  return all;
}

bool is_builtin(const PredicateIndicator& pi) {
  const auto& all = builtin_predicates();
  return std::find(all.begin(), all.end(), pi) != all.end();
}

namespace {

const PredicateIndicator kKnown{"known", 4};

struct Goal {
  Term term;
  /// Choice-point height when the parent clause was entered; `!` cuts back to it.
  std::size_t cut_barrier;
  /// Proof record of the clause that introduced this goal, -1 for query goals.
  int parent;
};

struct ProofRecord {
  int parent;
  Term selected;
  Justification justification;
  Substitution theta;
  std::vector<std::pair<Var, Var>> renaming;
};

struct ChoicePoint {
  std::vector<Goal> resolvent;
  Goal goal;
  ClauseList clauses;
  std::size_t next;
  std::size_t trail_size;
  std::size_t proof_size;
  std::size_t steps;
};

/// Resolves terms against the accumulated bindings, following chains.
class Resolver {
 public:
  explicit Resolver(const std::vector<std::pair<Var, Term>>& trail) {
    for (const auto& [v, t] : trail) raw_.emplace(v, t);
  }

  Term operator()(const Term& t) {
    if (t.is_ground()) return t;
    if (t.is_var()) {
      const Var v = t.as_var();
      if (auto done = resolved_.find(v); done != resolved_.end()) return done->second;
      auto it = raw_.find(v);
      if (it == raw_.end()) return t;
      Term value = (*this)(it->second);
      resolved_.emplace(v, value);
      return value;
    }
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const Term& a : t.args()) args.push_back((*this)(a));
    return Term::compound(t.name(), std::move(args));
  }

 private:
  std::map<Var, Term> raw_;
  std::map<Var, Term> resolved_;
};

Clause term_to_clause(const Term& t, std::string_view who) {
  if (t.is_var()) throw Error("instantiation_error", std::string(who) + " needs a clause");
  if (t.is_struct(":-", t.arity()) && t.arity() >= 2) {
    std::vector<Term> body;
    for (std::size_t i = 1; i < t.arity(); ++i) {
      const Term* g = &t.arg(i);
      while (g->is_struct(",", 2)) {
        body.push_back(g->arg(0));
        g = &g->arg(1);
      }
      body.push_back(*g);
    }
    if (!t.arg(0).is_callable()) throw Error("type_error", std::string(who) + ": clause head must be callable");
    return Clause{t.arg(0), std::move(body)};
  }
  if (!t.is_callable()) throw Error("type_error", std::string(who) + ": " + format_term(t) + " is not callable");
  return Clause{t, {}};
}

template <class T>
void truncate(std::vector<T>& v, std::size_t n) {
  if (n < v.size()) v.erase(v.begin() + static_cast<std::ptrdiff_t>(n), v.end());
}

std::string atom_arg(const Term& t, std::string_view who) {
  if (t.is_var()) throw Error("instantiation_error", std::string(who) + " needs bound arguments");
  if (!t.is_atom()) throw Error("type_error", std::string(who) + ": expected an atom, got " + format_term(t));
  return t.name();
}

}  // namespace

class Solver::Impl {
 public:
  Impl(Database& db, std::vector<Term> query, SolveOptions opts, Oracle* oracle, SolveHooks hooks,
       VarSupply* shared_supply, std::vector<WhyFrame> outer_frames, std::vector<Term> root_query)
      : db_(db),
        query_(std::move(query)),
        opts_(std::move(opts)),
        oracle_(oracle),
        hooks_(std::move(hooks)),
        supply_(shared_supply ? shared_supply : &own_supply_),
        outer_frames_(std::move(outer_frames)),
        root_query_(root_query.empty() ? query_ : std::move(root_query)) {
    for (auto it = query_.rbegin(); it != query_.rend(); ++it) resolvent_.push_back(Goal{*it, 0, -1});
  }

  std::optional<Solution> next() {
    if (exhausted_) return std::nullopt;
    if (started_ && !backtrack()) {
      exhausted_ = true;
      return std::nullopt;
    }
    started_ = true;
    if (!run()) {
      exhausted_ = true;
      return std::nullopt;
    }
    return make_solution();
  }

  bool depth_exceeded() const { return cut_off_; }

 private:
  bool run() {
    for (;;) {
      // An empty resolvent is a refutation.
      if (resolvent_.empty()) return true;
      Goal g = std::move(resolvent_.back());
      resolvent_.pop_back();
      if (!step(g)) {
        event("fail", g.term);
        if (!backtrack()) return false;
      }
    }
  }

  bool step(const Goal& g) {
    if (g.term.is_var()) throw Error("instantiation_error", "unbound goal " + format_term(g.term));
    if (!g.term.is_callable()) throw Error("type_error", format_term(g.term) + " is not callable");
    event("call", g.term);
    const PredicateIndicator pi = g.term.indicator();
    if (is_builtin(pi)) return call_builtin(g);
    if (!db_.defines(pi) && pi != kKnown && warned_.insert(pi).second && hooks_.diagnostic) {
      hooks_.diagnostic("warning: unknown predicate " + pi.to_string());
    }
    return try_clauses(g, db_.clauses(pi), 0);
  }

  bool try_clauses(const Goal& g, const ClauseList& clauses, std::size_t start) {
    for (std::size_t i = start; i < clauses->size(); ++i) {
      const ClauseRef& ref = (*clauses)[i];
      RenamedClause renamed = rename_with_mapping(ref->clause, *supply_);
      auto theta = unify(g.term, renamed.clause.head);
      if (!theta) continue;
      if (steps_ >= opts_.depth_limit) {
        cut_off_ = true;
        return false;
      }
      const std::size_t barrier = choice_points_.size();
      if (i + 1 < clauses->size()) {
        choice_points_.push_back(
            ChoicePoint{resolvent_, g, clauses, i + 1, trail_.size(), proofs_.size(), steps_});
      }
      ++steps_;
      Justification why = ref->clause.is_fact() ? Justification{justification::Fact{ref->id, ref->clause}}
                                                : Justification{justification::ByClause{ref->id, ref->clause}};
      const int node = record(g, std::move(why), *theta, std::move(renamed.mapping));
      apply_to_resolvent(*theta);
      const auto& body = renamed.clause.body;
      for (auto it = body.rbegin(); it != body.rend(); ++it) {
        resolvent_.push_back(Goal{theta->apply(*it), barrier, node});
      }
      return true;
    }
    return false;
  }

  bool backtrack() {
    while (!choice_points_.empty()) {
      ChoicePoint cp = std::move(choice_points_.back());
      choice_points_.pop_back();
      resolvent_ = std::move(cp.resolvent);
      truncate(trail_, cp.trail_size);
      truncate(proofs_, cp.proof_size);
      steps_ = cp.steps;
      event("redo", cp.goal.term);
      if (try_clauses(cp.goal, cp.clauses, cp.next)) return true;
      event("fail", cp.goal.term);
    }
    return false;
  }

  int record(const Goal& g, Justification j, const Substitution& theta,
             std::vector<std::pair<Var, Var>> renaming = {}) {
    const auto goal_vars = variables_of(g.term);
    proofs_.push_back(ProofRecord{g.parent, g.term, std::move(j), theta.restricted_to(goal_vars), std::move(renaming)});
    return static_cast<int>(proofs_.size()) - 1;
  }

  // Apply theta to the resolvent and remember it for the answer.
  void apply_to_resolvent(const Substitution& theta) {
    if (theta.empty()) return;
    for (Goal& g : resolvent_) g.term = theta.apply(g.term);
    for (const auto& [v, t] : theta) trail_.emplace_back(v, t);
  }

  bool succeed(const Goal& g, std::string_view name, const Substitution& theta = {}) {
    record(g, justification::Builtin{std::string(name)}, theta);
    apply_to_resolvent(theta);
    return true;
  }

  bool unify_and_succeed(const Goal& g, std::string_view name, const Term& a, const Term& b) {
    auto theta = unify(a, b);
    if (!theta) return false;
    return succeed(g, name, *theta);
  }

  bool call_builtin(const Goal& g) {
    const Term& t = g.term;
    const std::string name = t.indicator().to_string();
    const std::string& f = t.name();
    if (f == "true") return succeed(g, name);
    if (f == "fail") return false;
    if (f == "!") {
      truncate(choice_points_, g.cut_barrier);
      return succeed(g, name);
    }
    if (f == "nl") {
      if (hooks_.output) *hooks_.output << '\n';
      return succeed(g, name);
    }
    if (f == "=") return unify_and_succeed(g, name, t.arg(0), t.arg(1));
    if (f == "\\=") return unify(t.arg(0), t.arg(1)) ? false : succeed(g, name);
    if (f == "plus") return plus(g);
    if (f == "write") {
      if (hooks_.output) *hooks_.output << format_term(t.arg(0));
      return succeed(g, name);
    }
    if (f == "not") return negation_as_failure(g);
    if (f == "ask" || f == "ask_value") return ask_user(g);
    if (f == "asserta" || f == "assertz" || f == "assert") {
      Clause c = term_to_clause(t.arg(0), name);
      if (f == "asserta") {
        db_.asserta(std::move(c));
      } else {
        db_.assertz(std::move(c));
      }
      return succeed(g, name);
    }
    if (f == "retract") {
      auto removed = db_.retract(term_to_clause(t.arg(0), name), *supply_);
      if (!removed) return false;
      return succeed(g, name, removed->bindings);
    }
    if (f == "holds_negated") {
      auto ref = holds_negated(db_, t.arg(0));
      if (!ref) return false;
      record(g, justification::SFact{(*ref)->id, (*ref)->clause.head}, {});
      return true;
    }
    throw Error("existence_error", "builtin " + name + " is not implemented");
  }

  bool plus(const Goal& g) {
    const Term& t = g.term;
    for (const Term& a : t.args()) {
      if (!a.is_var() && !a.is_int()) throw Error("type_error", "plus/3: expected an integer, got " + format_term(a));
    }
    const Term &x = t.arg(0), &y = t.arg(1), &z = t.arg(2);
    if (x.is_int() && y.is_int()) return unify_and_succeed(g, "plus/3", z, Term::integer(x.value() + y.value()));
    if (x.is_int() && z.is_int()) return unify_and_succeed(g, "plus/3", y, Term::integer(z.value() - x.value()));
    if (y.is_int() && z.is_int()) return unify_and_succeed(g, "plus/3", x, Term::integer(z.value() - y.value()));
    throw Error("instantiation_error", "plus/3 needs at least two bound arguments: " + format_term(t));
  }

  // not(G) :- G, !, fail.   not(G).
  bool negation_as_failure(const Goal& g) {
    const Term& inner_goal = g.term.arg(0);
    if (inner_goal.is_var()) throw Error("instantiation_error", "not/1 needs a goal");
    SolveOptions inner_opts = opts_;
    inner_opts.depth_limit = opts_.depth_limit - steps_;
    inner_opts.max_solutions = 1;
    Impl inner(db_, {inner_goal}, inner_opts, oracle_, hooks_, supply_, why_frames(g.parent), current_root_query());
    if (inner.next()) return false;
    if (inner.depth_exceeded()) {
      cut_off_ = true;
      return false;
    }
    return succeed(g, "not/1");
  }

  bool ask_user(const Goal& g) {
    const Term& t = g.term;
    const bool wants_value = t.name() == "ask_value";
    const std::string who = t.indicator().to_string();
    Question q{atom_arg(t.arg(0), who), atom_arg(t.arg(1), who), std::nullopt};
    const Term& value = t.arg(2);
    if (!oracle_) throw Error("no_oracle", "no oracle to answer " + format_term(t));
    const WhyText why_text = [this, &g] { return why(WhyContext{why_frames(g.parent), current_root_query()}); };

    if (wants_value && value.is_var()) {
      AskOutcome outcome = ask_value(db_, *oracle_, q, why_text);
      if (!outcome.success) return false;
      Substitution theta;
      theta.bind(value.as_var(), *outcome.value);
      record(g, justification::UserSaid{outcome.question, outcome.answer}, theta);
      apply_to_resolvent(theta);
      return true;
    }
    if (!value.is_ground()) throw Error("instantiation_error", who + " needs a ground value: " + format_term(t));
    q.value = value;
    AskOutcome outcome = ask(db_, *oracle_, q, why_text);
    if (!outcome.success) return false;
    record(g, justification::UserSaid{outcome.question, outcome.answer}, {});
    return true;
  }

  /// Clause frames from the given proof record up to the query, innermost first.
  std::vector<WhyFrame> why_frames(int from) const {
    Resolver resolve(trail_);
    std::vector<WhyFrame> frames;
    for (int p = from; p >= 0; p = proofs_[static_cast<std::size_t>(p)].parent) {
      const ProofRecord& rec = proofs_[static_cast<std::size_t>(p)];
      if (const auto* c = std::get_if<justification::ByClause>(&rec.justification)) {
        frames.push_back(WhyFrame{resolve(rec.selected), c->clause});
      } else if (const auto* f = std::get_if<justification::Fact>(&rec.justification)) {
        frames.push_back(WhyFrame{resolve(rec.selected), f->clause});
      }
    }
    frames.insert(frames.end(), outer_frames_.begin(), outer_frames_.end());
    return frames;
  }

  std::vector<Term> current_root_query() const {
    Resolver resolve(trail_);
    std::vector<Term> out;
    for (const Term& q : root_query_) out.push_back(resolve(q));
    return out;
  }

  Solution make_solution() {
    Resolver resolve(trail_);
    std::vector<Var> query_vars = variables_of(std::span<const Term>(query_));
    Substitution bindings;
    for (const Var& v : query_vars) {
      Term value = resolve(Term::variable(v));
      if (!(value.is_var() && value.as_var() == v)) bindings.bind(v, std::move(value));
    }

    std::vector<std::vector<std::size_t>> children(proofs_.size());
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < proofs_.size(); ++i) {
      const int parent = proofs_[i].parent;
      (parent < 0 ? roots : children[static_cast<std::size_t>(parent)]).push_back(i);
    }
    std::function<ProofNode(std::size_t)> build = [&](std::size_t i) {
      const ProofRecord& rec = proofs_[i];
      ProofNode node{resolve(rec.selected), rec.selected, rec.justification, rec.theta, {}, {}};
      for (const auto& [original, fresh] : rec.renaming) {
        if (original.name == "_") continue;
        node.clause_bindings.emplace_back(original.name, resolve(Term::variable(fresh)));
      }
      for (std::size_t c : children[i]) node.children.push_back(build(c));
      return node;
    };
    if (roots.size() == 1) {
      return Solution{std::move(bindings), std::move(query_vars), build(roots.front())};
    }
    std::vector<Term> goals;
    for (const Term& q : query_) goals.push_back(resolve(q));
    Term joined = goals.empty() ? Term::atom("true") : Term::compound(",", goals);
    ProofNode root{joined, joined, justification::Conjunction{}, {}, {}, {}};
    for (std::size_t r : roots) root.children.push_back(build(r));
    return Solution{std::move(bindings), std::move(query_vars), std::move(root)};
  }

  void event(std::string_view what, const Term& goal) {
    if (!opts_.trace || !hooks_.live_trace) return;
    hooks_.live_trace(std::string(what) + ": " + format_term(goal));
  }

  Database& db_;
  std::vector<Term> query_;
  SolveOptions opts_;
  Oracle* oracle_;
  SolveHooks hooks_;
  VarSupply own_supply_;
  VarSupply* supply_;
  std::vector<WhyFrame> outer_frames_;
  std::vector<Term> root_query_;

  std::vector<Goal> resolvent_;  // leftmost goal at the back
  std::vector<ChoicePoint> choice_points_;
  std::vector<std::pair<Var, Term>> trail_;
  std::vector<ProofRecord> proofs_;
  std::size_t steps_ = 0;
  bool cut_off_ = false;
  bool started_ = false;
  bool exhausted_ = false;
  std::set<PredicateIndicator> warned_;
};

Solver::Solver(Database& db, std::vector<Term> query, SolveOptions opts, Oracle* oracle, SolveHooks hooks)
    : impl_(std::make_unique<Impl>(db, std::move(query), std::move(opts), oracle, std::move(hooks), nullptr,
                                   std::vector<WhyFrame>{}, std::vector<Term>{})) {}

Solver::~Solver() = default;

std::optional<Solution> Solver::next() { return impl_->next(); }

bool Solver::depth_exceeded() const { return impl_->depth_exceeded(); }

Outcome solve(Database& db, const std::vector<Term>& query, const SolveOptions& opts, Oracle* oracle,
              const SolveHooks& hooks) {
  Solver solver(db, query, opts, oracle, hooks);
  Outcome out;
  while (!opts.max_solutions || out.solutions.size() < *opts.max_solutions) {
    auto s = solver.next();
    if (!s) break;
    out.solutions.push_back(std::move(*s));
  }
  if (!out.solutions.empty()) {
    out.status = Outcome::Status::Yes;
  } else {
    out.status = solver.depth_exceeded() ? Outcome::Status::DepthExceeded : Outcome::Status::No;
  }
  return out;
}

}  // namespace skolog
