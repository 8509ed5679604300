#include "skolog/semantics.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "skolog/database.hpp"
#include "skolog/engine.hpp"
#include "skolog/error.hpp"
#include "skolog/parser.hpp"

namespace skolog {

std::size_t term_depth(const Term& t) {
  if (!t.is_struct()) return 0;
  std::size_t deepest = 0;
  for (const Term& a : t.args()) deepest = std::max(deepest, term_depth(a));
  return deepest + 1;
}

void require_definite(std::span<const Clause> program) {
  for (const Clause& c : program) {
    for (const Term& g : c.body) {
      if (!g.is_callable() || is_builtin(g.indicator())) {
        throw Error("not_definite", "body goal " + format_term(g) + " in " + format_clause(c));
      }
    }
  }
}

namespace {

void collect_functors(const Term& t, std::set<PredicateIndicator>& out) {
  if (!t.is_struct()) return;
  out.insert(t.indicator());
  for (const Term& a : t.args()) collect_functors(a, out);
}

std::set<PredicateIndicator> functors_of(std::span<const Clause> program) {
  std::set<PredicateIndicator> out;
  auto walk_args = [&](const Term& goal) {
    for (const Term& a : goal.args()) collect_functors(a, out);
  };
  for (const Clause& c : program) {
    walk_args(c.head);
    for (const Term& g : c.body) walk_args(g);
  }
  return out;
}

void cartesian(const std::vector<Term>& domain, std::size_t arity, std::vector<Term>& prefix,
               const std::function<void(const std::vector<Term>&)>& emit) {
  if (prefix.size() == arity) {
    emit(prefix);
    return;
  }
  for (const Term& t : domain) {
    prefix.push_back(t);
    cartesian(domain, arity, prefix, emit);
    prefix.pop_back();
  }
}

Term make_atom(const std::string& name, const std::vector<Term>& args) {
  return args.empty() ? Term::atom(name) : Term::compound(name, args);
}

class Consequences {
 public:
  Consequences(std::span<const Clause> program, const Interpretation& interp, UniverseBound bound)
      : program_(program), universe_(herbrand_universe(program, bound)), domain_(universe_.begin(), universe_.end()) {
    const auto preds = predicates_of(program);
    const std::set<PredicateIndicator> known(preds.begin(), preds.end());
    for (const Term& a : interp) {
      if (!a.is_callable() || !known.contains(a.indicator())) continue;
      const auto args = a.args();
      if (std::all_of(args.begin(), args.end(), [&](const Term& t) { return universe_.contains(t); })) {
        by_predicate_[a.indicator()].push_back(a);
      }
    }
  }

  Interpretation run() {
    Interpretation out;
    for (const Clause& c : program_) match_body(c, 0, Substitution{}, out);
    return out;
  }

 private:
  void match_body(const Clause& c, std::size_t i, const Substitution& theta, Interpretation& out) {
    if (i == c.body.size()) {
      emit_heads(theta.apply(c.head), out);
      return;
    }
    const Term goal = theta.apply(c.body[i]);
    auto it = by_predicate_.find(goal.indicator());
    if (it == by_predicate_.end()) return;
    for (const Term& fact : it->second) {
      if (auto more = unify(goal, fact)) match_body(c, i + 1, compose(theta, *more), out);
    }
  }

  // Variables left in the head range over the whole universe.
  void emit_heads(const Term& head, Interpretation& out) {
    const auto free = variables_of(head);
    std::vector<Term> prefix;
    std::vector<Term> values;
    cartesian(domain_, free.size(), prefix, [&](const std::vector<Term>& choice) {
      Substitution fill;
      for (std::size_t k = 0; k < free.size(); ++k) fill.bind(free[k], choice[k]);
      Term atom = fill.apply(head);
      const auto args = atom.args();
      if (std::all_of(args.begin(), args.end(), [&](const Term& t) { return universe_.contains(t); })) {
        out.insert(std::move(atom));
      }
    });
  }

  std::span<const Clause> program_;
  std::set<Term> universe_;
  std::vector<Term> domain_;
  std::map<PredicateIndicator, std::vector<Term>> by_predicate_;
};

}  // namespace

bool has_functors(std::span<const Clause> program) { return !functors_of(program).empty(); }

std::vector<PredicateIndicator> predicates_of(std::span<const Clause> program) {
  std::vector<PredicateIndicator> out;
  auto add = [&](const Term& g) {
    if (!g.is_callable()) return;
    auto pi = g.indicator();
    if (std::find(out.begin(), out.end(), pi) == out.end()) out.push_back(std::move(pi));
  };
  for (const Clause& c : program) {
    add(c.head);
    for (const Term& g : c.body) add(g);
  }
  return out;
}

std::set<Term> herbrand_universe(std::span<const Clause> program, UniverseBound bound) {
  std::set<Term> level = constants_of(program);
  if (level.empty()) level.insert(Term::atom("c0"));
  const auto functors = functors_of(program);
  for (std::size_t d = 0; d < bound.depth && !functors.empty(); ++d) {
    const std::vector<Term> domain(level.begin(), level.end());
    std::set<Term> next = level;
    for (const auto& f : functors) {
      std::vector<Term> prefix;
      cartesian(domain, f.arity, prefix, [&](const std::vector<Term>& args) { next.insert(Term::compound(f.name, args)); });
    }
    if (next.size() == level.size()) break;
    level = std::move(next);
  }
  return level;
}

Interpretation herbrand_base(std::span<const Clause> program, UniverseBound bound) {
  const auto universe = herbrand_universe(program, bound);
  const std::vector<Term> domain(universe.begin(), universe.end());
  Interpretation out;
  for (const auto& pi : predicates_of(program)) {
    std::vector<Term> prefix;
    cartesian(domain, pi.arity, prefix, [&](const std::vector<Term>& args) { out.insert(make_atom(pi.name, args)); });
  }
  return out;
}

Interpretation tp(std::span<const Clause> program, const Interpretation& interp, UniverseBound bound) {
  require_definite(program);
  return Consequences(program, interp, bound).run();
}

MinimalModel minimal_model(std::span<const Clause> program, UniverseBound bound) {
  require_definite(program);
  MinimalModel m;
  m.depth_approximate = has_functors(program);
  for (;;) {
    Interpretation next = Consequences(program, m.atoms, bound).run();
    if (next == m.atoms) return m;
    m.atoms = std::move(next);
    ++m.iterations;
  }
}

bool is_model(std::span<const Clause> program, const Interpretation& interp, UniverseBound bound) {
  const Interpretation heads = tp(program, interp, bound);
  return std::includes(interp.begin(), interp.end(), heads.begin(), heads.end());
}

bool is_correct(std::span<const Clause> program, const Interpretation& intended, UniverseBound bound) {
  const auto m = minimal_model(program, bound).atoms;
  return std::includes(intended.begin(), intended.end(), m.begin(), m.end());
}

bool is_complete(std::span<const Clause> program, const Interpretation& intended, UniverseBound bound) {
  const auto m = minimal_model(program, bound).atoms;
  return std::includes(m.begin(), m.end(), intended.begin(), intended.end());
}

}  // namespace skolog
