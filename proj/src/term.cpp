#include "skolog/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace skolog {

struct Term::Node {
  Kind kind;
  std::string name;
  std::int64_t number = 0;  // integer value, or variable id
  std::vector<Term> args;
  bool ground = true;
};

Term Term::variable(Var v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(v.name);
  n->number = static_cast<std::int64_t>(v.id);
  n->ground = false;
  return Term(std::move(n));
}

Term Term::variable(std::string name, std::uint64_t id) {
  return variable(Var{std::move(name), id});
}

Term Term::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::integer(std::int64_t value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Int;
  n->number = value;
  return Term(std::move(n));
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) {
    throw std::invalid_argument("compound term '" + functor + "' needs at least one argument");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Struct;
  n->name = std::move(functor);
  n->ground = std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::list(std::vector<Term> items, std::optional<Term> tail) {
  Term result = tail ? *tail : atom("[]");
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    result = compound(".", {*it, result});
  }
  return result;
}

Term::Kind Term::kind() const { return node_->kind; }
bool Term::is_ground() const { return node_->ground; }
const std::string& Term::name() const { return node_->name; }

Var Term::as_var() const {
  if (!is_var()) throw std::logic_error("as_var on a non-variable term");
  return Var{node_->name, static_cast<std::uint64_t>(node_->number)};
}

std::int64_t Term::value() const { return node_->number; }
std::span<const Term> Term::args() const { return node_->args; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.number != y.number || x.name != y.name || x.args.size() != y.args.size()) {
    return false;
  }
  return std::equal(x.args.begin(), x.args.end(), y.args.begin());
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  switch (x.kind) {
    case Term::Kind::Int:
      return x.number <=> y.number;
    case Term::Kind::Atom:
      return x.name <=> y.name;
    case Term::Kind::Var:
      if (auto c = x.name <=> y.name; c != 0) return c;
      return x.number <=> y.number;
    case Term::Kind::Struct:
      if (auto c = x.args.size() <=> y.args.size(); c != 0) return c;
      if (auto c = x.name <=> y.name; c != 0) return c;
      for (std::size_t i = 0; i < x.args.size(); ++i) {
        if (auto c = x.args[i] <=> y.args[i]; c != 0) return c;
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

Term Clause::as_term() const {
  std::vector<Term> parts;
  parts.reserve(body.size() + 1);
  parts.push_back(head);
  parts.insert(parts.end(), body.begin(), body.end());
  return Term::compound(":-", std::move(parts));
}

const Term* Substitution::find(const Var& v) const {
  auto it = map_.find(v);
  return it == map_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& t) const {
  if (map_.empty() || t.is_ground()) return t;
  if (t.is_var()) {
    const Term* bound = find(t.as_var());
    return bound ? *bound : t;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(a));
    changed = changed || !(args.back() == a);
  }
  return changed ? Term::compound(t.name(), std::move(args)) : t;
}

Substitution Substitution::restricted_to(std::span<const Var> vars) const {
  Substitution out;
  for (const Var& v : vars) {
    if (const Term* t = find(v)) out.bind(v, *t);
  }
  return out;
}

Clause apply(const Substitution& theta, const Clause& c) {
  Clause out{theta.apply(c.head), {}};
  out.body.reserve(c.body.size());
  for (const Term& g : c.body) out.body.push_back(theta.apply(g));
  return out;
}

Substitution compose(const Substitution& first, const Substitution& second) {
  Substitution out;
  for (const auto& [v, t] : first) {
    Term value = second.apply(t);
    if (!(value.is_var() && value.as_var() == v)) out.bind(v, std::move(value));
  }
  for (const auto& [v, t] : second) {
    if (!first.contains(v)) out.bind(v, t);
  }
  return out;
}

bool occurs_in(const Var& v, const Term& t) {
  if (t.is_ground()) return false;
  if (t.is_var()) return t.as_var() == v;
  return std::any_of(t.args().begin(), t.args().end(), [&](const Term& a) { return occurs_in(v, a); });
}

bool is_idempotent(const Substitution& theta) {
  for (const auto& [key, _] : theta) {
    for (const auto& [__, value] : theta) {
      if (occurs_in(key, value)) return false;
    }
  }
  return true;
}

namespace {

Term substitute(const Term& t, const Var& v, const Term& replacement) {
  if (!occurs_in(v, t)) return t;
  if (t.is_var()) return replacement;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(substitute(a, v, replacement));
  return Term::compound(t.name(), std::move(args));
}

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b) {
  std::vector<std::pair<Var, Term>> theta;
  std::vector<std::pair<Term, Term>> stack;
  stack.emplace_back(a, b);

  // Substitute t for v in the stack and in theta, then add v = t.
  auto bind = [&](const Var& v, const Term& t) {
    for (auto& [lhs, rhs] : stack) {
      lhs = substitute(lhs, v, t);
      rhs = substitute(rhs, v, t);
    }
    for (auto& binding : theta) binding.second = substitute(binding.second, v, t);
    theta.emplace_back(v, t);
  };

  while (!stack.empty()) {
    auto [x, y] = std::move(stack.back());
    stack.pop_back();
    if (x.is_var() && y.is_var() && x != y) {
      // The more recently created variable is bound, so older names survive.
      const bool y_newer = y.as_var().id > x.as_var().id;
      y_newer ? bind(y.as_var(), x) : bind(x.as_var(), y);
    } else if (x.is_var() && !occurs_in(x.as_var(), y)) {
      bind(x.as_var(), y);
    } else if (y.is_var() && !occurs_in(y.as_var(), x)) {
      bind(y.as_var(), x);
    } else if ((x.is_atomic() || x.is_var()) && x == y) {
      continue;
    } else if (x.is_struct() && y.is_struct() && x.arity() == y.arity() && x.name() == y.name()) {
      for (std::size_t i = 0; i < x.arity(); ++i) stack.emplace_back(x.arg(i), y.arg(i));
    } else {
      return std::nullopt;
    }
  }

  Substitution out;
  for (auto& [v, t] : theta) out.bind(std::move(v), std::move(t));
  return out;
}

std::optional<Term> common_instance(const Term& a, const Term& b) {
  auto theta = unify(a, b);
  if (!theta) return std::nullopt;
  return theta->apply(a);
}

namespace {

void collect_vars(const Term& t, std::vector<Var>& out) {
  if (t.is_ground()) return;
  if (t.is_var()) {
    Var v = t.as_var();
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

bool variant_walk(const Term& a, const Term& b, std::map<Var, Var>& forward, std::map<Var, Var>& backward) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: {
      Var x = a.as_var();
      Var y = b.as_var();
      auto [fit, fnew] = forward.emplace(x, y);
      auto [bit, bnew] = backward.emplace(y, x);
      return fit->second == y && bit->second == x;
    }
    case Term::Kind::Atom:
    case Term::Kind::Int:
      return a == b;
    case Term::Kind::Struct:
      if (a.arity() != b.arity() || a.name() != b.name()) return false;
      for (std::size_t i = 0; i < a.arity(); ++i) {
        if (!variant_walk(a.arg(i), b.arg(i), forward, backward)) return false;
      }
      return true;
  }
  return false;
}

}  // namespace

std::vector<Var> variables_of(const Term& t) {
  std::vector<Var> out;
  collect_vars(t, out);
  return out;
}

std::vector<Var> variables_of(std::span<const Term> terms) {
  std::vector<Var> out;
  for (const Term& t : terms) collect_vars(t, out);
  return out;
}

std::vector<Var> variables_of(const Clause& c) {
  std::vector<Var> out;
  collect_vars(c.head, out);
  for (const Term& g : c.body) collect_vars(g, out);
  return out;
}

bool is_variant(const Term& a, const Term& b) {
  std::map<Var, Var> forward;
  std::map<Var, Var> backward;
  return variant_walk(a, b, forward, backward);
}

bool is_variant(const Clause& a, const Clause& b) {
  return a.body.size() == b.body.size() && is_variant(a.as_term(), b.as_term());
}

Var VarSupply::fresh() {
  const std::uint64_t id = next_++;
  return Var{"_G" + std::to_string(id), id};
}

RenamedClause rename_with_mapping(const Clause& c, VarSupply& supply) {
  std::vector<std::pair<Var, Var>> mapping;
  Substitution renaming;
  for (Var& v : variables_of(c)) {
    Var fresh = supply.fresh();
    renaming.bind(v, Term::variable(fresh));
    mapping.emplace_back(std::move(v), std::move(fresh));
  }
  return RenamedClause{apply(renaming, c), std::move(mapping)};
}

}  // namespace skolog
