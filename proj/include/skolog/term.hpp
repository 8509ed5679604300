#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skolog {

/// A logic variable. Two variables are the same iff name and id match;
/// source variables carry id 0, renamed ones a fresh positive id.
struct Var {
  std::string name;
  std::uint64_t id = 0;

  friend auto operator<=>(const Var&, const Var&) = default;
  friend bool operator==(const Var&, const Var&) = default;
};

struct PredicateIndicator {
  std::string name;
  std::size_t arity = 0;

  std::string to_string() const { return name + "/" + std::to_string(arity); }

  friend auto operator<=>(const PredicateIndicator&, const PredicateIndicator&) = default;
  friend bool operator==(const PredicateIndicator&, const PredicateIndicator&) = default;
};

/// Immutable term: variable, atom, integer or compound. Copies share structure.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Int, Atom, Struct };

  static Term variable(Var v);
  static Term variable(std::string name, std::uint64_t id = 0);
  static Term atom(std::string name);
  static Term integer(std::int64_t value);
  /// Throws std::invalid_argument on an empty argument list; use atom() for 0-ary.
  static Term compound(std::string functor, std::vector<Term> args);
  /// Builds '.'/2 cells terminated by `tail` (default '[]').
  static Term list(std::vector<Term> items, std::optional<Term> tail = std::nullopt);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_int() const { return kind() == Kind::Int; }
  bool is_struct() const { return kind() == Kind::Struct; }
  bool is_atomic() const { return is_atom() || is_int(); }
  bool is_callable() const { return is_atom() || is_struct(); }
  bool is_ground() const;

  /// Atom name, functor name or variable name.
  const std::string& name() const;
  Var as_var() const;
  std::int64_t value() const;
  std::span<const Term> args() const;
  std::size_t arity() const { return args().size(); }
  const Term& arg(std::size_t i) const { return args()[i]; }
  PredicateIndicator indicator() const { return {name(), arity()}; }

  bool is_atom(std::string_view n) const { return is_atom() && name() == n; }
  bool is_struct(std::string_view f, std::size_t n) const {
    return is_struct() && arity() == n && name() == f;
  }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Clause {
  Term head;
  std::vector<Term> body;

  bool is_fact() const { return body.empty(); }
  PredicateIndicator indicator() const { return head.indicator(); }
  /// Head and body packed into one term, for unification against other clauses.
  Term as_term() const;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Finite map from variables to terms, kept idempotent by the operations below.
class Substitution {
 public:
  using Map = std::map<Var, Term>;

  Substitution() = default;
  explicit Substitution(Map bindings) : map_(std::move(bindings)) {}

  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const Term* find(const Var& v) const;
  bool contains(const Var& v) const { return find(v) != nullptr; }
  void bind(Var v, Term t) { map_.insert_or_assign(std::move(v), std::move(t)); }
  void erase(const Var& v) { map_.erase(v); }

  Term apply(const Term& t) const;
  Substitution restricted_to(std::span<const Var> vars) const;

  const Map& bindings() const { return map_; }
  Map::const_iterator begin() const { return map_.begin(); }
  Map::const_iterator end() const { return map_.end(); }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Map map_;
};

inline Term apply(const Substitution& theta, const Term& t) { return theta.apply(t); }
Clause apply(const Substitution& theta, const Clause& c);

/// apply(compose(s1, s2), t) == apply(s2, apply(s1, t)). The result is idempotent
/// when both inputs are and no variable bound by s1 occurs in the range of s2.
Substitution compose(const Substitution& first, const Substitution& second);

bool is_idempotent(const Substitution& theta);

bool occurs_in(const Var& v, const Term& t);

/// Most general unifier by the equation-stack algorithm, occurs check always on.
std::optional<Substitution> unify(const Term& a, const Term& b);

/// apply(unify(a, b), a), or nullopt when a and b do not unify.
std::optional<Term> common_instance(const Term& a, const Term& b);

/// Variables in left-to-right first-occurrence order, without duplicates.
std::vector<Var> variables_of(const Term& t);
std::vector<Var> variables_of(std::span<const Term> terms);
std::vector<Var> variables_of(const Clause& c);

/// True iff a and b are equal up to a bijective renaming of variables.
bool is_variant(const Term& a, const Term& b);
bool is_variant(const Clause& a, const Clause& b);

/// Source of fresh variable ids; renamed variables print as _G<id>.
class VarSupply {
 public:
  explicit VarSupply(std::uint64_t first = 1) : next_(first) {}
  Var fresh();
  std::uint64_t peek() const { return next_; }

 private:
  std::uint64_t next_;
};

struct RenamedClause {
  Clause clause;
  /// Original variable -> its fresh replacement, in first-occurrence order.
  std::vector<std::pair<Var, Var>> mapping;
};

RenamedClause rename_with_mapping(const Clause& c, VarSupply& supply);
inline Clause rename(const Clause& c, VarSupply& supply) {
  return rename_with_mapping(c, supply).clause;
}

}  // namespace skolog
