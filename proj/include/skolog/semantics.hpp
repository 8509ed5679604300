#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "skolog/term.hpp"

namespace skolog {

/// A set of ground atoms.
using Interpretation = std::set<Term>;

/// Maximum nesting depth of universe terms; constants have depth 0.
struct UniverseBound {
  std::size_t depth = 0;
};

std::size_t term_depth(const Term& t);

/// Throws Error("not_definite") when a body uses cut, negation, builtins or a variable goal.
void require_definite(std::span<const Clause> program);

bool has_functors(std::span<const Clause> program);
/// Predicates of heads and body goals, in first-occurrence order.
std::vector<PredicateIndicator> predicates_of(std::span<const Clause> program);

/// Ground terms over the program's constants and functors up to the bound.
/// A program without constants gets the constant c0.
std::set<Term> herbrand_universe(std::span<const Clause> program, UniverseBound bound);

/// Every predicate of the program applied to every tuple of universe terms.
Interpretation herbrand_base(std::span<const Clause> program, UniverseBound bound);

/// One-step consequences: heads of ground clause instances whose bodies hold in I.
Interpretation tp(std::span<const Clause> program, const Interpretation& interp, UniverseBound bound);

struct MinimalModel {
  Interpretation atoms;
  /// Applications of tp that changed the interpretation.
  std::size_t iterations = 0;
  /// Set when the program has functors, so the model is cut off at the bound.
  bool depth_approximate = false;
};

/// Least fixpoint of tp, iterated from the empty interpretation.
MinimalModel minimal_model(std::span<const Clause> program, UniverseBound bound);

bool is_model(std::span<const Clause> program, const Interpretation& interp, UniverseBound bound);
/// The minimal model is contained in the intended meaning.
bool is_correct(std::span<const Clause> program, const Interpretation& intended, UniverseBound bound);
/// The intended meaning is contained in the minimal model.
bool is_complete(std::span<const Clause> program, const Interpretation& intended, UniverseBound bound);

}  // namespace skolog
