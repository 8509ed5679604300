#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "skolog/database.hpp"
#include "skolog/error.hpp"
#include "skolog/explanation.hpp"
#include "skolog/oracle.hpp"
#include "skolog/term.hpp"

namespace skolog {

inline constexpr std::size_t kDefaultDepthLimit = 10000;

struct SolveOptions {
  /// Maximum number of clause reductions along one derivation.
  std::size_t depth_limit = kDefaultDepthLimit;
  /// Emit call/redo/fail events to SolveHooks::live_trace.
  bool trace = false;
  /// Stop after this many solutions; unlimited when empty.
  std::optional<std::size_t> max_solutions;
};

struct SolveHooks {
  /// Warnings, e.g. calls to undefined predicates.
  std::function<void(std::string_view)> diagnostic;
  std::function<void(std::string_view)> live_trace;
  /// Sink for write/1 and nl/0; output is dropped when null.
  std::ostream* output = nullptr;
};

struct Solution {
  /// Final values of the query variables that got bound.
  Substitution bindings;
  /// Query variables in first-occurrence order.
  std::vector<Var> query_vars;
  ProofNode proof;
};

struct Outcome {
  enum class Status { Yes, No, DepthExceeded };
  Status status = Status::No;
  std::vector<Solution> solutions;
};

std::string_view to_string(Outcome::Status s);

struct Reduction {
  std::vector<Term> body;
  Substitution theta;
};

/// Replaces a goal by the body of a clause whose head unifies with it.
/// The clause must already be renamed apart from the goal.
std::optional<Reduction> reduce(const Term& goal, const Clause& renamed);

bool is_builtin(const PredicateIndicator& pi);
const std::vector<PredicateIndicator>& builtin_predicates();

/// SLD resolution over a database: leftmost goal first, clauses in database
/// order, chronological backtracking. Solutions are produced one at a time.
class Solver {
 public:
  Solver(Database& db, std::vector<Term> query, SolveOptions opts = {}, Oracle* oracle = nullptr,
         SolveHooks hooks = {});
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  /// The next solution, or nullopt once the search space is exhausted.
  /// Throws skolog::Error on instantiation and type errors or oracle failures.
  std::optional<Solution> next();

  /// True once some derivation was abandoned at the depth limit.
  bool depth_exceeded() const;

  class Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

Outcome solve(Database& db, const std::vector<Term>& query, const SolveOptions& opts = {},
              Oracle* oracle = nullptr, const SolveHooks& hooks = {});

}  // namespace skolog
