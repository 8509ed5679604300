#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skolog/database.hpp"
#include "skolog/engine.hpp"
#include "skolog/explanation.hpp"
#include "skolog/negation.hpp"
#include "skolog/oracle.hpp"

namespace skolog {

enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitError = 2, kExitDepth = 3 };

/// Everything one user works with: the knowledge base, the answerer, and the
/// proof of the last successful query.
class Session {
 public:
  Session();

  Database& db() { return db_; }
  FreshnessLedger& ledger() { return ledger_; }
  SolveOptions& options() { return options_; }

  /// The session takes ownership; null removes the oracle.
  void set_oracle(std::unique_ptr<Oracle> oracle) { oracle_ = std::move(oracle); }
  Oracle* oracle() const { return oracle_.get(); }

  /// Throws ParseError or Error("io_error").
  void consult_file(const std::string& path);
  void consult_text(const std::string& text);

  const std::optional<ProofNode>& last_proof() const { return last_proof_; }
  void remember(std::optional<ProofNode> proof) { last_proof_ = std::move(proof); }

 private:
  Database db_;
  FreshnessLedger ledger_;
  SolveOptions options_;
  std::unique_ptr<Oracle> oracle_;
  std::optional<ProofNode> last_proof_;
};

/// `Var = term` lines for the bound query variables; `_`-prefixed names are hidden.
std::vector<std::string> binding_lines(const Solution& s);

nlohmann::ordered_json proof_to_json(const ProofNode& proof);
nlohmann::ordered_json trace_to_json(const std::vector<TraceEntry>& trace);
nlohmann::ordered_json outcome_to_json(const Outcome& outcome);

int exit_code(Outcome::Status s);

struct BatchOptions {
  std::vector<std::string> files;
  std::string goal;
  std::optional<std::string> oracle_script;
  std::size_t depth = kDefaultDepthLimit;
  bool trace = false;
  bool explain = false;
  bool json = false;
  std::size_t max_solutions = 1;
};

/// Consults the files, runs the goal and prints the answers. Without a script,
/// questions are put to `in`, with prompts on `err`.
int run_batch(const BatchOptions& opts, std::istream& in, std::ostream& out, std::ostream& err);

/// Prints the minimal model of a definite program, one atom per line, sorted.
int run_semantics(const std::string& path, std::size_t depth, std::ostream& out, std::ostream& err);

struct ReplOptions {
  /// Print a prompt before each command.
  bool prompt = false;
};

/// Reads commands until `:quit` or end of input. Questions from the engine
/// are answered on the same input stream unless the session has a scripted oracle.
int run_repl(Session& session, std::istream& in, std::ostream& out, std::ostream& err, ReplOptions opts = {});

}  // namespace skolog
