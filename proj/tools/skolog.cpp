#include <unistd.h>

#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skolog/parser.hpp"
#include "skolog/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"skolog: a small logic programming system with ask/known dialogue and explanations"};
  app.require_subcommand(1);

  skolog::BatchOptions batch;
  std::string oracle_path;
  auto* run = app.add_subcommand("run", "consult programs and answer one query");
  run->add_option("files", batch.files, "program files, consulted in order")->check(CLI::ExistingFile);
  run->add_option("--goal,-g", batch.goal, "query, e.g. \"append(X,Y,[a])\"")->required();
  run->add_option("--oracle", oracle_path, "answer script for ask/ask_value questions")->check(CLI::ExistingFile);
  run->add_option("--depth", batch.depth, "maximum derivation length")->capture_default_str();
  run->add_flag("--trace", batch.trace, "print the (goal, bindings) trace of each solution");
  run->add_flag("--explain", batch.explain, "print the HOW explanation of each solution");
  run->add_flag("--json", batch.json, "print a JSON document instead of text");
  run->add_option("--max-solutions", batch.max_solutions, "stop after this many solutions")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string model_file;
  std::size_t model_depth = 2;
  auto* sem = app.add_subcommand("semantics", "print the minimal model of a definite program");
  sem->add_option("file", model_file, "program file")->required()->check(CLI::ExistingFile);
  sem->add_option("--depth", model_depth, "maximum nesting of Herbrand universe terms")->capture_default_str();

  std::vector<std::string> repl_files;
  std::string repl_oracle;
  std::size_t repl_depth = skolog::kDefaultDepthLimit;
  auto* repl = app.add_subcommand("repl", "interactive session");
  repl->add_option("files", repl_files, "program files to consult first")->check(CLI::ExistingFile);
  repl->add_option("--oracle", repl_oracle, "answer questions from a script instead of the terminal")
      ->check(CLI::ExistingFile);
  repl->add_option("--depth", repl_depth, "maximum derivation length")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : skolog::kExitError;
  }

  if (*run) {
    if (!oracle_path.empty()) batch.oracle_script = oracle_path;
    return skolog::run_batch(batch, std::cin, std::cout, std::cerr);
  }
  if (*sem) return skolog::run_semantics(model_file, model_depth, std::cout, std::cerr);

  skolog::Session session;
  session.options().depth_limit = repl_depth;
  try {
    for (const auto& f : repl_files) session.consult_file(f);
    if (!repl_oracle.empty()) {
      session.set_oracle(std::make_unique<skolog::ScriptedOracle>(skolog::ScriptedOracle::from_file(repl_oracle)));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return skolog::kExitError;
  }
  return skolog::run_repl(session, std::cin, std::cout, std::cerr, {.prompt = isatty(STDIN_FILENO) != 0});
}
