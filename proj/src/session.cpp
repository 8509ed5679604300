#include "skolog/session.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "skolog/parser.hpp"
#include "skolog/semantics.hpp"

namespace skolog {

using json = nlohmann::ordered_json;

Session::Session() { options_.max_solutions = 1; }

void Session::consult_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io_error", "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  consult_text(text.str());
}

void Session::consult_text(const std::string& text) { db_.consult(parse_program(text)); }

std::vector<std::string> binding_lines(const Solution& s) {
  std::vector<std::string> lines;
  for (const Var& v : s.query_vars) {
    if (v.name.starts_with('_')) continue;
    if (const Term* t = s.bindings.find(v)) lines.push_back(v.name + " = " + format_term(*t));
  }
  return lines;
}

namespace {

json bindings_to_json(const Substitution& theta) {
  json out = json::array();
  for (const auto& [v, t] : theta) out.push_back({{"var", v.name}, {"term", format_term(t)}});
  return out;
}

json justification_to_json(const Justification& j) {
  json out = {{"kind", justification_kind(j)}};
  std::visit(
      [&](const auto& just) {
        using J = std::decay_t<decltype(just)>;
        if constexpr (std::is_same_v<J, justification::ByClause> || std::is_same_v<J, justification::Fact>) {
          out["clause_id"] = just.id;
          out["clause"] = format_clause(just.clause);
        } else if constexpr (std::is_same_v<J, justification::Builtin>) {
          out["name"] = just.name;
        } else if constexpr (std::is_same_v<J, justification::UserSaid>) {
          out["question"] = prompt_text(just.question);
          out["answer"] = just.answer.to_string();
        } else if constexpr (std::is_same_v<J, justification::SFact>) {
          out["clause_id"] = just.id;
          out["s_fact"] = format_term(just.fact);
        }
      },
      j);
  return out;
}

}  // namespace

json proof_to_json(const ProofNode& proof) {
  json children = json::array();
  for (const ProofNode& c : proof.children) children.push_back(proof_to_json(c));
  return {{"goal", format_term(proof.goal)},
          {"justification", justification_to_json(proof.justification)},
          {"bindings", bindings_to_json(proof.theta)},
          {"children", std::move(children)}};
}

json trace_to_json(const std::vector<TraceEntry>& trace) {
  json out = json::array();
  for (const TraceEntry& e : trace) {
    out.push_back({{"goal", format_term(e.goal)}, {"bindings", bindings_to_json(e.bindings)}});
  }
  return out;
}

json outcome_to_json(const Outcome& outcome) {
  json solutions = json::array();
  for (const Solution& s : outcome.solutions) {
    json bindings = json::array();
    for (const Var& v : s.query_vars) {
      if (v.name.starts_with('_')) continue;
      if (const Term* t = s.bindings.find(v)) bindings.push_back({{"var", v.name}, {"term", format_term(*t)}});
    }
    solutions.push_back({{"bindings", std::move(bindings)}, {"proof", proof_to_json(s.proof)}});
  }
  json trace = outcome.solutions.empty() ? json::array() : trace_to_json(trace_of(outcome.solutions.front().proof));
  return {{"status", std::string(to_string(outcome.status))},
          {"solutions", std::move(solutions)},
          {"trace", std::move(trace)}};
}

int exit_code(Outcome::Status s) {
  switch (s) {
    case Outcome::Status::Yes:
      return kExitYes;
    case Outcome::Status::No:
      return kExitNo;
    case Outcome::Status::DepthExceeded:
      return kExitDepth;
  }
  return kExitError;
}

namespace {

void print_solution(const Solution& s, const BatchOptions& opts, std::ostream& out) {
  if (opts.trace) out << format_trace(trace_of(s.proof));
  const auto lines = binding_lines(s);
  if (lines.empty()) out << "yes\n";
  for (const auto& l : lines) out << l << '\n';
  if (opts.explain) out << how(s.proof);
}

int report_error(const std::exception& e, const BatchOptions& opts, std::ostream& out, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (opts.json) {
    const json doc = {{"status", "error"}, {"error", e.what()}, {"solutions", json::array()}, {"trace", json::array()}};
    out << doc.dump(2) << '\n';
  }
  return kExitError;
}

}  // namespace

int run_batch(const BatchOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  Session session;
  try {
    for (const auto& f : opts.files) session.consult_file(f);
    if (opts.oracle_script) {
      auto script = std::make_unique<ScriptedOracle>(ScriptedOracle::from_file(*opts.oracle_script));
      script->set_transcript(&err);
      session.set_oracle(std::move(script));
    } else {
      session.set_oracle(std::make_unique<InteractiveOracle>(in, err));
    }
    const std::vector<Term> query = parse_query(opts.goal);

    SolveOptions so;
    so.depth_limit = opts.depth;
    so.max_solutions = opts.max_solutions;
    SolveHooks hooks;
    hooks.diagnostic = [&err](std::string_view msg) { err << msg << '\n'; };
    hooks.output = opts.json ? &err : &out;

    const Outcome outcome = solve(session.db(), query, so, session.oracle(), hooks);
    if (opts.json) {
      out << outcome_to_json(outcome).dump(2) << '\n';
    } else if (outcome.solutions.empty()) {
      out << to_string(outcome.status) << '\n';
    } else {
      for (std::size_t i = 0; i < outcome.solutions.size(); ++i) {
        if (i > 0) out << '\n';
        print_solution(outcome.solutions[i], opts, out);
      }
    }
    return exit_code(outcome.status);
  } catch (const ParseError& e) {
    return report_error(e, opts, out, err);
  } catch (const Error& e) {
    return report_error(e, opts, out, err);
  }
}

int run_semantics(const std::string& path, std::size_t depth, std::ostream& out, std::ostream& err) {
  try {
    Session session;
    session.consult_file(path);
    std::vector<Clause> program;
    for (const auto& ref : session.db().all_clauses()) program.push_back(ref->clause);
    const MinimalModel m = minimal_model(program, UniverseBound{depth});
    std::vector<std::string> atoms;
    for (const Term& a : m.atoms) atoms.push_back(format_term(a));
    std::sort(atoms.begin(), atoms.end());
    for (const auto& a : atoms) out << a << '\n';
    if (m.depth_approximate) err << "note: terms deeper than " << depth << " are left out\n";
    return kExitYes;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << e.what() << '\n';
  }
  return kExitError;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Lines with one line of push-back, so a command typed instead of `;` is kept.
class LineSource {
 public:
  explicit LineSource(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (pushed_) {
      line = std::move(*pushed_);
      pushed_.reset();
      return true;
    }
    return static_cast<bool>(std::getline(in_, line));
  }
  void push_back(std::string line) { pushed_ = std::move(line); }

 private:
  std::istream& in_;
  std::optional<std::string> pushed_;
};

class Repl {
 public:
  Repl(Session& s, std::istream& in, std::ostream& out, std::ostream& err, ReplOptions opts)
      : session_(s), lines_(in), out_(out), err_(err), opts_(opts) {
    if (!session_.oracle()) {
      session_.set_oracle(std::make_unique<InteractiveOracle>(in, out));
    }
  }

  int run() {
    std::string command;
    while (read_command(command)) {
      if (command == ":quit") return kExitYes;
      try {
        dispatch(command);
      } catch (const ParseError& e) {
        err_ << "syntax error: " << e.what() << '\n';
      } catch (const Error& e) {
        err_ << "error: " << e.what() << '\n';
      }
    }
    return kExitYes;
  }

 private:
  // A command is a `:`-line or text up to a line ending in a dot.
  bool read_command(std::string& command) {
    command.clear();
    std::string line;
    for (;;) {
      if (opts_.prompt) out_ << (command.empty() ? "?- " : "|  ") << std::flush;
      if (!lines_.next(line)) return !trim(command).empty();
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == ':') {
        if (!command.empty()) err_ << "incomplete input dropped (commands end with a dot): " << command << '\n';
        command = line;
        return true;
      }
      command += command.empty() ? line : " " + line;
      if (command.back() == '.') {
        command = trim(command);
        return true;
      }
    }
  }

  void dispatch(const std::string& command) {
    if (command.starts_with(':')) return meta(command);
    const std::string body = trim(std::string_view(command).substr(0, command.size() - 1));
    if (body == "how") return show_how();
    if (body == "why") {
      out_ << "no question is pending; why is available when the system asks you something\n";
      return;
    }
    if (body == "listing") {
      out_ << listing(session_.db());
      return;
    }
    if (body.starts_with("negate ")) return negate(body.substr(7));
    query(command);
  }

  void meta(const std::string& command) {
    if (command == ":trace on") {
      session_.options().trace = true;
      out_ << "trace on\n";
    } else if (command == ":trace off") {
      session_.options().trace = false;
      out_ << "trace off\n";
    } else if (command == ":reset") {
      const std::size_t n = reset_known(session_.db());
      out_ << "forgot " << n << " remembered answer" << (n == 1 ? "" : "s") << '\n';
    } else {
      err_ << "unknown command " << command << " (try :trace on, :trace off, :reset, :quit)\n";
    }
  }

  void show_how() {
    if (const auto& proof = session_.last_proof()) {
      out_ << how(*proof);
    } else {
      out_ << "no proof to explain; the last query did not succeed\n";
    }
  }

  void negate(const std::string& text) {
    const Term fact = parse_term(text);
    const NegatedFact n = negate_fact(session_.db(), Clause{fact, {}}, *session_.oracle(), session_.ledger());
    out_ << "stored " << format_term(n.stored_form) << '\n';
  }

  void query(const std::string& text) {
    const std::vector<Term> goals = parse_query(text);
    session_.remember(std::nullopt);
    SolveOptions so = session_.options();
    so.max_solutions.reset();
    SolveHooks hooks;
    hooks.diagnostic = [this](std::string_view msg) { err_ << msg << '\n'; };
    hooks.live_trace = [this](std::string_view msg) { out_ << "  " << msg << '\n'; };
    hooks.output = &out_;

    Solver solver(session_.db(), goals, so, session_.oracle(), hooks);
    for (;;) {
      auto s = solver.next();
      if (!s) {
        out_ << (solver.depth_exceeded() ? "depth_exceeded" : "no") << '\n';
        return;
      }
      const auto lines = binding_lines(*s);
      if (lines.empty()) out_ << "yes\n";
      for (const auto& l : lines) out_ << l << '\n';
      session_.remember(std::move(s->proof));
      if (lines.empty()) return;
      if (opts_.prompt) out_ << "more? (; for another answer) " << std::flush;
      std::string reply;
      if (!lines_.next(reply)) return;
      reply = trim(reply);
      if (reply != ";") {
        if (!reply.empty()) lines_.push_back(reply);
        return;
      }
    }
  }

  Session& session_;
  LineSource lines_;
  std::ostream& out_;
  std::ostream& err_;
  ReplOptions opts_;
};

}  // namespace

int run_repl(Session& session, std::istream& in, std::ostream& out, std::ostream& err, ReplOptions opts) {
  return Repl(session, in, out, err, opts).run();
}

}  // namespace skolog
