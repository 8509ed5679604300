#include "skolog/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "skolog/parser.hpp"

namespace skolog {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

/// Pops the next whitespace-delimited word off the front of s.
std::string next_word(std::string_view& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) {
    s = {};
    return {};
  }
  s.remove_prefix(first);
  const auto end = std::min(s.find_first_of(" \t"), s.size());
  std::string w(s.substr(0, end));
  s.remove_prefix(end);
  return w;
}

const PredicateIndicator kKnown{"known", 4};

Term known_fact(const Term& verdict, const Question& q, const Term& value) {
  return Term::compound("known", {verdict, Term::atom(q.attribute), Term::atom(q.subject), value});
}

/// First known/4 fact unifying with the pattern, in database order.
std::optional<Substitution> find_known(const Database& db, const Term& pattern) {
  VarSupply supply;
  for (const auto& ref : *db.clauses(kKnown)) {
    if (!ref->clause.is_fact()) continue;
    if (auto theta = unify(pattern, rename(ref->clause, supply).head)) return theta;
  }
  return std::nullopt;
}

Answer consult_until_answered(Oracle& oracle, const Question& q, const WhyText& why) {
  for (;;) {
    Answer a = oracle.consult(q);
    if (a.kind != Answer::Kind::WhyRequest) return a;
    oracle.explain(why ? why() : std::string("no goal is pending"));
  }
}

}  // namespace

std::string prompt_text(const Question& q) {
  std::string out = q.attribute + " of person " + q.subject + " is ";
  if (q.value) out += format_term(*q.value) + " ";
  out += "?";
  return out;
}

std::string Answer::to_string() const {
  switch (kind) {
    case Kind::Yes: return "yes";
    case Kind::No: return "no";
    case Kind::Value: return format_term(*value);
    case Kind::WhyRequest: return "why";
  }
  return {};
}

Answer Oracle::consult(const Question& q) {
  Answer a = answer(q);
  if (a.kind != Answer::Kind::WhyRequest) ++consultations_;
  return a;
}

ScriptedOracle ScriptedOracle::from_text(std::string_view text) {
  ScriptedOracle oracle;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto fail = [&](const std::string& why) {
      throw Error("script_error", "line " + std::to_string(line_no) + ": " + why);
    };
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) fail("missing '->'");
    std::string_view lhs = std::string_view(line).substr(0, arrow);
    const std::string rhs = trim(std::string_view(line).substr(arrow + 2));
    const std::string kind = next_word(lhs);
    if (kind != "ask" && kind != "askv") fail("expected 'ask' or 'askv' entry");
    Entry e;
    e.line = line_no;
    e.question.attribute = next_word(lhs);
    e.question.subject = next_word(lhs);
    const std::string rest = trim(lhs);
    if (e.question.subject.empty()) fail("missing attribute or subject");
    try {
      if (kind == "ask") {
        if (rest.empty()) fail("'ask' needs a value");
        e.question.value = parse_term(rest);
        if (rhs == "yes") {
          e.reply = Answer::yes();
        } else if (rhs == "no") {
          e.reply = Answer::no();
        } else {
          fail("'ask' replies must be yes or no");
        }
      } else {
        if (!rest.empty()) fail("'askv' takes an attribute and a subject");
        e.reply = rhs == "no" ? Answer::no() : Answer::of(parse_term(rhs));
      }
    } catch (const ParseError& err) {
      fail(err.what());
    }
    oracle.entries_.push_back(std::move(e));
  }
  return oracle;
}

ScriptedOracle ScriptedOracle::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io_error", "cannot open oracle script " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

Answer ScriptedOracle::answer(const Question& q) {
  const std::string prompt = prompt_text(q);
  prompts_.push_back(prompt);
  for (auto& e : entries_) {
    if (e.used || !(e.question == q)) continue;
    e.used = true;
    if (transcript_) *transcript_ << prompt << ' ' << e.reply.to_string() << '\n';
    return e.reply;
  }
  throw Error("unanswered_question", prompt);
}

Answer QueuedOracle::answer(const Question& q) {
  asked_.push_back(q);
  if (answers_.empty()) throw Error("unanswered_question", prompt_text(q));
  Answer a = std::move(answers_.front());
  answers_.pop_front();
  return a;
}

void InteractiveOracle::explain(std::string_view text) {
  out_ << text;
  if (!text.empty() && text.back() != '\n') out_ << '\n';
  out_.flush();
}

Answer InteractiveOracle::answer(const Question& q) {
  for (;;) {
    out_ << prompt_text(q) << '\n';
    out_.flush();
    std::string line;
    if (!std::getline(in_, line)) throw Error("input_closed", "no answer to: " + prompt_text(q));
    std::string reply = trim(line);
    if (!reply.empty() && reply.back() == '.') reply = trim(std::string_view(reply).substr(0, reply.size() - 1));
    if (reply == "why") return Answer::why();
    if (reply == "no") return Answer::no();
    if (!q.asks_for_value()) {
      if (reply == "yes") return Answer::yes();
      out_ << "please answer yes, no or why\n";
      continue;
    }
    try {
      Term value = parse_term(reply);
      if (value.is_ground()) return Answer::of(std::move(value));
    } catch (const ParseError&) {
    }
    out_ << "please answer with a ground term, no or why\n";
  }
}

AskOutcome ask(Database& db, Oracle& oracle, const Question& q, const WhyText& why) {
  if (!q.value || !q.value->is_ground()) throw Error("instantiation_error", "ask/3 needs a ground value");
  AskOutcome out;
  out.question = q;

  // ask(A, P, V) :- known(yes, A, P, V), !.
  if (find_known(db, known_fact(Term::atom("yes"), q, *q.value))) {
    out.success = true;
    out.answer = Answer::yes();
    return out;
  }
  // ask(A, P, V) :- known(_, A, P, V), !, fail.
  if (auto theta = find_known(db, known_fact(Term::variable("_Y"), q, *q.value))) {
    const Term verdict = theta->apply(Term::variable("_Y"));
    out.answer = verdict.is_atom("no") ? Answer::no() : Answer::of(verdict);
    return out;
  }
  // ask(A, P, V) :- prompt, readln(Y), asserta(known(Y, A, P, V)), Y = yes.
  out.answer = consult_until_answered(oracle, q, why);
  out.consulted = true;
  Term verdict = out.answer.kind == Answer::Kind::Yes  ? Term::atom("yes")
                 : out.answer.kind == Answer::Kind::No ? Term::atom("no")
                                                       : *out.answer.value;
  db.asserta(Clause{known_fact(verdict, q, *q.value), {}});
  out.success = out.answer.kind == Answer::Kind::Yes;
  return out;
}

AskOutcome ask_value(Database& db, Oracle& oracle, const Question& q, const WhyText& why) {
  AskOutcome out;
  out.question = q;
  out.question.value.reset();
  const Term slot = Term::variable("_W");

  if (auto theta = find_known(db, known_fact(Term::atom("yes"), out.question, slot))) {
    out.success = true;
    out.value = theta->apply(slot);
    out.answer = Answer::of(*out.value);
    return out;
  }
  if (find_known(db, known_fact(Term::atom("no"), out.question, Term::atom(std::string(kNoValue))))) {
    out.answer = Answer::no();
    return out;
  }

  out.answer = consult_until_answered(oracle, out.question, why);
  out.consulted = true;
  if (out.answer.kind == Answer::Kind::No) {
    db.asserta(Clause{known_fact(Term::atom("no"), out.question, Term::atom(std::string(kNoValue))), {}});
    return out;
  }
  Term value = out.answer.kind == Answer::Kind::Yes ? Term::atom("yes") : *out.answer.value;
  if (!value.is_ground()) throw Error("instantiation_error", "answer to '" + prompt_text(out.question) + "' is not ground");
  out.answer = Answer::of(value);
  db.asserta(Clause{known_fact(Term::atom("yes"), out.question, value), {}});
  out.success = true;
  out.value = std::move(value);
  return out;
}

std::size_t reset_known(Database& db) { return db.retract_all(kKnown); }

}  // namespace skolog
