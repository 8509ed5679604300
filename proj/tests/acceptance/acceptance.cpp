// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "checks.hpp"
#include "helpers.hpp"
#include "skolog/explanation.hpp"
#include "skolog/session.hpp"

using namespace skolog;
using namespace skolog::testing;

namespace {

const std::filesystem::path kCorpus = SKOLOG_CORPUS_DIR;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) note = why;
    ok = ok && cond;
  }
  void absorb(const CheckResult& r, const std::string& what) {
    require(r.ok, what + ": " + r.detail);
    if (r.ok) note += (note.empty() ? "" : ", ") + what + " " + std::to_string(r.cases) + " cases";
  }
};

struct BatchRun {
  int code;
  std::string out;
  std::string err;
  double seconds;
};

BatchRun batch(BatchOptions opts) {
  std::istringstream in;
  std::ostringstream out, err;
  const auto start = Clock::now();
  const int code = run_batch(opts, in, out, err);
  return {code, out.str(), err.str(), seconds_since(start)};
}

// Renames _G<n> variables to _1, _2, ... in order of appearance.
std::string canonical(const std::string& text) {
  std::map<std::string, std::string> names;
  std::string out;
  for (std::size_t i = 0; i < text.size();) {
    if (text.compare(i, 2, "_G") == 0) {
      std::size_t j = i + 2;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      auto [it, fresh] = names.emplace(text.substr(i, j - i), "_" + std::to_string(names.size() + 1));
      out += it->second;
      i = j;
    } else {
      out += text[i++];
    }
  }
  return out;
}

Verdict ac1_append_trace() {
  Verdict v;
  BatchOptions o;
  o.files = {(kCorpus / "append.pl").string()};
  o.goal = "append([a,b],[c,d],Ls)";
  o.trace = true;
  const BatchRun r = batch(o);
  const std::string expected =
      "append([a,b],[c,d],Ls)    Ls = [a|_1]\n"
      "append([b],[c,d],_1)    _1 = [b|_2]\n"
      "append([],[c,d],_2)    _2 = [c,d]\n"
      "true\n"
      "Ls = [a,b,c,d]\n";
  v.require(r.code == kExitYes, "exit code " + std::to_string(r.code));
  v.require(canonical(r.out) == expected, "output was:\n" + r.out);
  v.require(r.seconds < 1.0, "took " + std::to_string(r.seconds) + "s");
  return v;
}

Verdict ac2_twin() {
  Verdict v;
  Database db;
  db.consult(parse_program(read_file(kCorpus / "twins.pl")));
  const Outcome yes = run(db, "twin(marsha, marjorie)");
  v.require(yes.status == Outcome::Status::Yes, "twin(marsha, marjorie) failed");
  const Outcome no = run(db, "not(twin(marsha, marjorie))");
  v.require(no.status == Outcome::Status::No && no.solutions.empty(), "not(twin) succeeded");
  BatchOptions o;
  o.files = {(kCorpus / "twins.pl").string()};
  o.goal = "not(twin(marsha, marjorie))";
  o.json = true;
  const BatchRun r = batch(o);
  v.require(r.code == kExitNo, "exit code " + std::to_string(r.code));
  const auto doc = nlohmann::json::parse(r.out);
  v.require(doc["status"] == "no" && doc["solutions"].empty(), "json reports a proof");
  return v;
}

Verdict ac3_not_twin_variants() {
  Verdict v;
  const std::string twins = (kCorpus / "twins.pl").string();
  for (const char* script : {"answers.txt", "answers_family.txt", "answers_day.txt"}) {
    BatchOptions o;
    o.files = {twins};
    o.goal = "state(not_twin, marsha, marjorie)";
    o.oracle_script = (kCorpus / script).string();
    o.explain = true;
    const BatchRun r = batch(o);
    v.require(r.code == kExitYes, std::string(script) + ": exit code " + std::to_string(r.code) + " " + r.err);
    v.require(r.out.find("user said") != std::string::npos, std::string(script) + ": no user answers in the proof");
    v.require(r.seconds < 1.0, std::string(script) + ": took " + std::to_string(r.seconds) + "s");
  }
  BatchOptions o;
  o.files = {twins};
  o.goal = "assertz(person(marcia, father1, mother1, month1, year1)), state(not_twin, marsha, marjorie)";
  o.oracle_script = (kCorpus / "answers_triplet.txt").string();
  const BatchRun r = batch(o);
  v.require(r.code == kExitYes, "triplet: exit code " + std::to_string(r.code) + " " + r.err);
  v.require(r.seconds < 1.0, "triplet: took " + std::to_string(r.seconds) + "s");
  return v;
}

std::size_t known_facts(const Database& db) { return db.clauses({"known", 4})->size(); }

Verdict ac4_oracle_memo() {
  Verdict v;
  {
    Database db;
    auto script = ScriptedOracle::from_text("ask country marsha egypt -> yes\n");
    const Outcome o = run(db, "ask(country, marsha, egypt), ask(country, marsha, egypt)", {}, &script);
    v.require(o.status == Outcome::Status::Yes, "repeated ask failed");
    v.require(script.consultations() == 1, "oracle consulted " + std::to_string(script.consultations()) + " times");
    v.require(known_facts(db) == 1, "known/4 has " + std::to_string(known_facts(db)) + " facts");
  }
  {
    Database db;
    auto script = ScriptedOracle::from_text("askv family marsha -> smith\n");
    const Outcome o = run(db, "ask_value(family, marsha, X), ask_value(family, marsha, Y), X = Y", {}, &script);
    v.require(o.status == Outcome::Status::Yes, "repeated ask_value failed");
    v.require(script.consultations() == 1, "ask_value consulted more than once");
    v.require(known_facts(db) == 1, "ask_value stored more than one fact");
  }
  {
    Database db = db_of("known(no, country, marsha, peru).");
    QueuedOracle silent;
    const Outcome o = run(db, "ask(country, marsha, peru)", {}, &silent);
    v.require(o.status == Outcome::Status::No, "stored no did not fail");
    v.require(silent.consultations() == 0, "stored no still consulted the oracle");
  }
  return v;
}

Verdict ac5_skolem() {
  Verdict v;
  v.absorb(check_skolem_freshness(2024, 220), "negated facts");
  return v;
}

Verdict ac6_unify() {
  Verdict v;
  v.absorb(check_mgu_property(1, 1200), "mgu");
  v.require(!unify(T("X"), T("f(X)")).has_value(), "X = f(X) unified");
  Database db;
  v.require(run(db, "X = f(X)").status == Outcome::Status::No, "X = f(X) succeeded in the engine");
  v.absorb(check_unify_small_scope(3, 300), "small scope");
  return v;
}

Verdict ac7_semantics() {
  Verdict v;
  const auto start = Clock::now();
  SemanticsStats stats;
  v.absorb(check_operational_declarative(42, 120, &stats), "programs");
  v.require(stats.intersection_checked > 0, "no program was small enough for the intersection check");
  const double took = seconds_since(start);
  v.require(took < 60.0, "took " + std::to_string(took) + "s");
  v.note += ", " + std::to_string(stats.intersection_checked) + " checked against all models";
  return v;
}

Verdict ac8_tp() {
  Verdict v;
  v.absorb(check_tp_laws(8, 150), "programs");
  return v;
}

Verdict ac9_dynamic_db() {
  Verdict v;
  Database db;
  run(db, "assertz(p(1)), assertz(p(2)), asserta(p(0))");
  v.require(answers(run(db, "p(X)", {.max_solutions = std::nullopt})) ==
                std::vector<std::string>{"X = 0", "X = 1", "X = 2"},
            "assert order wrong");
  run(db, "retract(p(1))");
  v.require(clause_texts(db, {"p", 1}) == std::vector<std::string>{"p(0)", "p(2)"}, "retract removed the wrong clause");
  v.require(run(db, "retract(p(7))").status == Outcome::Status::No, "retract of a missing clause succeeded");
  const Outcome view = run(db, "p(X), assertz(p(9))", {.max_solutions = std::nullopt});
  v.require(view.solutions.size() == 2, "running query saw clauses added during it");
  v.require(db.clauses({"p", 1})->size() == 4, "asserts during the query were lost");
  Database rules;
  run(rules, "assertz((q(X) :- p(X))), assertz(p(a))");
  v.require(answers(run(rules, "q(Y)")) == std::vector<std::string>{"Y = a"}, "asserted rule not usable");
  return v;
}

Verdict ac10_syntax() {
  Verdict v;
  v.absorb(check_round_trip(5, 600, kCorpus), "round trip");
  v.absorb(check_parse_error_positions(9, 600, kCorpus), "error positions");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"AC1 append trace", ac1_append_trace},
      {"AC2 twin and not(twin)", ac2_twin},
      {"AC3 not_twin variants and triplet", ac3_not_twin_variants},
      {"AC4 ask/known memo", ac4_oracle_memo},
      {"AC5 skolem freshness", ac5_skolem},
      {"AC6 unification", ac6_unify},
      {"AC7 operational = declarative", ac7_semantics},
      {"AC8 T_P laws", ac8_tp},
      {"AC9 dynamic database", ac9_dynamic_db},
      {"AC10 parse/print", ac10_syntax},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note = std::string("exception: ") + e.what();
    }
    std::cout << (v.ok ? "PASS " : "FAIL ") << name << (v.note.empty() ? "" : " (" + v.note + ")") << '\n';
    failures += v.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
