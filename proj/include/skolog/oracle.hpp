#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skolog/database.hpp"
#include "skolog/error.hpp"
#include "skolog/term.hpp"

namespace skolog {

/// "Is <value> the <attribute> of <subject>?"; an empty value asks for one.
struct Question {
  std::string attribute;
  std::string subject;
  std::optional<Term> value;

  bool asks_for_value() const { return !value.has_value(); }
  friend bool operator==(const Question&, const Question&) = default;
};

/// `<attribute> of person <subject> is <value> ?` or `<attribute> of person <subject> is ?`
std::string prompt_text(const Question& q);

struct Answer {
  enum class Kind { Yes, No, Value, WhyRequest };

  Kind kind = Kind::No;
  std::optional<Term> value;

  static Answer yes() { return {Kind::Yes, std::nullopt}; }
  static Answer no() { return {Kind::No, std::nullopt}; }
  static Answer of(Term v) { return {Kind::Value, std::move(v)}; }
  static Answer why() { return {Kind::WhyRequest, std::nullopt}; }

  /// yes, no, the value in canonical syntax, or why.
  std::string to_string() const;
  friend bool operator==(const Answer&, const Answer&) = default;
};

/// Something that answers questions: a person at a terminal, a script, a queue.
class Oracle {
 public:
  virtual ~Oracle() = default;

  /// Asks one question; why-requests are returned, not counted.
  Answer consult(const Question& q);
  /// Shows a WHY explanation to whoever is answering.
  virtual void explain(std::string_view text) { (void)text; }

  std::size_t consultations() const { return consultations_; }

 protected:
  virtual Answer answer(const Question& q) = 0;

 private:
  std::size_t consultations_ = 0;
};

/// Answers from a script file. Each line is one of
///   ask <attribute> <subject> <value> -> yes|no
///   askv <attribute> <subject> -> <value>|no
/// `#` starts a comment. Entries are matched in order and used at most once.
class ScriptedOracle : public Oracle {
 public:
  struct Entry {
    Question question;
    Answer reply;
    int line = 0;
    bool used = false;
  };

  static ScriptedOracle from_text(std::string_view text);
  static ScriptedOracle from_file(const std::string& path);

  /// Prompts and replies are echoed here when set, one `<prompt> <reply>` line each.
  void set_transcript(std::ostream* out) { transcript_ = out; }
  const std::vector<std::string>& prompts() const { return prompts_; }
  const std::vector<Entry>& entries() const { return entries_; }

 protected:
  Answer answer(const Question& q) override;

 private:
  std::vector<Entry> entries_;
  std::vector<std::string> prompts_;
  std::ostream* transcript_ = nullptr;
};

/// In-memory queue of answers, handed out in order regardless of the question.
class QueuedOracle : public Oracle {
 public:
  QueuedOracle() = default;
  explicit QueuedOracle(std::vector<Answer> answers) : answers_(answers.begin(), answers.end()) {}

  void push(Answer a) { answers_.push_back(std::move(a)); }
  const std::vector<Question>& asked() const { return asked_; }
  const std::vector<std::string>& explanations() const { return explanations_; }
  void explain(std::string_view text) override { explanations_.emplace_back(text); }

 protected:
  Answer answer(const Question& q) override;

 private:
  std::deque<Answer> answers_;
  std::vector<Question> asked_;
  std::vector<std::string> explanations_;
};

/// Prompts on a terminal. Accepts `yes.`, `no.`, `<value>.` (value questions) or `why.`.
class InteractiveOracle : public Oracle {
 public:
  InteractiveOracle(std::istream& in, std::ostream& out) : in_(in), out_(out) {}
  void explain(std::string_view text) override;

 protected:
  Answer answer(const Question& q) override;

 private:
  std::istream& in_;
  std::ostream& out_;
};

using WhyText = std::function<std::string()>;

struct AskOutcome {
  bool success = false;
  Question question;
  /// The answer that decided the outcome, fresh or remembered.
  Answer answer;
  bool consulted = false;
  /// Value bound by ask_value on success.
  std::optional<Term> value;
};

inline constexpr std::string_view kNoValue = "no_value";

/// The three-clause ask: remembered yes succeeds, any other remembered answer
/// fails, otherwise the oracle is asked and known/4 is asserted at the front.
AskOutcome ask(Database& db, Oracle& oracle, const Question& q, const WhyText& why = {});

/// Value-returning variant: reuses the first remembered yes value, fails on a
/// remembered refusal, otherwise asks for a value and remembers it.
AskOutcome ask_value(Database& db, Oracle& oracle, const Question& q, const WhyText& why = {});

/// Removes every known/4 clause; returns how many were removed.
std::size_t reset_known(Database& db);

}  // namespace skolog
