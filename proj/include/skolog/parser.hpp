#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skolog/term.hpp"

namespace skolog {

struct SourcePos {
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in bytes

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

struct SourceSpan {
  SourcePos begin;
  SourcePos end;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, std::string message, std::string expected = {});

  SourcePos position() const { return pos_; }
  int line() const { return pos_.line; }
  int column() const { return pos_.column; }
  const std::string& message() const { return message_; }
  const std::string& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::string message_;
  std::string expected_;
};

struct Token {
  enum class Kind {
    Atom,
    Var,
    Int,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Bar,
    Comma,
    End,      // .
    Neck,     // :-
    Query,    // ?-
    Cut,      // !
    Eq,       // =
    NotEq,    // \=
    Eof,
  };

  Kind kind;
  std::string text;
  std::int64_t value = 0;
  SourcePos pos;
  bool quoted = false;
  /// True when whitespace or a comment precedes the token.
  bool spaced = false;
};

std::string describe(Token::Kind kind);

/// Splits text into tokens; the result always ends with an Eof token.
std::vector<Token> tokenize(std::string_view text);

struct SourceClause {
  Clause clause;
  SourceSpan span;
};

std::vector<SourceClause> parse_program(std::string_view text);

/// Accepts `?- G1, ..., Gn.` or bare `G1, ..., Gn`; the final dot is optional.
std::vector<Term> parse_query(std::string_view text);

/// A single term, optionally followed by a full stop.
Term parse_term(std::string_view text);

std::string format_term(const Term& t);
/// `head` or `head :- b1, b2` without the final full stop.
std::string format_clause(const Clause& c);
std::string format_goals(std::span<const Term> goals);

}  // namespace skolog
