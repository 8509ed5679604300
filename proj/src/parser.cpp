#include "skolog/parser.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace skolog {

ParseError::ParseError(SourcePos pos, std::string message, std::string expected)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message +
                         (expected.empty() ? "" : " (expected " + expected + ")")),
      pos_(pos),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

std::string describe(Token::Kind kind) {
  switch (kind) {
    case Token::Kind::Atom: return "atom";
    case Token::Kind::Var: return "variable";
    case Token::Kind::Int: return "integer";
    case Token::Kind::LParen: return "'('";
    case Token::Kind::RParen: return "')'";
    case Token::Kind::LBracket: return "'['";
    case Token::Kind::RBracket: return "']'";
    case Token::Kind::Bar: return "'|'";
    case Token::Kind::Comma: return "','";
    case Token::Kind::End: return "'.'";
    case Token::Kind::Neck: return "':-'";
    case Token::Kind::Query: return "'?-'";
    case Token::Kind::Cut: return "'!'";
    case Token::Kind::Eq: return "'='";
    case Token::Kind::NotEq: return "'\\='";
    case Token::Kind::Eof: return "end of input";
  }
  return "token";
}

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      const bool spaced = skip_layout();
      Token tok = next();
      tok.spaced = spaced;
      const bool done = tok.kind == Token::Kind::Eof;
      out.push_back(std::move(tok));
      if (done) return out;
    }
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0'; }

  char advance() {
    const char c = text_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  bool skip_layout() {
    bool skipped = false;
    while (!at_end()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
      skipped = true;
    }
    return skipped;
  }

  Token make(Token::Kind kind, SourcePos start, std::string text = {}) {
    Token t;
    t.kind = kind;
    t.pos = start;
    t.text = std::move(text);
    return t;
  }

  Token next() {
    const SourcePos start = pos_;
    if (at_end()) return make(Token::Kind::Eof, start);
    const char c = peek();

    if (std::islower(static_cast<unsigned char>(c))) {
      std::string name;
      while (!at_end() && is_ident_char(peek())) name += advance();
      return make(Token::Kind::Atom, start, std::move(name));
    }
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (!at_end() && is_ident_char(peek())) name += advance();
      return make(Token::Kind::Var, start, std::move(name));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      return number(start);
    }
    if (c == '\'') return quoted(start);

    advance();
    switch (c) {
      case '(': return make(Token::Kind::LParen, start, "(");
      case ')': return make(Token::Kind::RParen, start, ")");
      case '[': return make(Token::Kind::LBracket, start, "[");
      case ']': return make(Token::Kind::RBracket, start, "]");
      case '|': return make(Token::Kind::Bar, start, "|");
      case ',': return make(Token::Kind::Comma, start, ",");
      case '.': return make(Token::Kind::End, start, ".");
      case '!': return make(Token::Kind::Cut, start, "!");
      case '=': return make(Token::Kind::Eq, start, "=");
      case ':':
        if (peek() == '-') {
          advance();
          return make(Token::Kind::Neck, start, ":-");
        }
        break;
      case '?':
        if (peek() == '-') {
          advance();
          return make(Token::Kind::Query, start, "?-");
        }
        break;
      case '\\':
        if (peek() == '=') {
          advance();
          return make(Token::Kind::NotEq, start, "\\=");
        }
        break;
      default:
        break;
    }
    throw ParseError(start, std::string("illegal character '") + c + "'");
  }

  Token number(SourcePos start) {
    std::string digits;
    if (peek() == '-') digits += advance();
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError(start, "integer out of range: " + digits);
    }
    Token t = make(Token::Kind::Int, start, digits);
    t.value = value;
    return t;
  }

  Token quoted(SourcePos start) {
    advance();  // opening quote
    std::string name;
    for (;;) {
      if (at_end()) throw ParseError(pos_, "unterminated quoted atom", "\"'\"");
      const char c = advance();
      if (c == '\'') {
        if (peek() == '\'') {
          name += advance();
          continue;
        }
        break;
      }
      if (c == '\\') {
        if (at_end()) throw ParseError(pos_, "unterminated quoted atom", "\"'\"");
        const SourcePos esc = pos_;
        const char e = advance();
        switch (e) {
          case 'n': name += '\n'; break;
          case 't': name += '\t'; break;
          case '\\': name += '\\'; break;
          case '\'': name += '\''; break;
          default: throw ParseError(esc, std::string("unknown escape '\\") + e + "'");
        }
        continue;
      }
      name += c;
    }
    Token t = make(Token::Kind::Atom, start, std::move(name));
    t.quoted = true;
    return t;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  std::vector<SourceClause> program() {
    std::vector<SourceClause> out;
    while (!at(Token::Kind::Eof)) out.push_back(clause());
    return out;
  }

  std::vector<Term> query() {
    vars_.clear();
    if (at(Token::Kind::Query)) ++i_;
    std::vector<Term> goals = body();
    if (at(Token::Kind::End)) ++i_;
    expect(Token::Kind::Eof);
    return goals;
  }

  Term single_term() {
    vars_.clear();
    Term t = argument();
    if (at(Token::Kind::End)) ++i_;
    expect(Token::Kind::Eof);
    return t;
  }

 private:
  const Token& cur() const { return tokens_[i_]; }
  bool at(Token::Kind k) const { return cur().kind == k; }

  const Token& expect(Token::Kind k) {
    if (!at(k)) fail("unexpected " + describe(cur().kind), describe(k));
    return tokens_[i_++];
  }

  [[noreturn]] void fail(std::string message, std::string expected) const {
    throw ParseError(cur().pos, std::move(message), std::move(expected));
  }

  SourceClause clause() {
    vars_.clear();
    const SourcePos begin = cur().pos;
    Term head = argument();
    if (!head.is_callable()) {
      throw ParseError(begin, "clause head must be an atom or compound term", "callable term");
    }
    std::vector<Term> goals;
    if (at(Token::Kind::Neck)) {
      ++i_;
      goals = body();
    }
    const Token& stop = expect(Token::Kind::End);
    SourcePos end = stop.pos;
    ++end.column;
    return SourceClause{Clause{std::move(head), std::move(goals)}, SourceSpan{begin, end}};
  }

  std::vector<Term> body() {
    std::vector<Term> goals;
    goals.push_back(goal());
    while (at(Token::Kind::Comma)) {
      ++i_;
      goals.push_back(goal());
    }
    return goals;
  }

  Term goal() {
    const SourcePos where = cur().pos;
    if (at(Token::Kind::End) || at(Token::Kind::Eof) || at(Token::Kind::Comma)) {
      fail("missing goal", "goal");
    }
    Term g = argument();
    if (!g.is_callable() && !g.is_var()) throw ParseError(where, "goal must be callable", "callable term");
    return g;
  }

  // primary [ ('=' | '\=') primary ]
  Term argument() {
    Term left = primary();
    if (at(Token::Kind::Eq) || at(Token::Kind::NotEq)) {
      std::string op = cur().text;
      ++i_;
      Term right = primary();
      return Term::compound(std::move(op), {std::move(left), std::move(right)});
    }
    return left;
  }

  Term primary() {
    const Token& t = cur();
    switch (t.kind) {
      case Token::Kind::Var: {
        ++i_;
        if (t.text == "_") return Term::variable("_", ++anonymous_);
        return vars_.try_emplace(t.text, Term::variable(t.text)).first->second;
      }
      case Token::Kind::Int:
        ++i_;
        return Term::integer(t.value);
      case Token::Kind::Cut:
        ++i_;
        return Term::atom("!");
      case Token::Kind::Atom: {
        std::string name = t.text;
        ++i_;
        if (!at(Token::Kind::LParen)) return Term::atom(std::move(name));
        ++i_;
        std::vector<Term> args;
        args.push_back(argument());
        while (at(Token::Kind::Comma)) {
          ++i_;
          args.push_back(argument());
        }
        expect(Token::Kind::RParen);
        return Term::compound(std::move(name), std::move(args));
      }
      case Token::Kind::LBracket:
        return list();
      case Token::Kind::LParen: {
        ++i_;
        Term inner = parenthesized();
        expect(Token::Kind::RParen);
        return inner;
      }
      default:
        fail("unexpected " + describe(t.kind), "term");
    }
  }

  // Inside parentheses a conjunction or a whole clause may appear, so that
  // assertz((H :- B1, B2)) passes a single term.
  Term parenthesized() {
    Term first = argument();
    if (at(Token::Kind::Neck)) {
      ++i_;
      return Term::compound(":-", {std::move(first), conjunction(goal())});
    }
    return conjunction(std::move(first));
  }

  Term conjunction(Term first) {
    if (!at(Token::Kind::Comma)) return first;
    ++i_;
    return Term::compound(",", {std::move(first), conjunction(goal())});
  }

  Term list() {
    expect(Token::Kind::LBracket);
    if (at(Token::Kind::RBracket)) {
      ++i_;
      return Term::atom("[]");
    }
    std::vector<Term> items;
    items.push_back(argument());
    while (at(Token::Kind::Comma)) {
      ++i_;
      items.push_back(argument());
    }
    std::optional<Term> tail;
    if (at(Token::Kind::Bar)) {
      ++i_;
      tail = argument();
    }
    expect(Token::Kind::RBracket);
    return Term::list(std::move(items), std::move(tail));
  }

  std::vector<Token> tokens_;
  std::size_t i_ = 0;
  std::map<std::string, Term> vars_;
  std::uint64_t anonymous_ = 0;
};

bool plain_atom(const std::string& name) {
  if (name == "[]" || name == "!") return true;
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!is_ident_char(c)) return false;
  }
  return true;
}

std::string format_atom(const std::string& name) {
  if (plain_atom(name)) return name;
  std::string out = "'";
  for (char c : name) {
    switch (c) {
      case '\'': out += "\\'"; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '\'';
  return out;
}

bool is_infix(const Term& t) {
  return t.is_struct() && t.arity() == 2 && (t.name() == "=" || t.name() == "\\=");
}

void write_term(const Term& t, std::string& out, bool infix_ok);

void write_canonical(const Term& t, std::string& out) {
  // [] and ! are plain as atoms but are separate tokens, so quote them as functors.
  out += t.name() == "[]" || t.name() == "!" ? "'" + t.name() + "'" : format_atom(t.name());
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i > 0) out += ',';
    write_term(t.arg(i), out, true);
  }
  out += ')';
}

void write_term(const Term& t, std::string& out, bool infix_ok) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out += t.name();
      return;
    case Term::Kind::Int:
      out += std::to_string(t.value());
      return;
    case Term::Kind::Atom:
      out += format_atom(t.name());
      return;
    case Term::Kind::Struct:
      break;
  }
  if (t.is_struct(".", 2)) {
    out += '[';
    const Term* cell = &t;
    bool first = true;
    while (cell->is_struct(".", 2)) {
      if (!first) out += ',';
      first = false;
      write_term(cell->arg(0), out, true);
      cell = &cell->arg(1);
    }
    if (!cell->is_atom("[]")) {
      out += '|';
      write_term(*cell, out, true);
    }
    out += ']';
    return;
  }
  if (is_infix(t) && infix_ok) {
    write_term(t.arg(0), out, false);
    out += ' ';
    out += t.name();
    out += ' ';
    write_term(t.arg(1), out, false);
    return;
  }
  write_canonical(t, out);
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

std::vector<SourceClause> parse_program(std::string_view text) { return Parser(text).program(); }

std::vector<Term> parse_query(std::string_view text) { return Parser(text).query(); }

Term parse_term(std::string_view text) { return Parser(text).single_term(); }

std::string format_term(const Term& t) {
  std::string out;
  write_term(t, out, true);
  return out;
}

std::string format_goals(std::span<const Term> goals) {
  std::string out;
  for (std::size_t i = 0; i < goals.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_term(goals[i]);
  }
  return out;
}

std::string format_clause(const Clause& c) {
  std::string out = format_term(c.head);
  if (!c.body.empty()) {
    out += " :- ";
    out += format_goals(c.body);
  }
  return out;
}

}  // namespace skolog
