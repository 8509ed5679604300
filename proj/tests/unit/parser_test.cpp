#include <doctest.h>

#include "checks.hpp"
#include "helpers.hpp"
#include "skolog/parser.hpp"

using namespace skolog;
using namespace skolog::testing;

namespace {
std::vector<Token::Kind> kinds(std::string_view text) {
  std::vector<Token::Kind> out;
  for (const Token& t : tokenize(text)) out.push_back(t.kind);
  return out;
}

ParseError error_of(std::string_view text) {
  try {
    (void)parse_program(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return ParseError({}, "");
}
}  // namespace

TEST_CASE("tokenize") {
  using K = Token::Kind;
  const auto toks = tokenize("likes(jack , sarah).");
  REQUIRE(toks.size() == 8);
  CHECK(kinds("likes(jack , sarah).") ==
        std::vector<K>{K::Atom, K::LParen, K::Atom, K::Comma, K::Atom, K::RParen, K::End, K::Eof});
  CHECK(toks[0].text == "likes");
  CHECK(toks[2].text == "jack");
  CHECK(toks[4].text == "sarah");
  CHECK(kinds("% comment\n") == std::vector<K>{K::Eof});
  CHECK(kinds("?- X \\= [a|T], !.") == std::vector<K>{K::Query, K::Var, K::NotEq, K::LBracket, K::Atom, K::Bar,
                                                      K::Var, K::RBracket, K::Comma, K::Cut, K::End, K::Eof});
  try {
    (void)tokenize("p(@)");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("parse_program") {
  const auto clauses = parse_program("append([], Ys, Ys).\nappend([X|Xs], Ys, [X|Zs]) :- append(Xs, Ys, Zs).");
  REQUIRE(clauses.size() == 2);
  CHECK(clauses[0].clause.is_fact());
  CHECK(clauses[1].clause.body.size() == 1);
  CHECK(clauses[1].span.begin.line == 2);
  CHECK(format_clause(clauses[1].clause) == "append([X|Xs],Ys,[X|Zs]) :- append(Xs,Ys,Zs)");
  CHECK(parse_program("").empty());
  CHECK(parse_program("  % nothing\n\n").empty());

  const ParseError e = error_of("p(a) :- .");
  CHECK(e.line() == 1);
  CHECK(e.column() == 9);
}

TEST_CASE("parse_program: errors carry positions") {
  CHECK(error_of("p(a)").line() == 1);
  CHECK(error_of("p(a).\nq(").line() == 2);
  CHECK(error_of("X :- p.").column() == 1);
  CHECK(error_of("3.").column() == 1);
  CHECK(error_of("p('abc").line() == 1);
  CHECK(error_of("p(a) q(b).").column() == 6);
  CHECK(error_of("p([a|b|c]).").line() == 1);
}

TEST_CASE("variables are shared within a clause and fresh across clauses") {
  const auto clauses = parse_program("p(X, Y) :- q(X). r(X).");
  const auto& first = clauses[0].clause;
  CHECK(first.head.arg(0) == first.body[0].arg(0));
  CHECK(first.head.arg(0) != first.head.arg(1));
  const auto anon = parse_term("f(_, _)");
  CHECK(anon.arg(0) != anon.arg(1));
}

TEST_CASE("parse_query") {
  const auto q = parse_query("?- father(abraham, X).");
  REQUIRE(q.size() == 1);
  CHECK(format_term(q[0]) == "father(abraham,X)");
  CHECK(parse_query("true.") == std::vector<Term>{Term::atom("true")});
  CHECK(parse_query("p(X), q(X)").size() == 2);
  CHECK_THROWS_AS(parse_query("?- ."), ParseError);
  CHECK_THROWS_AS(parse_query("p(X), ."), ParseError);
}

TEST_CASE("format_term") {
  CHECK(format_term(Term::compound(".", {T("a"), Term::compound(".", {T("b"), T("[]")})})) == "[a,b]");
  CHECK(format_term(T("time(monday, 9, 11)")) == "time(monday,9,11)");
  CHECK(format_term(T("X")) == "X");
  CHECK(format_term(T("[a|T]")) == "[a|T]");
  CHECK(format_term(T("'hello world'")) == "'hello world'");
  CHECK(format_term(T("'it''s'")) == "'it\\'s'");
  CHECK(format_term(T("'Jack'")) == "'Jack'");
  CHECK(format_term(T("X = f(Y)")) == "X = f(Y)");
  CHECK(format_term(T("a \\= b")) == "a \\= b");
  CHECK(format_term(T("-3")) == "-3");
  CHECK(format_term(T("'.'(a)")) == "'.'(a)");
}

TEST_CASE("format_clause and format_goals") {
  CHECK(format_clause(C("likes(jack,sarah).")) == "likes(jack,sarah)");
  CHECK(format_clause(C("p :- q, r.")) == "p :- q, r");
  const auto goals = parse_query("p(X), X \\= a.");
  CHECK(format_goals(goals) == "p(X), X \\= a");
}

TEST_CASE("round trip on random terms and corpus" * doctest::timeout(30)) {
  const auto r = check_round_trip(11, 600, SKOLOG_CORPUS_DIR);
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.cases >= 600);
}

TEST_CASE("parse error positions on mutated corpus text") {
  const auto r = check_parse_error_positions(12, 800, SKOLOG_CORPUS_DIR);
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.cases > 100);
}

TEST_CASE("parenthesized clauses and conjunctions") {
  CHECK(format_term(T("(q(X) :- p(X), r)")) == "':-'(q(X),','(p(X),r))");
  CHECK(format_term(T("(a, b, c)")) == "','(a,','(b,c))");
  CHECK(format_term(T("(a)")) == "a");
  CHECK(format_term(T("'[]'(x)")) == "'[]'(x)");
  CHECK(T("'[]'(x)") == T(format_term(T("'[]'(x)"))));
}
