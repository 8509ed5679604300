#include <doctest.h>

#include "helpers.hpp"
#include "skolog/term.hpp"

using namespace skolog;
using namespace skolog::testing;

namespace {
Var V(const char* name) { return Var{name, 0}; }
}  // namespace

TEST_CASE("terms: construction and kinds") {
  CHECK(T("X").is_var());
  CHECK(T("jack").is_atom());
  CHECK(T("42").is_int());
  CHECK(T("-7").value() == -7);
  const Term time = T("time(monday,9,11)");
  CHECK(time.is_struct("time", 3));
  CHECK(time.indicator() == PredicateIndicator{"time", 3});
  CHECK_THROWS_AS(Term::compound("f", {}), std::invalid_argument);
  CHECK(T("[a,b]") == Term::compound(".", {T("a"), Term::compound(".", {T("b"), T("[]")})}));
  CHECK(T("f(a,Y)").is_ground() == false);
  CHECK(T("f(a,g(b))").is_ground());
  CHECK(T("f(X)") != T("f(Y)"));
  CHECK(Term::variable("X", 3) != Term::variable("X", 4));
}

TEST_CASE("unify: worked examples") {
  SUBCASE("plus(0,3,Y) and plus(0,X,X)") {
    auto theta = unify(T("plus(0,3,Y)"), T("plus(0,X,X)"));
    REQUIRE(theta);
    CHECK(theta->size() == 2);
    CHECK(*theta->find(V("X")) == T("3"));
    CHECK(*theta->find(V("Y")) == T("3"));
    CHECK(*common_instance(T("plus(0,3,Y)"), T("plus(0,X,X)")) == T("plus(0,3,3)"));
  }
  SUBCASE("identical variables give the empty unifier") {
    auto theta = unify(T("X"), T("X"));
    REQUIRE(theta);
    CHECK(theta->empty());
  }
  SUBCASE("occurs check") { CHECK_FALSE(unify(T("X"), T("f(X)"))); }
  SUBCASE("nested occurs check") { CHECK_FALSE(unify(T("f(X,Y)"), T("f(Y,g(X))"))); }
  SUBCASE("functor clash") { CHECK_FALSE(unify(T("f(a)"), T("g(a)"))); }
  SUBCASE("arity clash") { CHECK_FALSE(unify(T("f(a)"), T("f(a,b)"))); }
  SUBCASE("constant clash") { CHECK_FALSE(unify(T("p(a)"), T("p(b)"))); }
  SUBCASE("integer vs atom") { CHECK_FALSE(unify(T("p(1)"), T("p('1')"))); }
  SUBCASE("chained bindings stay idempotent") {
    auto theta = unify(T("f(X,Y,Z)"), T("f(Y,Z,a)"));
    REQUIRE(theta);
    CHECK(is_idempotent(*theta));
    CHECK(theta->apply(T("f(X,Y,Z)")) == T("f(a,a,a)"));
  }
  SUBCASE("lists") {
    auto theta = unify(T("[X|Xs]"), T("[a,b,c]"));
    REQUIRE(theta);
    CHECK(*theta->find(V("X")) == T("a"));
    CHECK(*theta->find(V("Xs")) == T("[b,c]"));
  }
}

TEST_CASE("apply") {
  Substitution jack;
  jack.bind(V("X"), T("jack"));
  CHECK(jack.apply(T("likes(X,sarah)")) == T("likes(jack,sarah)"));
  CHECK(Substitution{}.apply(T("f(X,Y)")) == T("f(X,Y)"));
  Substitution y3;
  y3.bind(V("Y"), T("3"));
  CHECK(y3.apply(T("plus(0,3,Y)")) == T("plus(0,3,3)"));
  const Clause c = apply(jack, C("likes(X,Y) :- knows(X,Y)."));
  CHECK(format_clause(c) == "likes(jack,Y) :- knows(jack,Y)");
}

TEST_CASE("compose") {
  Substitution s1, s2;
  s1.bind(V("X"), T("Y"));
  s2.bind(V("Y"), T("3"));
  const Substitution c = compose(s1, s2);
  CHECK(c.size() == 2);
  CHECK(*c.find(V("X")) == T("3"));
  CHECK(*c.find(V("Y")) == T("3"));
  const Term t = T("p(X,Y)");
  CHECK(c.apply(t) == s2.apply(s1.apply(t)));
  CHECK(compose(Substitution{}, s2) == s2);
  CHECK(compose(s1, Substitution{}) == s1);
}

TEST_CASE("variables_of") {
  const auto vs = variables_of(T("p(X,f(Y),X)"));
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].name == "X");
  CHECK(vs[1].name == "Y");
  CHECK(variables_of(T("p(a,b)")).empty());
  CHECK(variables_of(T("X")).size() == 1);
}

TEST_CASE("rename") {
  VarSupply supply;
  const Clause app = C("append([X|Xs],Ys,[X|Zs]) :- append(Xs,Ys,Zs).");
  const Clause r1 = rename(app, supply);
  CHECK(format_clause(r1) == "append([_G1|_G2],_G3,[_G1|_G4]) :- append(_G2,_G3,_G4)");
  CHECK(is_variant(r1, app));
  const Clause r2 = rename(app, supply);
  for (const Var& a : variables_of(r1)) {
    for (const Var& b : variables_of(r2)) CHECK(a != b);
  }
  const Clause fact = C("likes(jack,sarah).");
  CHECK(rename(fact, supply) == fact);
}

TEST_CASE("is_variant") {
  CHECK(is_variant(T("f(X,Y,X)"), T("f(A,B,A)")));
  CHECK_FALSE(is_variant(T("f(X,Y,X)"), T("f(A,A,A)")));
  CHECK_FALSE(is_variant(T("f(X,X)"), T("f(A,B)")));
  CHECK_FALSE(is_variant(T("f(X)"), T("f(a)")));
}

TEST_CASE("constants_of") {
  CHECK(constants_of(Database{}).empty());
  Database db = db_of("p(f(a), 3).");
  CHECK(constants_of(db) == std::set<Term>{T("a"), T("3")});
}
