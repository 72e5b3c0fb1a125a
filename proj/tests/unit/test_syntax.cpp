#include <string>

#include "doctest.h"
#include "dclpc/control.hpp"
#include "dclpc/errors.hpp"
#include "dclpc/normal_form.hpp"
#include "dclpc/syntax.hpp"
#include "generators.hpp"

using namespace dclpc;

namespace {

Formula A(const char* p) { return Formula::atom(p); }
Formula N(Formula f) { return Formula::negation(std::move(f)); }

}  // namespace

TEST_CASE("coalition modality over a conjunction") {
  const Formula f = parse_formula("dia{1,2}(p & r & ~q)");
  CHECK(f == Formula::dia({"1", "2"}, conj(conj(A("p"), A("r")), N(A("q")))));
}

TEST_CASE("constants") {
  CHECK(parse_formula("true") == Formula::top());
  CHECK(parse_formula("false") == N(Formula::top()));
}

TEST_CASE("controls is a macro over both polarities") {
  CHECK(parse_formula("controls(i, p)") == conj(Formula::dia({"i"}, A("p")), Formula::dia({"i"}, N(A("p")))));
  CHECK(parse_formula("controls({i,j}, p)") == controls(Coalition{"i", "j"}, A("p")));
}

TEST_CASE("coalitions are sets") {
  CHECK(parse_formula("dia{2,1,2}p") == parse_formula("dia{1,2}p"));
  CHECK(parse_formula("dia{}p") == Formula::dia({}, A("p")));
}

TEST_CASE("derived connectives") {
  CHECK(parse_formula("p -> q") == Formula::disjunction(N(A("p")), A("q")));
  CHECK(parse_formula("p -> q -> r") == implies(A("p"), implies(A("q"), A("r"))));
  CHECK(parse_formula("p <-> q") == iff(A("p"), A("q")));
  CHECK(parse_formula("box{1}p") == N(Formula::dia({"1"}, N(A("p")))));
  CHECK(parse_formula("[give(1,p,2)]q") == N(Formula::dia_prog(Program::give("1", "p", "2"), N(A("q")))));
}

TEST_CASE("precedence: prefix binds tighter than and, and than or") {
  CHECK(parse_formula("~p & q") == conj(N(A("p")), A("q")));
  CHECK(parse_formula("p | q & r") == Formula::disjunction(A("p"), conj(A("q"), A("r"))));
  CHECK(parse_formula("dia{2}(p | q) & r") == conj(Formula::dia({"2"}, Formula::disjunction(A("p"), A("q"))), A("r")));
  CHECK(parse_formula("p | q | r") == Formula::disjunction(Formula::disjunction(A("p"), A("q")), A("r")));
}

TEST_CASE("program forms") {
  CHECK(parse_program("give(1,p,2) ; give(2,r,1)") ==
        Program::seq(Program::give("1", "p", "2"), Program::give("2", "r", "1")));
  CHECK(parse_program("skip") == Program::test(Formula::top()));
  CHECK(parse_program("fail") == Program::test(N(Formula::top())));
  CHECK(parse_program("(p)?") == Program::test(A("p")));
  CHECK(parse_program("test(p & q)") == Program::test(conj(A("p"), A("q"))));
  CHECK(parse_program("give(1,p,2) + give(1,q,2) ; skip") ==
        Program::choice(Program::give("1", "p", "2"), Program::seq(Program::give("1", "q", "2"), skip())));
  CHECK(parse_program("(give(1,p,2) + give(1,q,2))*") ==
        Program::star(Program::choice(Program::give("1", "p", "2"), Program::give("1", "q", "2"))));
  CHECK(parse_program("((p)?)") == Program::test(A("p")));
}

TEST_CASE("while expands letter for letter") {
  const Program got = parse_program("while ~dia{j}(f) do (give(i,p,j) + give(i,q,j))");
  const Formula cond = N(Formula::dia({"j"}, A("f")));
  const Program body = Program::choice(Program::give("i", "p", "j"), Program::give("i", "q", "j"));
  // The exit test is the literal negation of the loop condition.
  const Program expected = Program::seq(Program::star(Program::seq(Program::test(cond), body)), Program::test(N(cond)));
  CHECK(got == expected);
  // The double negation in the exit test is equivalent to the plain formula.
  const Signature sig({"i", "j"}, {"f", "p", "q"});
  CHECK(equivalent(N(cond), Formula::dia({"j"}, A("f")), sig));
}

TEST_CASE("if and repeat") {
  const Program a = Program::give("1", "p", "2");
  const Program b = Program::give("2", "p", "1");
  CHECK(parse_program("if p then give(1,p,2) else give(2,p,1)") ==
        Program::choice(Program::seq(Program::test(A("p")), a), Program::seq(Program::test(N(A("p"))), b)));
  CHECK(parse_program("repeat give(1,p,2) until q") ==
        Program::seq(Program::seq(a, Program::star(Program::seq(Program::test(N(A("q"))), a))), Program::test(A("q"))));
}

TEST_CASE("giveall expands over the signature") {
  const Signature sig({"i", "j"}, {"p"});
  const Program got = parse_program("giveall(i)", &sig);
  const Program expected = Program::seq(Program::test(controls("i", A("p"))),
                                        Program::choice(Program::give("i", "p", "i"), Program::give("i", "p", "j")));
  CHECK(got == expected);
  CHECK(parse_program("giveall({i} -> {j})", &sig) == give_program(Coalition{"i"}, Coalition{"j"}, sig));
  CHECK_THROWS_AS(parse_program("giveall(i)"), ParseError);
}

TEST_CASE("second-order control needs a signature") {
  const Signature sig({"i", "j"}, {"p"});
  CHECK(parse_formula("CONTROLS(i, p)", &sig) == second_order_controls("i", A("p"), sig));
  CHECK_THROWS_AS(parse_formula("CONTROLS(i, p)"), ParseError);
}

TEST_CASE("syntactic signature") {
  auto s = signature_of(parse_formula("<give(i,p,j)>true"));
  CHECK(s.vars == std::set<PropId>{"p"});
  CHECK(s.agents == std::set<AgentId>{"i", "j"});
  s = signature_of(Formula::top());
  CHECK(s.vars.empty());
  CHECK(s.agents.empty());
  s = signature_of(parse_formula("dia{1,2}(p & r & ~q)"));
  CHECK(s.vars == std::set<PropId>{"p", "q", "r"});
  CHECK(s.agents == std::set<AgentId>{"1", "2"});
}

TEST_CASE("render examples") {
  CHECK(render(Formula::dia({"1"}, N(A("r")))) == "dia{1}(~r)");
  CHECK(render(Program::seq(Program::give("1", "p", "2"), Program::give("2", "r", "1"))) == "give(1,p,2); give(2,r,1)");
  CHECK(render(Program::star(skip())) == "skip*");
  CHECK(render(parse_formula("controls(1,p)")) == "controls(1,p)");
  CHECK(render(parse_formula("box{1}(~r)")) == "box{1}(~r)");
  CHECK(render(parse_formula("p -> q")) == "~p | q");
}

TEST_CASE("exactly-one expansion") {
  const std::vector<Formula> three{A("p"), A("q"), A("r")};
  const Formula f = exactly_one(three);
  const Formula expected =
      conj(Formula::disjunction(Formula::disjunction(A("p"), A("q")), A("r")),
           conj(conj(N(conj(A("p"), A("q"))), N(conj(A("p"), A("r")))), N(conj(A("q"), A("r")))));
  CHECK(f == expected);
  const std::vector<Formula> one{A("p")};
  CHECK(equivalent(exactly_one(one), A("p"), Signature({"1"}, {"p"})));
}

TEST_CASE("errors carry positions") {
  try {
    parse_formula("p &\n  (q | )");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  CHECK_THROWS_AS(parse_formula("dia{1 p"), ParseError);
  CHECK_THROWS_AS(parse_formula("give"), ParseError);
  CHECK_THROWS_AS(parse_formula("p $ q"), ParseError);
  CHECK_THROWS_AS(parse_program("give(1,p)"), ParseError);
  CHECK_THROWS_AS(parse_program(""), ParseError);
}

TEST_CASE("model file") {
  const DirectModel m = parse_model("agents: 1 2\nvars: p, q, r  # comment\nowns 1: p q\nowns 2: r\ntrue: p q\n");
  CHECK(m.owned_by("1") == std::vector<PropId>{"p", "q"});
  CHECK(m.owned_by("2") == std::vector<PropId>{"r"});
  CHECK(m.value("p"));
  CHECK(m.value("q"));
  CHECK_FALSE(m.value("r"));
  CHECK(parse_model(render_model(m)) == m);

  const DirectModel single = parse_model("agents: a\nvars: p\nowns a: p\ntrue:\n");
  CHECK_FALSE(single.value("p"));
}

TEST_CASE("malformed model files") {
  const auto error_at = [](const char* text, int line) {
    try {
      parse_model(text);
    } catch (const ParseError& e) {
      return e.line() == line;
    }
    return false;
  };
  CHECK(error_at("agents: 1 2\nvars: p\nowns 1: p\nowns 2: p\n", 4));
  CHECK(error_at("agents: 1 2\nvars: p q\nowns 1: p\n", 2));
  CHECK(error_at("agents: 1\nvars: p\nowns 1: p\ntrue: z\n", 4));
  CHECK(error_at("agents:\nvars: p\n", 1));
  CHECK(error_at("agents: 1\nvars:\n", 2));
  CHECK(error_at("agents: 1\nvars: p\nowns 3: p\n", 3));
  CHECK(error_at("agents: 1\nvars: p\nowns 1: p\ncolour: red\n", 4));
  CHECK(error_at("agents: 1\nowns 1: p\n", 2));
}

TEST_CASE("render then parse is the identity on generated trees") {
  const Signature sig({"1", "2", "x"}, {"p", "q", "r"});
  testing::Generator gen(sig, 20261015);
  testing::GenOptions opt;
  opt.depth = 4;
  for (int i = 0; i < 500; ++i) {
    const Formula f = gen.formula(opt);
    INFO(render(f));
    CHECK(parse_formula(render(f)) == f);
  }
  for (int i = 0; i < 200; ++i) {
    const Program p = gen.program(3, opt);
    INFO(render(p));
    CHECK(parse_program(render(p)) == p);
  }
}
