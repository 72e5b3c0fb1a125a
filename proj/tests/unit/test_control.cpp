#include <algorithm>

#include "doctest.h"
#include "dclpc/control.hpp"
#include "dclpc/decision.hpp"
#include "dclpc/semantics.hpp"
#include "dclpc/syntax.hpp"
#include "generators.hpp"

using namespace dclpc;

namespace {

Formula A(const PropId& p) { return Formula::atom(p); }

}  // namespace

TEST_CASE("first-order control of an atom is ownership") {
  const Signature sig({"1", "2", "3"}, {"p", "q"});
  for (const DirectModel& m : enumerate_models(sig)) {
    for (const auto& p : sig.vars()) {
      for (const auto& i : sig.agents()) CHECK(eval(m, controls(i, A(p))) == (m.owner(p) == i));
      const Coalition c{"1", "3"};
      CHECK(eval(m, controls(c, A(p))) == c.count(m.owner(p)) > 0);
      CHECK_FALSE(eval(m, controls(c, Formula::top())));
    }
  }
}

TEST_CASE("give program shape") {
  const Signature sig({"i", "j"}, {"p"});
  const Program expected = Program::seq(Program::test(controls("i", A("p"))),
                                        Program::choice(Program::give("i", "p", "i"), Program::give("i", "p", "j")));
  CHECK(give_program("i", sig) == expected);
  CHECK_THROWS_AS(give_program(Coalition{}, Coalition{"i"}, sig), std::invalid_argument);
}

TEST_CASE("iterated give programs can always stay put") {
  const Signature sig({"1", "2"}, {"p", "q"});
  const Program g = Program::star(give_program(Coalition{"1", "2"}, Coalition{"1"}, sig));
  for (const DirectModel& m : enumerate_models(sig)) CHECK(in_relation(m, m, g));
}

TEST_CASE("a coalition can hand everything to one member") {
  const Signature sig({"1", "2"}, {"p", "q"});
  testing::Generator gen(sig, 12);
  testing::GenOptions opt;
  opt.modal = false;
  opt.programs = false;
  const Coalition c{"1", "2"};
  for (int n = 0; n < 30; ++n) {
    const Formula f = gen.formula(opt);
    for (const auto& i : c) {
      const Formula law =
          iff(Formula::dia(c, f), Formula::dia_prog(Program::star(give_program(c, Coalition{i}, sig)), dia(i, f)));
      CHECK(valid(law, sig));
    }
  }
}

TEST_CASE("second-order control of a control fact") {
  const Signature sig({"1", "2"}, {"p", "q"});
  for (const DirectModel& m : enumerate_models(sig)) {
    for (const auto& i : sig.agents()) {
      for (const auto& j : sig.agents()) {
        for (const auto& p : sig.vars()) {
          CHECK(eval(m, second_order_controls(i, controls(j, A(p)), sig)) == (m.owner(p) == i));
        }
      }
    }
  }
  CHECK(valid(implies(controls("1", A("p")), second_order_controls("1", controls("2", A("p")), sig)), sig));
  CHECK(valid(implies(controls("1", A("p")), Formula::negation(controls("1", controls("2", A("p"))))), sig));
}

TEST_CASE("ordering by giving away") {
  const DirectModel m = parse_model("agents: 1 2\nvars: p q r\nowns 1: p q\nowns 2: r\n");
  const Signature& sig = m.signature();
  const Allocation moved = atomic_transfer(m, "1", "p", "2")->allocation();
  CHECK(geq(sig, m.allocation(), m.allocation(), "1"));
  CHECK(geq(sig, m.allocation(), moved, "1"));
  CHECK_FALSE(geq(sig, moved, m.allocation(), "1"));
}

TEST_CASE("ordering agrees with reachability by the agent's own gives") {
  const Signature sig({"1", "2", "3"}, {"p", "q"});
  for (const auto& i : sig.agents()) {
    const Program g = Program::star(give_program(i, sig));
    for (std::uint64_t a = 0; a < sig.allocation_count(); ++a) {
      const DirectModel m(sig, allocation_at(sig, a), Valuation(0));
      const auto image = program_image(m, g);
      for (std::uint64_t b = 0; b < sig.allocation_count(); ++b) {
        const DirectModel target(sig, allocation_at(sig, b), Valuation(0));
        const bool reachable = std::find(image.begin(), image.end(), target) != image.end();
        CHECK(geq(sig, m.allocation(), target.allocation(), i) == reachable);
      }
    }
  }
}

TEST_CASE("demo scenario for second-order control") {
  const DirectModel m = parse_model("agents: 1 2 3\nvars: p q r\nowns 1: p\nowns 2: q r\ntrue: p r\n");
  const Signature& sig = m.signature();
  const Program gives = Program::star(give_program("1", sig));
  const Formula goal = parse_formula("~p & ~q & r");
  CHECK(eval(m, Formula::dia_prog(gives, dia("1", goal))));
  CHECK(eval(m, second_order_controls("1", goal, sig)));
  CHECK(characterize_second_order(sig, m.allocation(), m.valuation(), "1", goal));
  const Formula delegated = conj(goal, controls("3", A("p")));
  CHECK_FALSE(eval(m, Formula::dia_prog(gives, dia("1", delegated))));
  CHECK_FALSE(eval(m, second_order_controls("1", delegated, sig)));
  CHECK_FALSE(characterize_second_order(sig, m.allocation(), m.valuation(), "1", delegated));
}

TEST_CASE("table characterization matches direct evaluation") {
  const Signature sig({"1", "2"}, {"p", "q"});
  testing::Generator gen(sig, 600);
  for (int n = 0; n < 40; ++n) {
    const Formula f = gen.formula();
    const NormalForm nf = normal_form(f, sig);
    for (const auto& i : sig.agents()) {
      const Formula direct = second_order_controls(i, f, sig);
      for (const DirectModel& m : enumerate_models(sig)) {
        CHECK(characterize_second_order(nf, m.allocation(), m.valuation(), i) == eval(m, direct));
      }
    }
  }
}

TEST_CASE("grand coalition control") {
  const Signature sig({"i", "j"}, {"p", "q"});
  CHECK(grand_coalition_control(A("p"), sig));
  CHECK_FALSE(grand_coalition_control(controls("i", A("p")), sig));
  CHECK_FALSE(grand_coalition_control(conj(A("p"), controls("i", A("p"))), sig));
  CHECK(grand_coalition_control(conj(A("p"), Formula::negation(A("q"))), sig));
}

TEST_CASE("control laws over enumerated signatures") {
  const Signature sig({"i", "j"}, {"p", "q"});
  for (const auto& i : sig.agents()) {
    for (const auto& j : sig.agents()) {
      for (const auto& p : sig.vars()) {
        const Program give = Program::give(i, p, j);
        CHECK(valid(iff(controls(i, A(p)), Formula::dia_prog(give, Formula::top())), sig));
        if (i == j) continue;
        const Formula back = Formula::dia_prog(Program::give(j, p, i), Formula::top());
        CHECK(valid(implies(controls(i, A(p)), conj(Formula::dia_prog(give, back),
                                                     Formula::negation(Formula::dia({i, j}, back)))),
                    sig));
        const Formula forward = Formula::dia_prog(give, Formula::top());
        CHECK(valid(implies(controls(i, A(p)), conj(Formula::negation(Formula::dia_prog(give, forward)),
                                                     Formula::dia({i, j}, forward))),
                    sig));
      }
    }
  }
  testing::Generator gen(sig, 15);
  for (int n = 0; n < 30; ++n) {
    const Formula f = gen.formula();
    for (const auto& i : sig.agents()) {
      CHECK(valid(implies(dia(i, f), Formula::dia_prog(Program::star(give_program(i, sig)), dia(i, f))), sig));
      CHECK(valid(implies(controls(i, f), second_order_controls(i, f, sig)), sig));
    }
    const Coalition c = gen.coalition();
    Coalition d = c;
    d.insert(gen.agent());
    CHECK(valid(implies(Formula::dia(c, f), Formula::dia(d, f)), sig));
  }
}

TEST_CASE("feasible objective formulas") {
  const Signature sig({"i", "j"}, {"p", "q"});
  testing::Generator gen(sig, 16);
  testing::GenOptions opt;
  opt.modal = false;
  opt.programs = false;
  for (int n = 0; n < 40; ++n) {
    const Formula f = gen.formula(opt);
    if (!satisfiable(f, sig)) continue;
    CHECK(valid(Formula::dia({"i", "j"}, f), sig));
    std::vector<Formula> owned;
    for (const auto& p : signature_of(f).vars) owned.push_back(controls(Coalition{"i"}, A(p)));
    if (!owned.empty() && !valid(f, sig)) CHECK(valid(implies(conjoin(owned), controls(Coalition{"i"}, f)), sig));
  }
}
