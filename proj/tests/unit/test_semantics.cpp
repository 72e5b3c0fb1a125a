#include "doctest.h"
#include "dclpc/errors.hpp"
#include "dclpc/semantics.hpp"
#include "dclpc/syntax.hpp"
#include "generators.hpp"

using namespace dclpc;

namespace {

DirectModel m0() {
  return parse_model("agents: 1 2\nvars: p q r\nowns 1: p q\nowns 2: r\ntrue: p q\n");
}

bool holds(const DirectModel& m, const char* text) { return eval(m, parse_formula(text, &m.signature())); }

}  // namespace

TEST_CASE("worked examples on the reduced scenario") {
  const DirectModel m = m0();
  CHECK(holds(m, "dia{1,2}(p & r & ~q)"));
  CHECK(holds(m, "box{1}(~r)"));
  CHECK(holds(m, "[give(1,p,2) + give(1,q,2)] dia{2}((p | q) & r)"));
  CHECK_FALSE(holds(m, "<give(1,r,2)>true"));
  CHECK(holds(m, "<give(1,p,2)>true"));
  CHECK(holds(m, "<give(2,r,1)>true"));
}

TEST_CASE("controlling a conjunction without controlling a conjunct") {
  // q is true and owned by 2; agent 1 owns p.
  const DirectModel m = parse_model("agents: 1 2\nvars: p q\nowns 1: p\nowns 2: q\ntrue: q\n");
  CHECK(holds(m, "controls(1, p & q)"));
  CHECK_FALSE(holds(m, "controls(1, q)"));
}

TEST_CASE("empty coalition changes nothing") {
  const Signature sig({"1", "2"}, {"p", "q"});
  testing::Generator gen(sig, 7);
  for (int i = 0; i < 50; ++i) {
    const Formula f = gen.formula();
    const Formula axiom = iff(Formula::dia({}, f), f);
    for (const DirectModel& m : enumerate_models(sig)) CHECK(eval(m, axiom));
  }
}

TEST_CASE("program images") {
  const DirectModel m = m0();
  const auto two = program_image(m, parse_program("give(1,p,2) + give(1,q,2)"));
  REQUIRE(two.size() == 2);
  CHECK(two[0].owned_by("1") == std::vector<PropId>{"q"});
  CHECK(two[1].owned_by("1") == std::vector<PropId>{"p"});
  CHECK(two[1].owned_by("2") == std::vector<PropId>{"q", "r"});

  const auto guarded = program_image(m, parse_program("(p)?; give(1,p,2)"));
  REQUIRE(guarded.size() == 1);
  CHECK(guarded[0] == *atomic_transfer(m, "1", "p", "2"));

  CHECK(program_image(m, parse_program("skip*")) == std::vector<DirectModel>{m});
  CHECK(program_image(m, parse_program("give(1,r,2)")).empty());
  CHECK(program_image(m, parse_program("fail")).empty());
}

TEST_CASE("iterated give-all redistributes only the giver's variables") {
  const DirectModel m = m0();
  const auto image = program_image(m, parse_program("giveall(1)*", &m.signature()));
  // p and q may each end with 1 or 2; r stays with 2.
  CHECK(image.size() == 4);
  for (const auto& r : image) {
    CHECK(r.valuation() == m.valuation());
    CHECK(r.owner("r") == "2");
  }
  CHECK(image == testing::oracle_image(m, parse_program("giveall(1)*", &m.signature())));
}

TEST_CASE("membership") {
  const DirectModel m = m0();
  CHECK(in_relation(m, *atomic_transfer(m, "1", "p", "2"), Program::give("1", "p", "2")));
  CHECK_FALSE(in_relation(m, m, Program::give("1", "r", "2")));
  CHECK(in_relation(m, m, parse_program("(give(1,p,2) + give(2,r,1))*")));
  const DirectModel other = parse_model("agents: 1\nvars: p q r\nowns 1: p q r\n");
  CHECK_THROWS_AS(in_relation(m, other, skip()), SignatureError);
}

TEST_CASE("identifiers outside the signature") {
  const DirectModel m = m0();
  CHECK_THROWS_AS(eval(m, Formula::atom("s")), SignatureError);
  CHECK_THROWS_AS(eval(m, Formula::dia({"3"}, Formula::top())), SignatureError);
  CHECK_THROWS_AS(program_image(m, Program::give("1", "s", "2")), SignatureError);
}

TEST_CASE("image properties over random programs") {
  const Signature sig({"1", "2"}, {"p", "q"});
  testing::Generator gen(sig, 99);
  for (int i = 0; i < 150; ++i) {
    const Program prog = gen.program(3);
    INFO(render(prog));
    for (const DirectModel& m : enumerate_models(sig)) {
      const auto image = program_image(m, prog);
      CHECK(image == testing::oracle_image(m, prog));
      for (const auto& r : image) CHECK(r.valuation() == m.valuation());
      CHECK(in_relation(m, m, Program::star(prog)));
    }
  }
}

TEST_CASE("atomic give is functional and guarded") {
  const Signature sig({"1", "2", "3"}, {"p", "q"});
  for (const DirectModel& m : enumerate_models(sig)) {
    for (const auto& i : sig.agents()) {
      for (const auto& p : sig.vars()) {
        for (const auto& j : sig.agents()) {
          const auto image = program_image(m, Program::give(i, p, j));
          CHECK(image.size() == (m.owner(p) == i ? 1U : 0U));
        }
      }
    }
  }
}

TEST_CASE("iteration converges within the number of allocations") {
  const Signature sig({"1", "2"}, {"p", "q"});
  testing::Generator gen(sig, 5);
  for (int i = 0; i < 100; ++i) {
    const Program prog = gen.program(2);
    for (const DirectModel& m : enumerate_models(sig)) CHECK(star_depth(m, prog) <= 4);
  }
  const DirectModel m = parse_model("agents: 1 2\nvars: p q\nowns 1: p q\n");
  CHECK(star_depth(m, parse_program("give(1,p,2) + give(1,q,2)")) == 2);
  CHECK(star_depth(m, skip()) == 0);
}
