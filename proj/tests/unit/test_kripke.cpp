#include "doctest.h"
#include "dclpc/kripke.hpp"
#include "dclpc/semantics.hpp"
#include "dclpc/syntax.hpp"
#include "generators.hpp"

using namespace dclpc;

TEST_CASE("pointed evaluation on the reduced scenario") {
  const DirectModel m = parse_model("agents: 1 2\nvars: p q r\nowns 1: p q\nowns 2: r\ntrue: p q\n");
  const PointedKripkeModel pm{m.signature(), m.allocation(), m.valuation()};
  CHECK(eval_kripke(pm, parse_formula("box{1}(~r)")));
  CHECK(eval_kripke(pm, Formula::top()));
  CHECK(eval_kripke(pm, parse_formula("dia{1,2}(p & r & ~q)")));
  CHECK_FALSE(eval_kripke(pm, parse_formula("<give(1,r,2)>true")));
}

TEST_CASE("small cross checks") {
  CHECK(cross_check(Signature({"1"}, {"p"}), Formula::atom("p")));
  CHECK(cross_check(Signature({"i", "j"}, {"p"}), parse_formula("<give(i,p,j)>true <-> controls(i,p)")));
}

TEST_CASE("agreement with the direct evaluator on random formulas") {
  const Signature sig({"1", "2"}, {"p", "q"});
  testing::Generator gen(sig, 2024);
  for (int i = 0; i < 200; ++i) {
    const Formula f = gen.formula();
    INFO(render(f));
    CHECK(cross_check(sig, f));
  }
}

TEST_CASE("the horizontal relation is an equivalence") {
  const Signature sig({"1", "2"}, {"p", "q", "r"});
  for (std::uint64_t a = 0; a < sig.allocation_count(); ++a) {
    const Allocation alloc = allocation_at(sig, a);
    for (const auto& agent : sig.agents()) {
      for (std::uint64_t x = 0; x < 8; ++x) {
        CHECK(horizontally_related(sig, alloc, agent, Valuation(x), Valuation(x)));
        for (std::uint64_t y = 0; y < 8; ++y) {
          const bool xy = horizontally_related(sig, alloc, agent, Valuation(x), Valuation(y));
          CHECK(xy == horizontally_related(sig, alloc, agent, Valuation(y), Valuation(x)));
          for (std::uint64_t z = 0; z < 8; ++z) {
            if (xy && horizontally_related(sig, alloc, agent, Valuation(y), Valuation(z))) {
              CHECK(horizontally_related(sig, alloc, agent, Valuation(x), Valuation(z)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("vertical steps match atomic transfer and keep the world") {
  const Signature sig({"1", "2"}, {"p", "q"});
  for (const DirectModel& m : enumerate_models(sig)) {
    for (const auto& i : sig.agents()) {
      for (const auto& p : sig.vars()) {
        for (const auto& j : sig.agents()) {
          const auto moved = atomic_transfer(m, i, p, j);
          for (std::uint64_t b = 0; b < sig.allocation_count(); ++b) {
            const Allocation target = allocation_at(sig, b);
            CHECK(vertically_related(sig, m.allocation(), target, i, p, j) ==
                  (moved && moved->allocation() == target));
          }
        }
      }
    }
  }
}
