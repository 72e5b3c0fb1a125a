#include "doctest.h"
#include "dclpc/errors.hpp"
#include "dclpc/normal_form.hpp"
#include "dclpc/semantics.hpp"
#include "dclpc/syntax.hpp"
#include "generators.hpp"

using namespace dclpc;
using boost::multiprecision::cpp_int;

TEST_CASE("worked transfer example gives a two-branch table") {
  const Signature sig({"i", "j"}, {"p", "q", "r"});
  const NormalForm nf = normal_form(parse_formula("<give(i,p,j)>(q & dia{j}(p & r))"), sig);
  const NormalForm q = normal_form(Formula::atom("q"), sig);
  const NormalForm qr = normal_form(parse_formula("q & r"), sig);
  const std::size_t p = 0;
  const std::size_t r = 2;
  const std::size_t i = 0;
  const std::size_t j = 1;
  for (std::uint64_t a = 0; a < sig.allocation_count(); ++a) {
    const Allocation alloc = allocation_at(sig, a);
    if (alloc.owner(p) != i) {
      CHECK(nf.table[a].empty());
    } else if (alloc.owner(r) == j) {
      CHECK(nf.table[a] == q.table[a]);
    } else {
      CHECK(nf.table[a] == qr.table[a]);
    }
  }
}

TEST_CASE("top and negation") {
  const Signature sig({"1", "2"}, {"p", "q"});
  for (const auto& entry : normal_form(Formula::top(), sig).table) CHECK(entry.full());
  testing::Generator gen(sig, 31);
  for (int n = 0; n < 100; ++n) {
    const Formula f = gen.formula();
    const Formula g = gen.formula();
    const NormalForm nf = normal_form(f, sig);
    const NormalForm neg = normal_form(Formula::negation(f), sig);
    const NormalForm other = normal_form(g, sig);
    const NormalForm disj = normal_form(Formula::disjunction(f, g), sig);
    for (std::size_t a = 0; a < nf.table.size(); ++a) {
      CHECK(neg.table[a] == nf.table[a].complement());
      CHECK(disj.table[a] == (nf.table[a] | other.table[a]));
    }
  }
}

TEST_CASE("coalition modality closes each entry under changes to the coalition's variables") {
  const Signature sig({"1", "2"}, {"p", "q", "r"});
  testing::Generator gen(sig, 77);
  for (int n = 0; n < 60; ++n) {
    const Formula f = gen.formula();
    const Coalition c = gen.coalition();
    const NormalForm inner = normal_form(f, sig);
    const NormalForm outer = normal_form(Formula::dia(c, f), sig);
    for (std::uint64_t a = 0; a < sig.allocation_count(); ++a) {
      const Allocation alloc = allocation_at(sig, a);
      const std::uint64_t mask = alloc.owned_mask_of(sig.agent_mask(c));
      for (std::uint64_t w = 0; w < sig.valuation_count(); ++w) {
        bool reachable = false;
        for (Valuation v : inner.table[a].members()) reachable = reachable || v.same_modulo(Valuation(w), mask);
        CHECK(outer.table[a].contains(Valuation(w)) == reachable);
      }
    }
  }
}

TEST_CASE("reconstruction of a single atom") {
  const Signature sig({"1"}, {"p"});
  const Formula f = nf_to_formula(normal_form(Formula::atom("p"), sig));
  CHECK(render(f) == "p & controls(1,p)");
  for (const DirectModel& m : enumerate_models(sig)) CHECK(eval(m, f) == m.value("p"));
}

TEST_CASE("full and empty tables") {
  const Signature sig({"1", "2"}, {"p"});
  const Formula all = nf_to_formula(normal_form(Formula::top(), sig));
  for (const DirectModel& m : enumerate_models(sig)) CHECK(eval(m, all));
  CHECK(nf_to_formula(normal_form(bottom(), sig)) == bottom());
}

TEST_CASE("round trip on generated formulas") {
  const Signature sig({"1", "2"}, {"p", "q"});
  testing::Generator gen(sig, 4242);
  for (int n = 0; n < 200; ++n) {
    const Formula f = gen.formula();
    INFO(render(f));
    CHECK(equivalent(f, nf_to_formula(normal_form(f, sig)), sig));
  }
}

TEST_CASE("equivalences") {
  const Signature sig({"i", "j"}, {"p", "q", "r"});
  // Relative to an allocation where i owns p and q: the two sides agree.
  const Formula context = parse_formula("controls(i,p) & controls(i,q) & controls(j,r)");
  CHECK(equivalent(conj(context, parse_formula("dia{i}(~p & r)")),
                   conj(context, parse_formula("(p & r) | (~p & r)")), sig));
  const Formula f = parse_formula("dia{i}(p | q)");
  CHECK(equivalent(f, f, sig));
  // Facts about control pass through a coalition modality.
  const Formula zeta = parse_formula("controls(i,p) & ~controls(j,q)");
  testing::Generator gen(sig, 8);
  for (int n = 0; n < 40; ++n) {
    const Formula g = gen.formula();
    const Coalition c = gen.coalition();
    CHECK(equivalent(Formula::dia(c, conj(g, zeta)), conj(zeta, Formula::dia(c, g)), sig));
  }
  CHECK_FALSE(equivalent(Formula::atom("p"), Formula::atom("q"), sig));
}

TEST_CASE("description counts") {
  auto c = description_counts(1, 1);
  CHECK(c.valuations == 2);
  CHECK(c.allocations == 1);
  CHECK(c.models == 2);
  CHECK(c.propositions == 4);
  c = description_counts(2, 2);
  CHECK(c.valuations == 4);
  CHECK(c.allocations == 4);
  CHECK(c.models == 16);
  CHECK(c.propositions == 65536);
  c = description_counts(2, 3);
  CHECK(c.valuations == 8);
  CHECK(c.allocations == 8);
  CHECK(c.models == 64);
  // 2^64 by repeated squaring: 2 -> 4 -> 16 -> 256 -> 65536 -> 2^32 -> 2^64.
  cpp_int sq = 2;
  for (int s = 0; s < 6; ++s) sq *= sq;
  CHECK(c.propositions == sq);
  CHECK_THROWS_AS(description_counts(4, 8), BudgetError);
  CHECK_THROWS_AS(description_counts(0, 1), std::invalid_argument);
}

TEST_CASE("distinct tables never exceed the counting bound") {
  const Signature sig({"1"}, {"p"});
  testing::Generator gen(sig, 3);
  std::set<std::vector<std::uint64_t>> seen;
  for (int n = 0; n < 300; ++n) {
    const NormalForm nf = normal_form(gen.formula(), sig);
    std::vector<std::uint64_t> key;
    for (const auto& e : nf.table) {
      for (Valuation v : e.members()) key.push_back(v.bits());
      key.push_back(99);
    }
    seen.insert(key);
  }
  CHECK(cpp_int(seen.size()) <= description_counts(1, 1).propositions);
}
