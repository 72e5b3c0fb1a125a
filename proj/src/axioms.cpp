#include "dclpc/axioms.hpp"

#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "dclpc/control.hpp"
#include "dclpc/semantics.hpp"
#include "dclpc/syntax.hpp"

namespace dclpc {

bool AxiomReport::sound() const {
  for (const auto& s : schemes) {
    if (!s.counterexamples.empty()) return false;
  }
  return true;
}

std::size_t AxiomReport::instance_count() const {
  std::size_t n = 0;
  for (const auto& s : schemes) n += s.instances;
  return n;
}

Formula allocation_axiom(const Signature& sig) {
  std::vector<Formula> per_var;
  for (const PropId& p : sig.vars()) {
    std::vector<Formula> owners;
    for (const AgentId& i : sig.agents()) owners.push_back(controls(i, Formula::atom(p)));
    per_var.push_back(exactly_one(owners));
  }
  return conjoin(per_var);
}

Signature numbered_signature(std::size_t agents, std::size_t vars) {
  std::vector<AgentId> a;
  for (std::size_t i = 1; i <= agents; ++i) a.push_back(std::to_string(i));
  std::vector<PropId> v;
  for (std::size_t i = 1; i <= vars; ++i) v.push_back("p" + std::to_string(i));
  return Signature(std::move(a), std::move(v));
}

namespace {

enum class Dim { kFormula, kObjective, kProgram, kCoalition, kAgent, kVar, kPolarity };

// Seeded instantiation material for one signature.
class Pools {
 public:
  Pools(const Signature& sig, const AxiomBudget& budget) : sig_(sig), rng_(budget.seed) {
    agents_.assign(sig.agents().begin(), sig.agents().end());
    vars_.assign(sig.vars().begin(), sig.vars().end());
    const std::size_t n = agents_.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Coalition c;
      for (std::size_t i = 0; i < n; ++i) {
        if ((m >> i) & 1U) c.insert(agents_[i]);
      }
      coalitions_.push_back(std::move(c));
    }
    for (const auto& i : agents_) {
      for (const auto& p : vars_) {
        for (const auto& j : agents_) programs_.push_back(Program::give(i, p, j));
      }
    }
    fill_formulas(budget.max_depth);
    programs_.push_back(skip());
    programs_.push_back(Program::test(Formula::atom(vars_.front())));
    programs_.push_back(Program::test(controls(agents_.front(), Formula::atom(vars_.back()))));
    const Program first = programs_.front();
    const Program last = programs_[agents_.size() * vars_.size() * agents_.size() - 1];
    programs_.push_back(Program::choice(first, last));
    programs_.push_back(Program::seq(first, last));
    programs_.push_back(Program::star(Program::choice(first, last)));
    programs_.push_back(give_program(agents_.front(), sig));
    programs_.push_back(Program::star(give_program(agents_.back(), sig)));
  }

  std::size_t size(Dim d) const {
    switch (d) {
      case Dim::kFormula:
        return formulas_.size();
      case Dim::kObjective:
        return objective_.size();
      case Dim::kProgram:
        return programs_.size();
      case Dim::kCoalition:
        return coalitions_.size();
      case Dim::kAgent:
        return agents_.size();
      case Dim::kVar:
        return vars_.size();
      case Dim::kPolarity:
        return 2;
    }
    return 0;
  }

  const Formula& formula(std::size_t i) const { return formulas_[i]; }
  const Formula& objective(std::size_t i) const { return objective_[i]; }
  const Program& program(std::size_t i) const { return programs_[i]; }
  const Coalition& coalition(std::size_t i) const { return coalitions_[i]; }
  const AgentId& agent(std::size_t i) const { return agents_[i]; }
  const PropId& var(std::size_t i) const { return vars_[i]; }
  const Signature& sig() const { return sig_; }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Formula random_formula(int depth, bool objective_only) {
    if (depth == 0 || pick(5) == 0) {
      if (pick(8) == 0) return Formula::top();
      return Formula::atom(vars_[pick(vars_.size())]);
    }
    const std::size_t ops = objective_only ? 4 : 9;
    const auto sub = [&] { return random_formula(depth - 1, objective_only); };
    switch (pick(ops)) {
      case 0:
        return Formula::negation(sub());
      case 1:
        return Formula::disjunction(sub(), sub());
      case 2:
        return conj(sub(), sub());
      case 3:
        return implies(sub(), sub());
      case 4:
        return Formula::dia(coalitions_[pick(coalitions_.size())], sub());
      case 5:
        return box(coalitions_[pick(coalitions_.size())], sub());
      case 6:
        return controls(agents_[pick(agents_.size())], Formula::atom(vars_[pick(vars_.size())]));
      case 7:
        return Formula::dia_prog(programs_[pick(programs_.size())], sub());
      default:
        return box_prog(programs_[pick(programs_.size())], sub());
    }
  }

  void fill_formulas(int depth) {
    std::set<std::string> seen;
    const auto add = [&](std::vector<Formula>& pool, Formula f) {
      if (seen.insert(render(f)).second) pool.push_back(std::move(f));
    };
    for (const auto& p : vars_) {
      add(formulas_, Formula::atom(p));
      add(formulas_, Formula::negation(Formula::atom(p)));
    }
    add(formulas_, Formula::top());
    add(formulas_, bottom());
    // The objective pool is a subset of the general one plus its own extras.
    objective_ = formulas_;
    for (int tries = 0; objective_.size() < 14 && tries < 400; ++tries) add(objective_, random_formula(depth, true));
    for (int tries = 0; formulas_.size() < 24 && tries < 400; ++tries) add(formulas_, random_formula(depth, false));
  }

  Signature sig_;
  std::mt19937_64 rng_;
  std::vector<AgentId> agents_;
  std::vector<PropId> vars_;
  std::vector<Coalition> coalitions_;
  std::vector<Program> programs_;
  std::vector<Formula> formulas_;
  std::vector<Formula> objective_;
};

// Chosen indices for one instance, read in declaration order.
class Choice {
 public:
  Choice(const Pools& pools, std::vector<std::size_t> idx) : pools_(pools), idx_(std::move(idx)) {}
  const Formula& formula(std::size_t slot) const { return pools_.formula(idx_.at(slot)); }
  const Formula& objective(std::size_t slot) const { return pools_.objective(idx_.at(slot)); }
  const Program& program(std::size_t slot) const { return pools_.program(idx_.at(slot)); }
  const Coalition& coalition(std::size_t slot) const { return pools_.coalition(idx_.at(slot)); }
  const AgentId& agent(std::size_t slot) const { return pools_.agent(idx_.at(slot)); }
  const PropId& var(std::size_t slot) const { return pools_.var(idx_.at(slot)); }
  bool positive(std::size_t slot) const { return idx_.at(slot) == 0; }
  /// Literal over the variable in `var_slot` with the polarity in `pol_slot`.
  Formula literal(std::size_t var_slot, std::size_t pol_slot) const {
    Formula a = Formula::atom(var(var_slot));
    return positive(pol_slot) ? a : Formula::negation(a);
  }
  const Signature& sig() const { return pools_.sig(); }

 private:
  const Pools& pools_;
  std::vector<std::size_t> idx_;
};

struct Scheme {
  std::string name;
  std::string group;
  std::vector<Dim> dims;
  // Returns nothing when a side condition rules the instance out.
  std::function<std::optional<Formula>(const Choice&)> build;
};

Formula give_top(const AgentId& i, const PropId& p, const AgentId& j) {
  return Formula::dia_prog(Program::give(i, p, j), Formula::top());
}
Formula atom(const PropId& p) { return Formula::atom(p); }
Formula controls_atom(const AgentId& i, const PropId& p) { return controls(i, Formula::atom(p)); }
Formula neg(Formula f) { return Formula::negation(std::move(f)); }

std::vector<Scheme> sound_schemes() {
  using D = Dim;
  const std::string prop = "propositional";
  const std::string dyn = "dynamic";
  const std::string ctl = "control";
  const std::string tc = "transfer and control";
  const std::string thm = "derived";
  std::vector<Scheme> s;

  // Classical tautology schemes over objective formulas.
  s.push_back({"Prop (excluded middle)", prop, {D::kObjective},
               [](const Choice& c) -> std::optional<Formula> {
                 return Formula::disjunction(c.objective(0), neg(c.objective(0)));
               }});
  s.push_back({"Prop (weakening)", prop, {D::kObjective, D::kObjective},
               [](const Choice& c) -> std::optional<Formula> {
                 return implies(c.objective(0), implies(c.objective(1), c.objective(0)));
               }});
  s.push_back({"Prop (distribution)", prop, {D::kObjective, D::kObjective, D::kObjective},
               [](const Choice& c) -> std::optional<Formula> {
                 const Formula& a = c.objective(0);
                 const Formula& b = c.objective(1);
                 const Formula& d = c.objective(2);
                 return implies(implies(a, implies(b, d)), implies(implies(a, b), implies(a, d)));
               }});
  s.push_back({"Prop (contraposition)", prop, {D::kObjective, D::kObjective},
               [](const Choice& c) -> std::optional<Formula> {
                 const Formula& a = c.objective(0);
                 const Formula& b = c.objective(1);
                 return implies(implies(neg(a), neg(b)), implies(b, a));
               }});

  s.push_back({"K(tau)", dyn, {D::kProgram, D::kFormula, D::kFormula},
               [](const Choice& c) -> std::optional<Formula> {
                 const Program& t = c.program(0);
                 const Formula& a = c.formula(1);
                 const Formula& b = c.formula(2);
                 return implies(box_prog(t, implies(a, b)), implies(box_prog(t, a), box_prog(t, b)));
               }});
  s.push_back({"union(tau)", dyn, {D::kProgram, D::kProgram, D::kFormula},
               [](const Choice& c) -> std::optional<Formula> {
                 const Program& t = c.program(0);
                 const Program& u = c.program(1);
                 const Formula& a = c.formula(2);
                 return iff(box_prog(Program::choice(t, u), a), conj(box_prog(t, a), box_prog(u, a)));
               }});
  s.push_back({"comp(tau)", dyn, {D::kProgram, D::kProgram, D::kFormula},
               [](const Choice& c) -> std::optional<Formula> {
                 const Program& t = c.program(0);
                 const Program& u = c.program(1);
                 const Formula& a = c.formula(2);
                 return iff(box_prog(Program::seq(t, u), a), box_prog(t, box_prog(u, a)));
               }});
  s.push_back({"test(tau)", dyn, {D::kFormula, D::kFormula},
               [](const Choice& c) -> std::optional<Formula> {
                 const Formula& a = c.formula(0);
                 const Formula& b = c.formula(1);
                 return iff(box_prog(Program::test(a), b), implies(a, b));
               }});
  s.push_back({"mix(tau)", dyn, {D::kProgram, D::kFormula},
               [](const Choice& c) -> std::optional<Formula> {
                 const Program& t = c.program(0);
                 const Formula& a = c.formula(1);
                 return iff(conj(a, box_prog(t, box_prog(Program::star(t), a))), box_prog(Program::star(t), a));
               }});
  s.push_back({"ind(tau)", dyn, {D::kProgram, D::kFormula},
               [](const Choice& c) -> std::optional<Formula> {
                 const Program& t = c.program(0);
                 const Formula& a = c.formula(1);
                 const Program st = Program::star(t);
                 return implies(conj(a, box_prog(st, implies(a, box_prog(t, a)))), box_prog(st, a));
               }});

  s.push_back({"K(i)", ctl, {D::kAgent, D::kFormula, D::kFormula},
               [](const Choice& c) -> std::optional<Formula> {
                 const AgentId& i = c.agent(0);
                 const Formula& a = c.formula(1);
                 const Formula& b = c.formula(2);
                 return implies(box(i, implies(a, b)), implies(box(i, a), box(i, b)));
               }});
  s.push_back({"T(i)", ctl, {D::kAgent, D::kFormula},
               [](const Choice& c) -> std::optional<Formula> { return implies(box(c.agent(0), c.formula(1)), c.formula(1)); }});
  s.push_back({"B(i)", ctl, {D::kAgent, D::kFormula},
               [](const Choice& c) -> std::optional<Formula> {
                 const AgentId& i = c.agent(0);
                 return implies(c.formula(1), box(i, dia(i, c.formula(1))));
               }});
  s.push_back({"empty", ctl, {D::kFormula},
               [](const Choice& c) -> std::optional<Formula> { return iff(box(Coalition{}, c.formula(0)), c.formula(0)); }});
  s.push_back({"control(i)", ctl, {D::kAgent, D::kVar},
               [](const Choice& c) -> std::optional<Formula> {
                 const AgentId& i = c.agent(0);
                 const PropId& p = c.var(1);
                 return iff(controls_atom(i, p), conj(dia(i, atom(p)), dia(i, neg(atom(p)))));
               }});
  s.push_back({"allocation", ctl, {},
               [](const Choice& c) -> std::optional<Formula> { return allocation_axiom(c.sig()); }});
  s.push_back({"effect(i)", ctl, {D::kAgent, D::kVar, D::kPolarity, D::kObjective},
               [](const Choice& c) -> std::optional<Formula> {
                 const AgentId& i = c.agent(0);
                 const PropId& p = c.var(1);
                 const Formula& psi = c.objective(3);
                 if (signature_of(psi).vars.count(p)) return std::nullopt;
                 const Formula lit = c.literal(1, 2);
                 return implies(conj(conj(psi, lit), controls_atom(i, p)), dia(i, conj(psi, neg(lit))));
               }});
  s.push_back({"Comp-union", ctl, {D::kCoalition, D::kCoalition, D::kFormula},
               [](const Choice& c) -> std::optional<Formula> {
                 Coalition both = c.coalition(0);
                 both.insert(c.coalition(1).begin(), c.coalition(1).end());
                 return iff(box(c.coalition(0), box(c.coalition(1), c.formula(2))), box(both, c.formula(2)));
               }});

  s.push_back({"atomic permanence", tc, {D::kAgent, D::kVar, D::kAgent, D::kVar},
               [](const Choice& c) -> std::optional<Formula> {
                 const AgentId& i = c.agent(0);
                 const PropId& p = c.var(1);
                 const AgentId& j = c.agent(2);
                 const Formula q = atom(c.var(3));
                 return implies(give_top(i, p, j), iff(box_prog(Program::give(i, p, j), q), q));
               }});
  s.push_back({"persistence1(control)", tc, {D::kAgent, D::kVar, D::kAgent},
               [](const Choice& c) -> std::optional<Formula> {
                 const Formula ctl_ip = controls_atom(c.agent(0), c.var(1));
                 return implies(ctl_ip, box(c.agent(2), ctl_ip));
               }});
  s.push_back({"persistence2(control)", tc, {D::kAgent, D::kVar, D::kAgent, D::kVar, D::kAgent},
               [](const Choice& c) -> std::optional<Formula> {
                 const AgentId& i = c.agent(0);
                 const PropId& p = c.var(1);
                 const AgentId& j = c.agent(2);
                 const PropId& q = c.var(3);
                 const AgentId& h = c.agent(4);
                 if (i == j && p == q) return std::nullopt;
                 const Formula ctl_ip = controls_atom(i, p);
                 return implies(ctl_ip, box_prog(Program::give(j, q, h), ctl_ip));
               }});
  s.push_back({"precondition(transfer)", tc, {D::kAgent, D::kVar, D::kAgent},
               [](const Choice& c) -> std::optional<Formula> {
                 return implies(give_top(c.agent(0), c.var(1), c.agent(2)), controls_atom(c.agent(0), c.var(1)));
               }});
  s.push_back({"transfer", tc, {D::kAgent, D::kVar, D::kAgent},
               [](const Choice& c) -> std::optional<Formula> {
                 const AgentId& i = c.agent(0);
                 const PropId& p = c.var(1);
                 const AgentId& j = c.agent(2);
                 return implies(controls_atom(i, p), Formula::dia_prog(Program::give(i, p, j), controls_atom(j, p)));
               }});
  s.push_back({"func", tc, {D::kAgent, D::kVar, D::kAgent, D::kFormula},
               [](const Choice& c) -> std::optional<Formula> {
                 const Program g = Program::give(c.agent(0), c.var(1), c.agent(2));
                 const Formula& a = c.formula(3);
                 return implies(controls_atom(c.agent(0), c.var(1)), iff(Formula::dia_prog(g, a), box_prog(g, a)));
               }});

  s.push_back({"at-least(control)", thm, {D::kAgent, D::kVar, D::kPolarity},
               [](const Choice& c) -> std::optional<Formula> {
                 const Formula lit = c.literal(1, 2);
                 return implies(conj(lit, controls_atom(c.agent(0), c.var(1))), dia(c.agent(0), neg(lit)));
               }});
  s.push_back({"at-most(control)", thm, {D::kAgent, D::kVar, D::kPolarity, D::kAgent},
               [](const Choice& c) -> std::optional<Formula> {
                 const AgentId& i = c.agent(0);
                 const AgentId& j = c.agent(3);
                 if (i == j) return std::nullopt;
                 const Formula lit = c.literal(1, 2);
                 return implies(lit, implies(dia(i, neg(lit)), box(j, lit)));
               }});
  s.push_back({"non-effect(i)", thm, {D::kAgent, D::kVar, D::kPolarity},
               [](const Choice& c) -> std::optional<Formula> {
                 const AgentId& i = c.agent(0);
                 const Formula lit = c.literal(1, 2);
                 return implies(conj(dia(i, lit), neg(controls_atom(i, c.var(1)))), box(i, lit));
               }});
  s.push_back({"persistence(non-control)", thm, {D::kAgent, D::kVar, D::kAgent},
               [](const Choice& c) -> std::optional<Formula> {
                 const Formula lacks = neg(controls_atom(c.agent(0), c.var(1)));
                 return iff(lacks, box(c.agent(2), lacks));
               }});
  s.push_back({"objective permanence(give)", thm, {D::kAgent, D::kVar, D::kAgent, D::kObjective},
               [](const Choice& c) -> std::optional<Formula> {
                 const Program g = Program::give(c.agent(0), c.var(1), c.agent(2));
                 const Formula& a = c.objective(3);
                 return implies(give_top(c.agent(0), c.var(1), c.agent(2)), iff(a, box_prog(g, a)));
               }});
  s.push_back({"objective permanence", thm, {D::kProgram, D::kObjective},
               [](const Choice& c) -> std::optional<Formula> {
                 const Program& t = c.program(0);
                 const Formula& a = c.objective(1);
                 return implies(Formula::dia_prog(t, Formula::top()), iff(a, box_prog(t, a)));
               }});
  s.push_back({"inverse", thm, {D::kAgent, D::kVar, D::kAgent, D::kFormula},
               [](const Choice& c) -> std::optional<Formula> {
                 const AgentId& i = c.agent(0);
                 const PropId& p = c.var(1);
                 const AgentId& j = c.agent(2);
                 const Program there_and_back = Program::seq(Program::give(i, p, j), Program::give(j, p, i));
                 return implies(controls_atom(i, p), iff(c.formula(3), box_prog(there_and_back, c.formula(3))));
               }});
  s.push_back({"reverse", thm, {D::kAgent, D::kVar, D::kAgent, D::kAgent, D::kVar, D::kAgent, D::kFormula},
               [](const Choice& c) -> std::optional<Formula> {
                 const AgentId& i = c.agent(0);
                 const PropId& p = c.var(1);
                 const AgentId& j = c.agent(2);
                 const AgentId& k = c.agent(3);
                 const PropId& q = c.var(4);
                 const AgentId& h = c.agent(5);
                 if (!((j != k && h != i) || p != q)) return std::nullopt;
                 const Program first = Program::give(i, p, j);
                 const Program second = Program::give(k, q, h);
                 const Formula& a = c.formula(6);
                 return iff(box_prog(first, box_prog(second, a)), box_prog(second, box_prog(first, a)));
               }});
  return s;
}

std::vector<Scheme> broken_schemes() {
  using D = Dim;
  std::vector<Scheme> s;
  s.push_back({"transfer without guard", "mutation", {D::kAgent, D::kVar, D::kAgent},
               [](const Choice& c) -> std::optional<Formula> {
                 return Formula::dia_prog(Program::give(c.agent(0), c.var(1), c.agent(2)),
                                          controls_atom(c.agent(2), c.var(1)));
               }});
  s.push_back({"func without guard", "mutation", {D::kAgent, D::kVar, D::kAgent, D::kFormula},
               [](const Choice& c) -> std::optional<Formula> {
                 const Program g = Program::give(c.agent(0), c.var(1), c.agent(2));
                 return iff(Formula::dia_prog(g, c.formula(3)), box_prog(g, c.formula(3)));
               }});
  return s;
}

std::optional<DirectModel> first_failure(const Formula& f, const Signature& sig) {
  for (const DirectModel& m : enumerate_models(sig)) {
    if (!eval(m, f)) return m;
  }
  return std::nullopt;
}

SchemeReport check_scheme(const Scheme& scheme, Pools& pools, const AxiomBudget& budget) {
  SchemeReport report;
  report.name = scheme.name;
  report.group = scheme.group;
  std::size_t space = 1;
  for (Dim d : scheme.dims) space *= pools.size(d);
  report.space = space;

  std::vector<std::uint64_t> positions;
  if (space <= budget.max_instances) {
    for (std::uint64_t i = 0; i < space; ++i) positions.push_back(i);
  } else {
    report.truncated = true;
    std::set<std::uint64_t> picked;
    std::uniform_int_distribution<std::uint64_t> dist(0, space - 1);
    while (picked.size() < budget.max_instances) picked.insert(dist(pools.rng()));
    positions.assign(picked.begin(), picked.end());
  }

  for (std::uint64_t pos : positions) {
    std::vector<std::size_t> idx;
    std::uint64_t rest = pos;
    for (Dim d : scheme.dims) {
      idx.push_back(static_cast<std::size_t>(rest % pools.size(d)));
      rest /= pools.size(d);
    }
    const std::optional<Formula> instance = scheme.build(Choice(pools, std::move(idx)));
    if (!instance) continue;
    ++report.instances;
    if (auto bad = first_failure(*instance, pools.sig())) report.counterexamples.push_back({*instance, *bad});
  }
  return report;
}

AxiomReport run_schemes(const std::vector<Scheme>& schemes, const Signature& sig, const AxiomBudget& budget) {
  Pools pools(sig, budget);
  AxiomReport report;
  for (const Scheme& s : schemes) report.schemes.push_back(check_scheme(s, pools, budget));
  return report;
}

}  // namespace

AxiomReport axiom_suite(const Signature& sig, const AxiomBudget& budget) {
  return run_schemes(sound_schemes(), sig, budget);
}

AxiomReport mutation_suite(const Signature& sig, const AxiomBudget& budget) {
  return run_schemes(broken_schemes(), sig, budget);
}

}  // namespace dclpc
