#include "dclpc/control.hpp"

#include <stdexcept>

#include "dclpc/errors.hpp"

namespace dclpc {

Program give_program(const Coalition& from, const Coalition& to, const Signature& sig) {
  if (from.empty()) throw std::invalid_argument("give program needs a non-empty giving coalition");
  sig.agent_mask(from);
  sig.agent_mask(to);
  std::vector<Program> per_giver;
  for (const AgentId& i : from) {
    Coalition receivers = to;
    receivers.insert(i);
    std::vector<Program> per_var;
    for (const PropId& p : sig.vars()) {
      std::vector<Program> gives;
      for (const AgentId& j : receivers) gives.push_back(Program::give(i, p, j));
      per_var.push_back(Program::seq(Program::test(controls(i, Formula::atom(p))), choose(gives)));
    }
    per_giver.push_back(choose(per_var));
  }
  return choose(per_giver);
}

Program give_program(const AgentId& agent, const Signature& sig) {
  return give_program(Coalition{agent}, Coalition(sig.agents().begin(), sig.agents().end()), sig);
}

Formula second_order_controls(const AgentId& agent, const Formula& f, const Signature& sig) {
  const Program iterate = Program::star(give_program(agent, sig));
  return conj(Formula::dia_prog(iterate, dia(agent, f)), Formula::dia_prog(iterate, dia(agent, Formula::negation(f))));
}

bool geq(const Signature& sig, const Allocation& from, const Allocation& to, const AgentId& agent) {
  if (from.var_count() != sig.var_count() || to.var_count() != sig.var_count()) {
    throw SignatureError("allocation does not match the signature");
  }
  const std::size_t i = sig.agent_index(agent);
  if ((to.owned_mask(i) & ~from.owned_mask(i)) != 0) return false;
  for (std::size_t j = 0; j < sig.agent_count(); ++j) {
    if (j == i) continue;
    if ((from.owned_mask(j) & ~to.owned_mask(j)) != 0) return false;
  }
  return true;
}

namespace {

// Some valuation of `entry` agrees with `world` outside `mask`.
bool reachable_within(const ValuationSet& entry, Valuation world, std::uint64_t mask) {
  for (Valuation v : entry.members()) {
    if (v.same_modulo(world, mask)) return true;
  }
  return false;
}

}  // namespace

bool characterize_second_order(const NormalForm& nf, const Allocation& alloc, Valuation world, const AgentId& agent) {
  const Signature& sig = nf.sig;
  const std::size_t i = sig.agent_index(agent);
  bool can_make_true = false;
  bool can_make_false = false;
  for (std::uint64_t a = 0; a < nf.table.size() && !(can_make_true && can_make_false); ++a) {
    const Allocation below = allocation_at(sig, a);
    if (!geq(sig, alloc, below, agent)) continue;
    const std::uint64_t mask = below.owned_mask(i);
    if (!can_make_true) can_make_true = reachable_within(nf.table[a], world, mask);
    if (!can_make_false) can_make_false = reachable_within(nf.table[a].complement(), world, mask);
  }
  return can_make_true && can_make_false;
}

bool characterize_second_order(const Signature& sig, const Allocation& alloc, Valuation world, const AgentId& agent,
                               const Formula& f) {
  return characterize_second_order(normal_form(f, sig), alloc, world, agent);
}

bool grand_coalition_control(const Formula& f, const Signature& sig) {
  const NormalForm nf = normal_form(f, sig);
  for (const ValuationSet& entry : nf.table) {
    if (entry.empty() || entry.full()) return false;
  }
  return true;
}

}  // namespace dclpc
