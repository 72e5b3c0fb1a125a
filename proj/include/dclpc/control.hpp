#ifndef DCLPC_CONTROL_HPP_
#define DCLPC_CONTROL_HPP_
// First- and second-order control.
//
// First-order control, controls(C, f), lives in formula.hpp because the parser
// and the normal-form printer need it too. This header adds the give-programs,
// the second-order operator built from them, and checks of both against the
// normal-form table.

#include "dclpc/formula.hpp"
#include "dclpc/model.hpp"
#include "dclpc/normal_form.hpp"

namespace dclpc {

/// Some member i of `from` picks a variable it controls and hands it to a
/// member of `to` or keeps it. Expands over every variable of `sig`, each
/// guarded by controls(i, p). Throws std::invalid_argument when `from` is
/// empty and SignatureError on unknown agents.
Program give_program(const Coalition& from, const Coalition& to, const Signature& sig);

/// `agent` gives away one of its variables to any agent, or keeps it.
Program give_program(const AgentId& agent, const Signature& sig);

/// After some sequence of the agent's own give steps it can make `f` true,
/// and after some sequence it can make `f` false.
Formula second_order_controls(const AgentId& agent, const Formula& f, const Signature& sig);

/// Whether `to` can arise from `from` by `agent` giving variables away: the
/// agent's cell shrinks and every other cell grows.
bool geq(const Signature& sig, const Allocation& from, const Allocation& to, const AgentId& agent);

/// Table-based decision of second-order control at (alloc, world): some
/// allocation below `alloc` for `agent` has a satisfying valuation reachable by
/// changing only the agent's variables there, and likewise for the complement.
bool characterize_second_order(const NormalForm& nf, const Allocation& alloc, Valuation world, const AgentId& agent);
bool characterize_second_order(const Signature& sig, const Allocation& alloc, Valuation world, const AgentId& agent,
                               const Formula& f);

/// Whether the grand coalition controls `f` in every model of `sig`: no table
/// entry is empty or full.
bool grand_coalition_control(const Formula& f, const Signature& sig);

}  // namespace dclpc

#endif  // DCLPC_CONTROL_HPP_
