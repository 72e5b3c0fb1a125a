#ifndef DCLPC_KRIPKE_HPP_
#define DCLPC_KRIPKE_HPP_
// Second evaluator over the two-dimensional Kripke structure: worlds are
// valuations (horizontal moves change values of variables), and programs move
// vertically between allocations with the world held fixed.
//
// Coalition modalities read "differs at most on the coalition's variables",
// i.e. the union of the members' variable sets. Program relations are built
// as boolean matrices over all allocations rather than by image search, so
// this evaluator shares no code path with the direct one beyond the model
// types.

#include <cstdint>

#include "dclpc/formula.hpp"
#include "dclpc/model.hpp"

namespace dclpc {

struct PointedKripkeModel {
  Signature sig;
  Allocation alloc;
  Valuation world;
};

bool eval_kripke(const PointedKripkeModel& pm, const Formula& f);

/// True iff the direct and Kripke evaluators agree on every model of `sig`.
bool cross_check(const Signature& sig, const Formula& f);

/// Whether `a` and `b` agree on every variable outside `mask`.
bool same_modulo(Valuation a, Valuation b, std::uint64_t mask);

/// The per-agent accessibility relation: worlds that agree outside the
/// agent's variables under `alloc`.
bool horizontally_related(const Signature& sig, const Allocation& alloc, const AgentId& agent, Valuation a,
                          Valuation b);

/// One atomic transfer step between pointed models: same world, and `to`
/// results from `from` by `giver` handing `var` to `receiver`.
bool vertically_related(const Signature& sig, const Allocation& from, const Allocation& to, const AgentId& giver,
                        const PropId& var, const AgentId& receiver);

}  // namespace dclpc

#endif  // DCLPC_KRIPKE_HPP_
