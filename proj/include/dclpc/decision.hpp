#ifndef DCLPC_DECISION_HPP_
#define DCLPC_DECISION_HPP_
// Satisfiability, validity, and entailment by exhaustive model enumeration.
//
// Every answer is relative to a signature. Without one, the default
// signature of the formula is used: its own agents plus one extra agent, and
// its own variables (or one auxiliary variable when it has none).

#include <optional>
#include <span>

#include "dclpc/formula.hpp"
#include "dclpc/model.hpp"

namespace dclpc {

/// Agents of `f` plus a fresh agent named `_env` (or `_env1`, `_env2`, ... if
/// taken); variables of `f`, or a fresh `_aux` when there are none.
Signature default_signature(const Formula& f);

/// The first model in enumeration order where `f` holds.
std::optional<DirectModel> satisfiable(const Formula& f, const std::optional<Signature>& sig = std::nullopt);

/// The first model in enumeration order where `f` fails.
std::optional<DirectModel> counterexample(const Formula& f, const std::optional<Signature>& sig = std::nullopt);

bool valid(const Formula& f, const std::optional<Signature>& sig = std::nullopt);

/// Validity of (conjunction of premises) -> conclusion.
bool entails(std::span<const Formula> premises, const Formula& conclusion,
             const std::optional<Signature>& sig = std::nullopt);

}  // namespace dclpc

#endif  // DCLPC_DECISION_HPP_
