#include "dclpc/decision.hpp"

#include <string>

#include "dclpc/semantics.hpp"

namespace dclpc {

namespace {

std::string fresh(const std::set<std::string>& taken, const std::string& base) {
  if (!taken.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string name = base + std::to_string(i);
    if (!taken.count(name)) return name;
  }
}

std::optional<DirectModel> first_where(const Formula& f, bool wanted, const std::optional<Signature>& sig) {
  const Signature space_sig = sig ? *sig : default_signature(f);
  space_sig.require_covers(signature_of(f), "formula");
  for (const DirectModel& m : enumerate_models(space_sig)) {
    if (eval(m, f) == wanted) return m;
  }
  return std::nullopt;
}

}  // namespace

Signature default_signature(const Formula& f) {
  const SyntacticSignature s = signature_of(f);
  std::vector<AgentId> agents(s.agents.begin(), s.agents.end());
  agents.push_back(fresh(s.agents, "_env"));
  std::vector<PropId> vars(s.vars.begin(), s.vars.end());
  if (vars.empty()) vars.push_back("_aux");
  return Signature(std::move(agents), std::move(vars));
}

std::optional<DirectModel> satisfiable(const Formula& f, const std::optional<Signature>& sig) {
  return first_where(f, true, sig);
}

std::optional<DirectModel> counterexample(const Formula& f, const std::optional<Signature>& sig) {
  return first_where(f, false, sig);
}

bool valid(const Formula& f, const std::optional<Signature>& sig) { return !counterexample(f, sig).has_value(); }

bool entails(std::span<const Formula> premises, const Formula& conclusion, const std::optional<Signature>& sig) {
  return valid(implies(conjoin(premises), conclusion), sig);
}

}  // namespace dclpc
