#ifndef DCLPC_AXIOMS_HPP_
#define DCLPC_AXIOMS_HPP_
// Executable axiom and theorem schemes. Each scheme is instantiated over
// seeded pools of formulas, objective formulas, programs, coalitions, agents
// and variables of a signature, and every instance is checked for validity
// over that signature.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dclpc/formula.hpp"
#include "dclpc/model.hpp"

namespace dclpc {

struct AxiomBudget {
  /// Nesting depth of the pooled formulas.
  int max_depth = 2;
  /// Instances checked per scheme; a larger instance space is sampled.
  std::size_t max_instances = 200;
  std::uint64_t seed = 1;
};

struct AxiomCounterexample {
  Formula instance;
  DirectModel model;
};

struct SchemeReport {
  std::string name;
  std::string group;
  /// Instances actually checked (side conditions already applied).
  std::size_t instances = 0;
  /// Size of the full instantiation space before side conditions.
  std::size_t space = 0;
  /// True when only a sample of the space was checked.
  bool truncated = false;
  std::vector<AxiomCounterexample> counterexamples;
};

struct AxiomReport {
  std::vector<SchemeReport> schemes;
  bool sound() const;
  std::size_t instance_count() const;
};

/// Every axiom scheme of the calculus plus the derived theorem schemes.
AxiomReport axiom_suite(const Signature& sig, const AxiomBudget& budget = {});

/// Deliberately broken variants (transfer without its guard, functionality
/// without its guard). A sound checker must find counterexamples to each.
AxiomReport mutation_suite(const Signature& sig, const AxiomBudget& budget = {});

/// Conjunction over variables of "exactly one agent controls p".
Formula allocation_axiom(const Signature& sig);

/// Signature with agents "1".."n" and variables p1..pk.
Signature numbered_signature(std::size_t agents, std::size_t vars);

}  // namespace dclpc

#endif  // DCLPC_AXIOMS_HPP_
