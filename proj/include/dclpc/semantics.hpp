#ifndef DCLPC_SEMANTICS_HPP_
#define DCLPC_SEMANTICS_HPP_

#include <cstddef>
#include <vector>

#include "dclpc/formula.hpp"
#include "dclpc/model.hpp"

namespace dclpc {

/// Truth of `f` in a direct model. A coalition modality tries every
/// assignment to the coalition's variables; a program modality ranges over
/// the program's image. Throws SignatureError when `f` mentions identifiers
/// outside the model's signature.
bool eval(const DirectModel& model, const Formula& f);

/// Every model reachable by one run of `program`, sorted and without
/// duplicates. Valuations are never changed by a program.
std::vector<DirectModel> program_image(const DirectModel& model, const Program& program);

/// Whether `to` is in the image of `from` under `program`. Throws
/// SignatureError when the two models have different signatures.
bool in_relation(const DirectModel& from, const DirectModel& to, const Program& program);

/// Number of breadth-first rounds the iteration of `body` needs from `model`
/// before no new model appears: the largest shortest-path length from `model`
/// to a model reachable by body*.
std::size_t star_depth(const DirectModel& model, const Program& body);

}  // namespace dclpc

#endif  // DCLPC_SEMANTICS_HPP_
