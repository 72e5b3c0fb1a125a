#ifndef DCLPC_MODEL_JSON_HPP_
#define DCLPC_MODEL_JSON_HPP_

#include "dclpc/model.hpp"
#include "json.hpp"

namespace dclpc {

/// {"agents": [...], "vars": [...], "owns": {agent: [vars]}, "true": [vars]}
nlohmann::json model_to_json(const DirectModel& m);

/// Inverse of model_to_json; throws std::invalid_argument on a malformed
/// record or an allocation that is not a partition.
DirectModel model_from_json(const nlohmann::json& j);

}  // namespace dclpc

#endif  // DCLPC_MODEL_JSON_HPP_
