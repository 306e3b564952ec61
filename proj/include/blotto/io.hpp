#pragma once

#include <json.hpp>

#include "blotto/blotto.hpp"

namespace blotto {

using Json = nlohmann::ordered_json;

Json to_json(const Dist& d);
Dist dist_from_json(const Json& j);

Json to_json(const PartitionMatrix& M);
PartitionMatrix matrix_from_json(const Json& j);

Json to_json(const Certificate& c);
Json to_json(const EquilibriumReport& r);

// Reads the "A" and "B" matrices of a report.
std::pair<PartitionMatrix, PartitionMatrix> strategies_from_json(const Json& j);

}  // namespace blotto
