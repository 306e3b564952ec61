#include "blotto/io.hpp"

namespace blotto {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error("BadJson", std::string("missing field ") + key);
  return j.at(key);
}

Rat rat_field(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw Error("BadJson", "rationals must be \"p/q\" strings");
}

}  // namespace

Json to_json(const Dist& d) {
  Json w = Json::object();
  for (auto& [k, q] : d.weights()) w[std::to_string(k)] = to_string(q);
  return Json{{"weights", w}};
}

Dist dist_from_json(const Json& j) {
  std::map<long, Rat> w;
  for (auto& [k, v] : field(j, "weights").items()) {
    std::size_t used = 0;
    long point;
    try {
      point = std::stol(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != k.size() || point < 0) throw Error("BadJson", "bad support point " + k);
    w[point] += rat_field(v);
  }
  return Dist(std::move(w));
}

Json to_json(const PartitionMatrix& M) {
  return Json{{"budget", M.budget}, {"battlefields", M.K}, {"rows", M.rows}};
}

PartitionMatrix matrix_from_json(const Json& j) {
  PartitionMatrix M;
  try {
    M.budget = field(j, "budget").get<long>();
    M.K = field(j, "battlefields").get<long>();
    M.rows = field(j, "rows").get<std::vector<Row>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error("BadJson", e.what());
  }
  validate(M);
  return M;
}

Json to_json(const Certificate& c) {
  return Json{{"secured_A", to_string(c.secured_by_A)},
              {"secured_B", to_string(c.secured_by_B)},
              {"equilibrium", c.equilibrium}};
}

Json to_json(const EquilibriumReport& r) {
  return Json{{"A", to_json(r.strategy_A)},
              {"B", to_json(r.strategy_B)},
              {"value", to_string(r.value)},
              {"secured_A", to_string(r.certificate.secured_by_A)},
              {"secured_B", to_string(r.certificate.secured_by_B)},
              {"case", tag_name(r.game_case.tag)}};
}

std::pair<PartitionMatrix, PartitionMatrix> strategies_from_json(const Json& j) {
  return {matrix_from_json(field(j, "A")), matrix_from_json(field(j, "B"))};
}

}  // namespace blotto
