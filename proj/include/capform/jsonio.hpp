#pragma once
#include "capform/orders.hpp"
#include "capform/quatalg.hpp"

#include <json.hpp>

#include <string>

namespace capform {

using Json = nlohmann::ordered_json;

// {"a": "-1", "b": "-1"}
Json algebra_to_json(const QuatAlg& alg);
AlgPtr algebra_from_json(const Json& j);

// {"algebra": {...}, "basis": [[w,x,y,z] rational strings x4]}
Json order_to_json(const Order& o);
OrderPtr order_from_json(const Json& j);
OrderPtr order_from_json_text(const std::string& text);

Json quat_to_json(const QuatElt& x);
QuatElt quat_from_json(const AlgPtr& alg, const Json& j);

// parse failure or wrong shape -> domain_error with a readable message
Json parse_json_text(const std::string& text, const std::string& what);

} // namespace capform
