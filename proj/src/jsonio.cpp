#include "capform/jsonio.hpp"

#include "capform/check.hpp"

namespace capform {

Json parse_json_text(const std::string& text, const std::string& what) {
    Json j = Json::parse(text, nullptr, false);
    CF_DOMAIN_CHECK(!j.is_discarded(), "malformed JSON while reading " << what);
    return j;
}

Json algebra_to_json(const QuatAlg& alg) {
    return Json{{"a", rat_str(alg.a)}, {"b", rat_str(alg.b)}};
}

AlgPtr algebra_from_json(const Json& j) {
    CF_DOMAIN_CHECK(j.is_object() && j.contains("a") && j.contains("b"),
                    "algebra JSON needs string fields \"a\" and \"b\"");
    CF_DOMAIN_CHECK(j["a"].is_string() && j["b"].is_string(),
                    "algebra parameters must be rational strings");
    return QuatAlg::make(parse_rat(j["a"].get<std::string>()),
                         parse_rat(j["b"].get<std::string>()));
}

Json quat_to_json(const QuatElt& x) {
    Json arr = Json::array();
    for (const Rat& q : x.c) arr.push_back(rat_str(q));
    return arr;
}

QuatElt quat_from_json(const AlgPtr& alg, const Json& j) {
    CF_DOMAIN_CHECK(j.is_array() && j.size() == 4,
                    "quaternion element must be a 4-array of rational strings");
    std::array<Rat, 4> c;
    for (size_t t = 0; t < 4; ++t) {
        CF_DOMAIN_CHECK(j[t].is_string(), "quaternion coordinate must be a rational string");
        c[t] = parse_rat(j[t].get<std::string>());
    }
    return QuatElt(alg, c[0], c[1], c[2], c[3]);
}

Json order_to_json(const Order& o) {
    Json j;
    j["algebra"] = algebra_to_json(*o.algebra());
    Json basis = Json::array();
    for (const QuatElt& e : o.basis()) basis.push_back(quat_to_json(e));
    j["basis"] = basis;
    return j;
}

OrderPtr order_from_json(const Json& j) {
    CF_DOMAIN_CHECK(j.is_object() && j.contains("algebra") && j.contains("basis"),
                    "order JSON needs \"algebra\" and \"basis\"");
    AlgPtr alg = algebra_from_json(j["algebra"]);
    const Json& basis = j["basis"];
    CF_DOMAIN_CHECK(basis.is_array() && basis.size() == 4, "order basis must have 4 elements");
    std::array<QuatElt, 4> b{QuatElt{}, QuatElt{}, QuatElt{}, QuatElt{}};
    for (size_t t = 0; t < 4; ++t) b[t] = quat_from_json(alg, basis[t]);
    return Order::make(alg, b);
}

OrderPtr order_from_json_text(const std::string& text) {
    return order_from_json(parse_json_text(text, "an order"));
}

} // namespace capform
