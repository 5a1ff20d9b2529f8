#pragma once

#include <json.hpp>

#include "kepoly/qfield.hpp"
#include "kepoly/rootdata.hpp"

namespace kepoly {

// Canonical JSON forms, bit-exact on round trip:
//   Rat     -> "p/q" ("p" when q = 1)
//   QuadNum -> {"rat": "p/q", "sqrt3": "p/q"}
//   Vec2    -> {"x": QuadNum, "y": QuadNum}
// Parsers ignore an extra "approx" member so report output stays loadable.

inline void to_json(nlohmann::json& j, const Rat& r) { j = r.str(); }

inline void from_json(const nlohmann::json& j, Rat& r) {
    if (!j.is_string())
        throw ParseError("rational must be a JSON string, got " + j.dump());
    r = Rat::from_string(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const QuadNum& q) {
    j = nlohmann::json{{"rat", q.rat_part()}, {"sqrt3", q.sqrt3_part()}};
}

inline void from_json(const nlohmann::json& j, QuadNum& q) {
    if (!j.is_object() || !j.contains("rat") || !j.contains("sqrt3"))
        throw ParseError("field element must be {\"rat\", \"sqrt3\"}, got " + j.dump());
    q = QuadNum(j.at("rat").get<Rat>(), j.at("sqrt3").get<Rat>());
}

inline void to_json(nlohmann::json& j, const Vec2& v) {
    j = nlohmann::json{{"x", v.x}, {"y", v.y}};
}

inline void from_json(const nlohmann::json& j, Vec2& v) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y"))
        throw ParseError("point must be {\"x\", \"y\"}, got " + j.dump());
    v = Vec2{j.at("x").get<QuadNum>(), j.at("y").get<QuadNum>()};
}

} // namespace kepoly
