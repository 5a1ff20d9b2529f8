#include "kepoly/rootdata.hpp"

#include <ostream>

namespace kepoly {

std::ostream& operator<<(std::ostream& os, const Vec2& v) { return os << v.str(); }

Vec2 coroot(const Vec2& alpha) {
    if (alpha.is_zero())
        throw DegenerateInput("coroot of the zero vector");
    QuadNum len2 = pairing(alpha, alpha);
    QuadNum c = QuadNum(2) / len2;
    return c * alpha;
}

Vec2 solve2(const Vec2& row1, const Vec2& row2, const QuadNum& b1, const QuadNum& b2) {
    QuadNum det = cross(row1, row2);
    if (det.sign() == 0)
        throw DegenerateInput("singular 2x2 system");
    return {(b1 * row2.y - b2 * row1.y) / det, (row1.x * b2 - row2.x * b1) / det};
}

std::string_view to_string(RootLabel label) {
    return label == RootLabel::A2 ? "A2" : "G2";
}

RootLabel root_label_from_string(std::string_view s) {
    if (s == "A2")
        return RootLabel::A2;
    if (s == "G2")
        return RootLabel::G2;
    throw ParseError("unknown root system label \"" + std::string(s) + "\" (expected \"A2\" or \"G2\")");
}

std::pair<std::array<Vec2, 2>, std::array<Vec2, 2>>
solve_fundamental(const std::array<Vec2, 2>& simple_roots) {
    Vec2 c1 = coroot(simple_roots[0]);
    Vec2 c2 = coroot(simple_roots[1]);
    std::array<Vec2, 2> weights = {
        solve2(c1, c2, QuadNum(1), QuadNum(0)),
        solve2(c1, c2, QuadNum(0), QuadNum(1)),
    };
    std::array<Vec2, 2> coweights = {
        solve2(simple_roots[0], simple_roots[1], QuadNum(1), QuadNum(0)),
        solve2(simple_roots[0], simple_roots[1], QuadNum(0), QuadNum(1)),
    };
    return {weights, coweights};
}

namespace {

RootSystem build(RootLabel label) {
    RootSystem rs;
    rs.label = label;
    const QuadNum half(Rat(1, 2));
    const QuadNum half_rt3 = QuadNum::sqrt3(Rat(1, 2));
    if (label == RootLabel::A2) {
        Vec2 a1{QuadNum(1), QuadNum(0)};
        Vec2 a2{-half, half_rt3};
        rs.simple_roots = {a1, a2};
        rs.positive_roots = {a1, a2, a1 + a2};
    } else {
        Vec2 a1{QuadNum(1), QuadNum(0)};
        Vec2 a2{QuadNum(Rat(-3, 2)), half_rt3};
        rs.simple_roots = {a1, a2};
        rs.positive_roots = {
            a1,
            a2,
            a1 + a2,
            QuadNum(2) * a1 + a2,
            QuadNum(3) * a1 + a2,
            QuadNum(3) * a1 + QuadNum(2) * a2,
        };
    }
    auto [weights, coweights] = solve_fundamental(rs.simple_roots);
    rs.fundamental_weights = weights;
    rs.fundamental_coweights = coweights;
    return rs;
}

} // namespace

const RootSystem& realize(RootLabel label) {
    static const RootSystem a2 = build(RootLabel::A2);
    static const RootSystem g2 = build(RootLabel::G2);
    return label == RootLabel::A2 ? a2 : g2;
}

} // namespace kepoly
