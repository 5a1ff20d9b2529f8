#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kepoly/qfield.hpp"

namespace kepoly {

// Exact point/vector in the rank-2 Euclidean realization shared by the
// weight space M (x) R and its dual N (x) R.
struct Vec2 {
    QuadNum x, y;

    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
    friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
    friend Vec2 operator*(const QuadNum& c, const Vec2& v) { return {c * v.x, c * v.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

std::ostream& operator<<(std::ostream& os, const Vec2& v);

// The pairing used everywhere as the Killing form kappa: the Euclidean
// inner product of the chosen realization.  Any global rescaling cancels
// in barycenters and in the cone test.
inline QuadNum pairing(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

inline QuadNum cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

// Coroot 2a / <a, a>.  Throws DegenerateInput on the zero vector.
Vec2 coroot(const Vec2& alpha);

// Solves the 2x2 system  <row1, z> = b1, <row2, z> = b2  exactly.
// Throws DegenerateInput when the rows are linearly dependent.
Vec2 solve2(const Vec2& row1, const Vec2& row2, const QuadNum& b1, const QuadNum& b2);

enum class RootLabel { A2, G2 };

std::string_view to_string(RootLabel label);
RootLabel root_label_from_string(std::string_view s); // throws ParseError

struct RootSystem {
    RootLabel label;
    std::array<Vec2, 2> simple_roots;
    std::vector<Vec2> positive_roots;         // fixed enumeration order
    std::array<Vec2, 2> fundamental_weights;  // <coroot(a_i), w_j> = delta_ij
    std::array<Vec2, 2> fundamental_coweights; // <w_i^, a_j> = delta_ij
};

// The exact Euclidean realizations:
//   A2: a1 = (1, 0), a2 = (-1/2, sqrt(3)/2), positive roots a1, a2, a1+a2
//   G2: a1 = (1, 0), a2 = (-3/2, sqrt(3)/2), six positive roots
//       a1, a2, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2
const RootSystem& realize(RootLabel label);

// Fundamental weights and coweights dual to the given simple roots:
// weights solve <coroot(a_i), w_j> = delta_ij, coweights <w_i^, a_j> = delta_ij.
std::pair<std::array<Vec2, 2>, std::array<Vec2, 2>>
solve_fundamental(const std::array<Vec2, 2>& simple_roots);

} // namespace kepoly
