#pragma once

#include <map>
#include <utility>

#include "kepoly/polytope.hpp"

namespace kepoly {

// Sparse bivariate polynomial sum c_ij x^i y^j with field coefficients.
// Zero coefficients are never stored.
class Poly2 {
public:
    using Key = std::pair<int, int>;

    Poly2() = default;
    static Poly2 constant(QuadNum c) { return monomial(0, 0, std::move(c)); }
    static Poly2 monomial(int i, int j, QuadNum c);
    // <alpha, (x, y)> as a polynomial: alpha.x * x + alpha.y * y
    static Poly2 linear_form(const Vec2& alpha);

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    QuadNum coeff(int i, int j) const;
    const std::map<Key, QuadNum>& terms() const { return terms_; }

    Poly2& operator+=(const Poly2& o);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const QuadNum& c, const Poly2& p);
    Poly2 pow(unsigned e) const;

    QuadNum eval(const QuadNum& x, const QuadNum& y) const;

    friend bool operator==(const Poly2&, const Poly2&) = default;

private:
    void add_term(const Key& k, const QuadNum& c);
    std::map<Key, QuadNum> terms_;
};

// Duistermaat-Heckman density: the product of <alpha, p> over the positive
// roots of the restricted-type realization, each factor raised to the case
// multiplicity.  Multiplicity 0 gives the constant 1 (empty product).
Poly2 density(const CaseRecord& rec);

// Exact integral of f over a triangle, via the affine substitution
// p = V0 + u (V1 - V0) + v (V2 - V0) and the standard-simplex monomial
// formula  int u^a v^b = a! b! / (a + b + 2)!,  scaled by |det J|.
// Throws DegenerateInput on a zero-area triangle.
QuadNum integrate_triangle(const Poly2& f, const Triangle& tri);

// Sum of integrate_triangle over the fan triangulation.  Exact arithmetic
// makes the value independent of the triangulation.
QuadNum integrate_polygon(const Poly2& f, const Polygon& poly);

// Full per-case pipeline shared by volume, barycenter and the criterion:
// moment polytope, density, exact volume and barycenter.  Throws ZeroMass
// when the density integrates to zero (a mis-specified custom case).
struct DhSummary {
    Polygon polytope;
    Poly2 density;
    QuadNum volume;
    Vec2 barycenter;
};
DhSummary dh_summary(const CaseRecord& rec);

QuadNum volume(const CaseRecord& rec);
Vec2 barycenter(const CaseRecord& rec);

} // namespace kepoly
