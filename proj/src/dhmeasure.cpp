#include "kepoly/dhmeasure.hpp"

#include <algorithm>
#include <vector>

namespace kepoly {

namespace {

Rat factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(std::move(f));
}

} // namespace

Poly2 Poly2::monomial(int i, int j, QuadNum c) {
    Poly2 p;
    if (!c.is_zero())
        p.terms_.emplace(Key{i, j}, std::move(c));
    return p;
}

Poly2 Poly2::linear_form(const Vec2& alpha) {
    Poly2 p = monomial(1, 0, alpha.x);
    p += monomial(0, 1, alpha.y);
    return p;
}

int Poly2::total_degree() const {
    int deg = 0;
    for (const auto& [k, c] : terms_)
        deg = std::max(deg, k.first + k.second);
    return deg;
}

QuadNum Poly2::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? QuadNum(0) : it->second;
}

void Poly2::add_term(const Key& k, const QuadNum& c) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
}

Poly2 operator*(const QuadNum& c, const Poly2& p) {
    Poly2 out;
    if (c.is_zero())
        return out;
    for (const auto& [k, pc] : p.terms_)
        out.terms_.emplace(k, c * pc);
    return out;
}

Poly2 Poly2::pow(unsigned e) const {
    Poly2 out = constant(QuadNum(1));
    for (unsigned i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

QuadNum Poly2::eval(const QuadNum& x, const QuadNum& y) const {
    int max_i = 0, max_j = 0;
    for (const auto& [k, c] : terms_) {
        max_i = std::max(max_i, k.first);
        max_j = std::max(max_j, k.second);
    }
    std::vector<QuadNum> xp(static_cast<std::size_t>(max_i) + 1, QuadNum(1));
    std::vector<QuadNum> yp(static_cast<std::size_t>(max_j) + 1, QuadNum(1));
    for (int i = 1; i <= max_i; ++i)
        xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * x;
    for (int j = 1; j <= max_j; ++j)
        yp[static_cast<std::size_t>(j)] = yp[static_cast<std::size_t>(j - 1)] * y;
    QuadNum acc(0);
    for (const auto& [k, c] : terms_)
        acc += c * xp[static_cast<std::size_t>(k.first)] * yp[static_cast<std::size_t>(k.second)];
    return acc;
}

Poly2 density(const CaseRecord& rec) {
    const RootSystem& rs = realize(rec.restricted_type);
    Poly2 f = Poly2::constant(QuadNum(1));
    if (rec.multiplicity <= 0)
        return f;
    for (const Vec2& alpha : rs.positive_roots)
        f = f * Poly2::linear_form(alpha).pow(static_cast<unsigned>(rec.multiplicity));
    return f;
}

QuadNum integrate_triangle(const Poly2& f, const Triangle& tri) {
    const Vec2 e1 = tri.v[1] - tri.v[0];
    const Vec2 e2 = tri.v[2] - tri.v[0];
    QuadNum jac = cross(e1, e2);
    if (jac.sign() == 0)
        throw DegenerateInput("integration over a zero-area triangle");
    if (jac.sign() < 0)
        jac = -jac;

    if (f.is_zero())
        return QuadNum(0);

    int max_i = 0, max_j = 0;
    for (const auto& [k, c] : f.terms()) {
        max_i = std::max(max_i, k.first);
        max_j = std::max(max_j, k.second);
    }
    // x and y restricted to the triangle, as polynomials in the simplex
    // coordinates (u, v).
    Poly2 X = Poly2::constant(tri.v[0].x) + Poly2::monomial(1, 0, e1.x) + Poly2::monomial(0, 1, e2.x);
    Poly2 Y = Poly2::constant(tri.v[0].y) + Poly2::monomial(1, 0, e1.y) + Poly2::monomial(0, 1, e2.y);
    std::vector<Poly2> xp{Poly2::constant(QuadNum(1))};
    std::vector<Poly2> yp{Poly2::constant(QuadNum(1))};
    for (int i = 1; i <= max_i; ++i)
        xp.push_back(xp.back() * X);
    for (int j = 1; j <= max_j; ++j)
        yp.push_back(yp.back() * Y);

    Poly2 g;
    for (const auto& [k, c] : f.terms())
        g += c * (xp[static_cast<std::size_t>(k.first)] * yp[static_cast<std::size_t>(k.second)]);

    QuadNum acc(0);
    for (const auto& [k, c] : g.terms()) {
        unsigned a = static_cast<unsigned>(k.first);
        unsigned b = static_cast<unsigned>(k.second);
        Rat weight = factorial(a) * factorial(b) / factorial(a + b + 2);
        acc += c * QuadNum(weight);
    }
    return jac * acc;
}

QuadNum integrate_polygon(const Poly2& f, const Polygon& poly) {
    QuadNum acc(0);
    for (const Triangle& tri : triangulate(poly))
        acc += integrate_triangle(f, tri);
    return acc;
}

DhSummary dh_summary(const CaseRecord& rec) {
    Polygon poly = intersect(halfplanes_from_case(rec));
    Poly2 f = density(rec);
    QuadNum vol = integrate_polygon(f, poly);
    if (vol.sign() == 0)
        throw ZeroMass("density integrates to zero over the moment polytope");
    QuadNum mx = integrate_polygon(Poly2::monomial(1, 0, QuadNum(1)) * f, poly);
    QuadNum my = integrate_polygon(Poly2::monomial(0, 1, QuadNum(1)) * f, poly);
    Vec2 bar{mx / vol, my / vol};
    return DhSummary{std::move(poly), std::move(f), std::move(vol), std::move(bar)};
}

QuadNum volume(const CaseRecord& rec) {
    return dh_summary(rec).volume;
}

Vec2 barycenter(const CaseRecord& rec) {
    return dh_summary(rec).barycenter;
}

} // namespace kepoly
