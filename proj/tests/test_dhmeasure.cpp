#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "kepoly/dhmeasure.hpp"

using namespace kepoly;

namespace {

QuadNum q(long n, long d = 1) { return QuadNum(Rat(n, d)); }
QuadNum rt3(long n, long d = 1) { return QuadNum::sqrt3(Rat(n, d)); }

Triangle tri(long x0, long y0, long x1, long y1, long x2, long y2) {
    return Triangle{{Vec2{q(x0), q(y0)}, Vec2{q(x1), q(y1)}, Vec2{q(x2), q(y2)}}};
}

Poly2 random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<int> deg(0, 3);
    Poly2 p;
    for (int t = 0; t < 5; ++t) {
        int i = deg(rng), j = deg(rng);
        p += Poly2::monomial(i, j, QuadNum(Rat(num(rng), den(rng)), Rat(num(rng), den(rng))));
    }
    return p;
}

} // namespace

TEST_CASE("density of case 1 expands to (3/4) x y^2 - (1/4) x^3") {
    Poly2 f = density(builtin_case(1));
    CHECK(f.coeff(1, 2) == q(3, 4));
    CHECK(f.coeff(3, 0) == q(-1, 4));
    CHECK(f.terms().size() == 2);
    CHECK(f.total_degree() == 3);
}

TEST_CASE("density of case 2 is the square of the case-1 density") {
    Poly2 f1 = density(builtin_case(1));
    CHECK(density(builtin_case(2)) == f1 * f1);
}

TEST_CASE("degree equals multiplicity times the number of positive roots") {
    CHECK(density(builtin_case(3)).total_degree() == 12);
    CHECK(density(builtin_case(4)).total_degree() == 24);
    CHECK(density(builtin_case(5)).total_degree() == 6);
    CHECK(density(builtin_case(6)).total_degree() == 12);
}

TEST_CASE("multiplicity zero gives the empty product") {
    CaseRecord synthetic = builtin_case(1);
    synthetic.multiplicity = 0;
    CHECK(density(synthetic) == Poly2::constant(q(1)));
}

TEST_CASE("triangle integrals against the simplex formula") {
    Triangle simplex = tri(0, 0, 1, 0, 0, 1);
    CHECK(integrate_triangle(Poly2::constant(q(1)), simplex) == q(1, 2));
    CHECK(integrate_triangle(Poly2::monomial(1, 0, q(1)), simplex) == q(1, 6));
    // brute-force oracle: int_0^2 int_0^{2-x} x y dy dx = 2/3
    CHECK(integrate_triangle(Poly2::monomial(1, 1, q(1)), tri(0, 0, 2, 0, 0, 2)) == q(2, 3));
    CHECK_THROWS_AS(integrate_triangle(Poly2::constant(q(1)), tri(0, 0, 1, 1, 2, 2)),
                    DegenerateInput);
}

TEST_CASE("exact triangle integrals agree with midpoint quadrature") {
    // Independent numeric route: split the triangle into k^2 congruent
    // subtriangles and sum f(centroid) * subarea.  Second-order accurate,
    // so k = 200 leaves plenty of headroom at 1e-3 relative tolerance.
    auto quadrature = [](const Poly2& f, const Triangle& t) {
        const int k = 200;
        double x0 = t.v[0].x.to_double(), y0 = t.v[0].y.to_double();
        double dx1 = t.v[1].x.to_double() - x0, dy1 = t.v[1].y.to_double() - y0;
        double dx2 = t.v[2].x.to_double() - x0, dy2 = t.v[2].y.to_double() - y0;
        double jac = std::abs(dx1 * dy2 - dy1 * dx2);
        auto eval = [&](double u, double v) {
            double px = x0 + u * dx1 + v * dx2;
            double py = y0 + u * dy1 + v * dy2;
            double acc = 0.0;
            for (const auto& [key, c] : f.terms())
                acc += c.to_double() * std::pow(px, key.first) * std::pow(py, key.second);
            return acc;
        };
        double sum = 0.0;
        const double h = 1.0 / k;
        for (int i = 0; i < k; ++i) {
            for (int j = 0; i + j < k; ++j) {
                // upward subtriangle centroid
                sum += eval((i + 1.0 / 3.0) * h, (j + 1.0 / 3.0) * h);
                // downward one, present unless on the hypotenuse row
                if (i + j < k - 1)
                    sum += eval((i + 2.0 / 3.0) * h, (j + 2.0 / 3.0) * h);
            }
        }
        return jac * 0.5 * h * h * sum;
    };

    std::mt19937 rng(29);
    std::uniform_int_distribution<long> coord(-3, 3);
    for (int round = 0; round < 10; ++round) {
        Poly2 f = random_poly(rng);
        Vec2 a{q(coord(rng)), q(coord(rng))};
        Vec2 b{q(coord(rng)), q(coord(rng))};
        Vec2 c{q(coord(rng)), q(coord(rng))};
        if (cross(b - a, c - a).sign() == 0)
            continue;
        Triangle t{{a, b, c}};
        double exact = integrate_triangle(f, t).to_double();
        double approx = quadrature(f, t);
        double scale = std::max({1.0, std::abs(exact), std::abs(approx)});
        CHECK(std::abs(exact - approx) / scale < 1e-3);
    }
}

TEST_CASE("orientation of the triangle does not change the integral") {
    Poly2 f = Poly2::monomial(2, 1, q(1)) + Poly2::monomial(0, 1, rt3(1));
    CHECK(integrate_triangle(f, tri(0, 0, 3, 1, 1, 2)) == integrate_triangle(f, tri(0, 0, 1, 2, 3, 1)));
}

TEST_CASE("reference volumes and barycenters") {
    CHECK(volume(builtin_case(1)) == rt3(27, 5));
    CHECK(barycenter(builtin_case(1)) == Vec2{q(5, 4), rt3(5, 4)});
    CHECK(volume(builtin_case(2)) == rt3(78125, 18432));
    CHECK(barycenter(builtin_case(2)) == Vec2{q(10, 9), rt3(10, 9)});
    CHECK(volume(builtin_case(5)) == rt3(29952));
    CHECK(barycenter(builtin_case(5)) == Vec2{q(512, 273), rt3(32, 9)});
}

TEST_CASE("remaining volumes are regression-pinned and barycenters exact") {
    CHECK(volume(builtin_case(3)) == QuadNum(Rat(0), Rat::from_string("847288609443/490")));
    CHECK(barycenter(builtin_case(3)) == Vec2{q(21, 5), rt3(21, 5)});
    CHECK(volume(builtin_case(4)) ==
          QuadNum(Rat(0), Rat::from_string("5770627412348402378939569991057/501930")));
    CHECK(barycenter(builtin_case(4)) == Vec2{q(221, 27), rt3(221, 27)});
    CHECK(volume(builtin_case(6)) == QuadNum(Rat(0), Rat::from_string("34755472161711/720896")));
    CHECK(barycenter(builtin_case(6)) == Vec2{q(139601, 79360), rt3(49, 15)});
}

TEST_CASE("all six barycenters lie strictly inside their polytopes") {
    for (const CaseRecord& rec : builtin_cases()) {
        DhSummary dh = dh_summary(rec);
        CHECK(contains(dh.polytope, dh.barycenter, true));
    }
}

TEST_CASE("density is nonnegative on the closed chamber, positive at the centroid") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> num(0, 9);
    std::uniform_int_distribution<long> den(1, 9);
    for (const CaseRecord& rec : builtin_cases()) {
        const RootSystem& rs = realize(rec.restricted_type);
        Poly2 f = density(rec);
        for (int i = 0; i < 50; ++i) {
            Vec2 p = QuadNum(Rat(num(rng), den(rng))) * rs.fundamental_weights[0] +
                     QuadNum(Rat(num(rng), den(rng))) * rs.fundamental_weights[1];
            CHECK(f.eval(p.x, p.y).sign() >= 0);
        }
        DhSummary dh = dh_summary(rec);
        Vec2 centroid{q(0), q(0)};
        for (const Vec2& v : dh.polytope.vertices())
            centroid += v;
        QuadNum inv_n(Rat(1, static_cast<long>(dh.polytope.size())));
        centroid = inv_n * centroid;
        CHECK(f.eval(centroid.x, centroid.y).sign() > 0);
    }
}

TEST_CASE("integral is independent of the fan apex") {
    std::vector<Vec2> square = {{q(0), q(0)}, {q(2), q(0)}, {q(2), q(2)}, {q(0), q(2)}};
    std::mt19937 rng(17);
    for (int round = 0; round < 20; ++round) {
        Poly2 f = random_poly(rng);
        QuadNum base = integrate_polygon(f, Polygon(square));
        for (std::size_t shift = 1; shift < square.size(); ++shift) {
            std::vector<Vec2> rotated(square.begin() + static_cast<long>(shift), square.end());
            rotated.insert(rotated.end(), square.begin(), square.begin() + static_cast<long>(shift));
            CHECK(integrate_polygon(f, Polygon(rotated)) == base);
        }
    }
    // and on a real case polytope with the real density
    DhSummary dh = dh_summary(builtin_case(1));
    std::vector<Vec2> verts = dh.polytope.vertices();
    std::rotate(verts.begin(), verts.begin() + 1, verts.end());
    CHECK(integrate_polygon(dh.density, Polygon(verts)) == dh.volume);
}

TEST_CASE("doubling the polygon scales the case-1 volume by 2^(deg + 2)") {
    DhSummary dh = dh_summary(builtin_case(1));
    std::vector<Vec2> doubled;
    for (const Vec2& v : dh.polytope.vertices())
        doubled.push_back(QuadNum(2) * v);
    // density is homogeneous of degree 3, so the factor is 2^5 = 32
    CHECK(integrate_polygon(dh.density, Polygon(doubled)) == QuadNum(32) * dh.volume);
}

TEST_CASE("zero total mass is reported") {
    // Density of case 1 is odd in x; over a square centered at the origin
    // the integral vanishes.  two_rho_theta = 0 makes the half-planes
    // <v, p> >= -1 for the four axis directions, i.e. the square [-1,1]^2.
    CaseRecord rec = builtin_case(1);
    rec.color_normals = {Vec2{q(1), q(0)}, Vec2{q(0), q(1)}};
    rec.color_coefficients = {1, 1};
    rec.gstable_normals = {Vec2{q(-1), q(0)}, Vec2{q(0), q(-1)}};
    rec.two_rho_theta = Vec2{q(0), q(0)};
    rec.expected.reset();
    CHECK_THROWS_AS(dh_summary(rec), ZeroMass);
}
