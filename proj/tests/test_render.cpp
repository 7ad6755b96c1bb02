#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "taufan/error.hpp"
#include "taufan/render.hpp"

#include <string>

using namespace taufan;

namespace {

QVec q(std::initializer_list<int> xs)
{
    QVec v;
    for (int x : xs)
        v.emplace_back(x);
    return v;
}

int count(const std::string& hay, const std::string& needle)
{
    int n = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
        ++n;
    return n;
}

WallGeometry line(const std::string& id, QVec d)
{
    return {id, id, VCone{static_cast<int>(d.size()), {d}, {}}, false};
}

WallGeometry ray(const std::string& id, QVec d, bool limit = false)
{
    return {id, id, VCone{static_cast<int>(d.size()), {}, {d}}, limit};
}

WallGeometry plane(const std::string& id, const QVec& normal)
{
    HCone h{3, {normal}, {}};
    return {id, id, generators_of(h), false};
}

WallGeometry halfplane(const std::string& id, const QVec& normal, const QVec& side)
{
    HCone h{3, {normal}, {side}};
    return {id, id, generators_of(h), false};
}

}  // namespace

TEST_CASE("surd arithmetic is exact")
{
    Surd r2 = Surd::sqrt_of(2, 3, 2);
    Surd r3 = Surd::sqrt_of(2, 3, 3);
    CHECK((r2 + r3) * (r2 - r3) == Surd(2, 3, -1));
    Surd x = r2 + r3 + Surd(2, 3, 1);
    CHECK(x * x.inverse() == Surd(2, 3, 1));
    CHECK(Surd::sqrt_of(2, 3, 24) == Surd(2, 3, 2) * r2 * r3);
    CHECK(Surd::sqrt_of(3, 3, 12) == Surd(3, 3, 2) * Surd::sqrt_of(3, 3, 3));
    CHECK(std::abs(static_cast<double>(x.value()) - (1 + 1.41421356237 + 1.73205080757)) < 1e-9);
    CHECK_THROWS_AS(Surd::sqrt_of(2, 3, 5), Error);
}

TEST_CASE("planar scene has one group per wall")
{
    std::vector<WallGeometry> walls{line("1", q({0, 1})), line("2", q({1, 0})), ray("1/2", q({1, -1}))};
    std::string svg = render_2d(walls, {{"(0,A)", q({-1, -1})}});
    CHECK(count(svg, "class=\"wall\"") == 3);
    CHECK(count(svg, "<path ") == 3);
    CHECK(count(svg, "id=\"wall-1/2\"") == 1);
    CHECK(svg == render_2d(walls, {{"(0,A)", q({-1, -1})}}));
    CHECK(svg.find(">(0,A)<") != std::string::npos);
}

TEST_CASE("empty planar scene draws the axes only")
{
    std::string svg = render_2d({});
    CHECK(count(svg, "class=\"axis\"") == 2);
    CHECK(count(svg, "<path ") == 0);
}

TEST_CASE("limit rays get their own class")
{
    std::string svg = render_2d({ray("reg", q({1, -1}), true), ray("m", q({3, -2}))});
    CHECK(count(svg, "class=\"limit-ray\"") == 1);
    CHECK(count(svg, "class=\"wall\"") == 1);
}

TEST_CASE("planar rendering rejects other dimensions")
{
    CHECK_THROWS_AS(render_2d({ray("x", q({1, 0, 0}))}), Error);
}

TEST_CASE("equator projected from the north pole is the unit circle")
{
    ProjectionSpec spec;
    spec.point = q({0, 0, 1});
    auto w = plane("z", q({0, 0, 1}));
    auto samples = sample_wall(w, spec);
    REQUIRE(samples.size() >= 64);
    Surd one(1, 1, 1);
    for (const auto& s : samples) {
        Surd r2 = s.image[0] * s.image[0] + s.image[1] * s.image[1] + s.image[2] * s.image[2];
        CHECK(r2 == Surd(r2.m(), r2.n(), 1));
        CHECK(s.image[2].is_zero());
        CHECK(inverse_projection_holds(s, wall_normal(w.cone), spec));
    }
    std::string svg = render_stereographic({w}, spec);
    CHECK(count(svg, "class=\"wall\"") == 1);
    CHECK(count(svg, "class=\"front\"") == 1);
    CHECK(count(svg, "class=\"back\"") == 0);
}

TEST_CASE("projected samples invert exactly from a generic point")
{
    ProjectionSpec spec;
    std::vector<WallGeometry> walls{plane("z", q({0, 0, 1})), halfplane("h", q({0, 1, -2}), q({1, 0, 0})), WallGeometry{"w", "w", VCone{3, {}, {q({1, 0, 0}), q({0, 1, 0})}}, false}};
    for (const auto& w : walls)
        for (const auto& s : sample_wall(w, spec))
            CHECK(inverse_projection_holds(s, wall_normal(w.cone), spec));
}

TEST_CASE("projection point on a wall is rejected")
{
    ProjectionSpec spec;
    CHECK_THROWS_AS(render_stereographic({plane("x+y", q({1, -1, 0}))}, spec), Error);
    CHECK_NOTHROW(render_stereographic({plane("x", q({1, 0, 0}))}, spec));
}

TEST_CASE("stereographic output is deterministic and splits hemispheres")
{
    std::vector<WallGeometry> walls{plane("x", q({1, 0, 0})), plane("y", q({0, 1, 0}))};
    std::string a = render_stereographic(walls);
    CHECK(a == render_stereographic(walls));
    CHECK(count(a, "class=\"wall\"") == 2);
    CHECK(count(a, "class=\"back\"") >= 1);
    CHECK(count(a, "class=\"front\"") >= 1);
}

TEST_CASE("dot export")
{
    CHECK(export_dot("mutation", {}, {}) == "digraph mutation {\n}\n");
    std::string dot = export_dot("mutation", {"(T: 1 | P:)", "(T: | P: \"x\")"}, {{0, 1, "1"}});
    CHECK(count(dot, "[label=") == 3);
    CHECK(dot.find("n0 -> n1 [label=\"1\"];") != std::string::npos);
    CHECK(dot.find("\\\"x\\\"") != std::string::npos);
}
