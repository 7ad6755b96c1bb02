#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "taufan/error.hpp"
#include "taufan/gfan.hpp"
#include "test_support.hpp"

using namespace taufan;

namespace {

struct World {
    AlgebraPtr alg;
    IndecomposableCatalog catalog;
    ModuleRegistry reg;
    MutationGraph graph;

    World(const std::string& file, const IntVec& bound)
        : alg(load_data_algebra(file)), catalog(enumerate_indecomposables(alg, bound)), reg(alg, &catalog)
    {
        graph = mutation_graph(reg);
    }

    int id(const std::string& name) { return reg.intern(catalog[*catalog.find_id(name)].module); }

    TauPair pair(std::vector<std::string> t, std::vector<int> p)
    {
        TauPair out;
        for (const auto& n : t)
            out.t.push_back(id(n));
        out.p = p;
        normalize_pair(reg, out);
        return out;
    }
};

QVec q(std::initializer_list<int> xs)
{
    QVec v;
    for (int x : xs)
        v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("g-vectors")
{
    auto a2 = load_data_algebra("a2.alg");
    CHECK(g_vector(simple(a2, 1)) == IntVec{0, 1});
    CHECK(g_vector(projective(a2, 0)) == IntVec{1, 0});
    CHECK(g_vector(simple(a2, 0)) == IntVec{1, -1});
    auto c3 = load_data_algebra("cycle3.alg");
    CHECK(g_vector(simple(c3, 0)) == IntVec{1, -1, 0});
    CHECK(g_vector(simple(c3, 1)) == IntVec{0, 1, -1});
    CHECK(g_vector(simple(c3, 2)) == IntVec{-1, 0, 1});
    for (int i = 0; i < 3; ++i) {
        IntVec e(3, 0);
        e[i] = 1;
        CHECK(g_vector(projective(c3, i)) == e);
    }
}

TEST_CASE("G- and C-matrices")
{
    World w("cycle3.alg", {1, 1, 1});
    auto top = w.pair({"1/2", "2/3", "3/1"}, {});
    CHECK(g_matrix(w.reg, top) == Matrix::identity(3));
    CHECK(c_matrix(w.reg, top) == Matrix::identity(3));
    auto c5 = w.pair({"3", "2/3"}, {0});
    CHECK(g_matrix(w.reg, c5) == Matrix::from_int_rows({{-1, 0, -1}, {0, 1, 0}, {1, 0, 0}}));
    CHECK(c_matrix(w.reg, c5).transpose() == Matrix::from_int_rows({{0, 0, 1}, {0, 1, 0}, {-1, 0, -1}}));
    auto bottom = w.pair({}, {0, 1, 2});
    Matrix minus = Matrix::from_int_rows({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
    CHECK(g_matrix(w.reg, bottom) == minus);
    CHECK(c_matrix(w.reg, bottom) == minus);
    CHECK_THROWS_AS(g_matrix(w.reg, w.pair({"1/2"}, {})), Error);

    for (const auto& n : w.graph.nodes) {
        Scalar det = linalg::determinant(Field::rationals(), g_matrix(w.reg, n));
        CHECK((det == 1 || det == -1));
        CHECK(sign_coherent(c_matrix(w.reg, n)));
    }
}

TEST_CASE("cone membership")
{
    World w("a2.alg", {1, 1});
    auto top = w.pair({"2", "1/2"}, {});
    CHECK(cone_contains(w.reg, top, q({1, 1}), true));
    CHECK_FALSE(cone_contains(w.reg, top, q({0, 1}), true));
    CHECK(cone_contains(w.reg, top, q({0, 1}), false));
    CHECK(cone_contains(w.reg, top, q({0, 0}), false));
    CHECK_FALSE(cone_contains(w.reg, top, q({0, 0}), true));
    auto s1s2 = w.pair({"1"}, {1});
    CHECK(cone_contains(w.reg, s1s2, q({1, -2}), true));
    CHECK_FALSE(cone_contains(w.reg, s1s2, q({2, -1}), false));
    auto empty = w.pair({}, {});
    CHECK(cone_contains(w.reg, empty, q({0, 0}), false));
}

TEST_CASE("exact cone intersections")
{
    World w("a2.alg", {1, 1});
    auto a = constraints_of(cone_of_pair(w.reg, w.pair({"2", "1/2"}, {})));
    auto b = constraints_of(cone_of_pair(w.reg, w.pair({"1", "1/2"}, {})));
    VCone meet = generators_of(intersect(a, b));
    CHECK(meet.lineality.empty());
    REQUIRE(meet.rays.size() == 1);
    CHECK(meet.rays[0] == q({1, 0}));

    HCone half;
    half.ambient = 3;
    half.inequalities.push_back(q({0, 0, -1}));
    VCone hg = generators_of(half);
    CHECK(hg.lineality.size() == 2);
    CHECK(hg.rays.size() == 1);
    CHECK(dimension(hg) == 3);

    VCone hull = cone_hull(3, {q({1, 0, 0}), q({0, 1, 0}), q({1, 1, 0}), q({2, 0, 0})});
    CHECK(hull.rays.size() == 2);
    CHECK(dimension(hull) == 2);
    CHECK(same_cone(hull, cone_hull(3, {q({3, 0, 0}), q({0, 5, 0})})));
}

TEST_CASE("fan property on the finite examples")
{
    World a2("a2.alg", {1, 1});
    auto ra = fan_check(a2.reg, a2.graph.nodes);
    CHECK(ra.pairs_checked == 10);
    CHECK(ra.violations.empty());
    World c3("cycle3.alg", {1, 1, 1});
    auto rc = fan_check(c3.reg, c3.graph.nodes);
    CHECK(rc.pairs_checked == 91);
    CHECK(rc.violations.empty());
}

TEST_CASE("brick matrices and semibricks")
{
    World w("cycle3.alg", {1, 1, 1});
    IntVec simples_idx{*w.catalog.find_id("1"), *w.catalog.find_id("2"), *w.catalog.find_id("3")};
    std::vector<IntVec> simple_dims{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto top = w.pair({"1/2", "2/3", "3/1"}, {});
    auto rep = brick_matrix_check(w.reg, top, simple_dims);
    CHECK(rep.diagonal);
    CHECK(rep.unit_signs);
    CHECK(rep.signs == std::vector<Scalar>{1, 1, 1});
    auto split = semibrick_split(w.reg, top, simples_idx, rep.signs, w.catalog);
    CHECK(split.plus.size() == 3);
    CHECK(split.minus.empty());
    CHECK(split.hom_vanishing);
    CHECK(split.filt_matches);

    auto bottom = w.pair({}, {0, 1, 2});
    auto rb = brick_matrix_check(w.reg, bottom, simple_dims);
    CHECK(rb.signs == std::vector<Scalar>{-1, -1, -1});
    auto sb = semibrick_split(w.reg, bottom, simples_idx, rb.signs, w.catalog);
    CHECK(sb.plus.empty());
    CHECK(sb.minus.size() == 3);
    CHECK(sb.filt_matches);
}

TEST_CASE("AR pairing on A2 and the 3-cycle")
{
    for (auto [file, bound] : {std::pair<const char*, IntVec>{"a2.alg", {1, 1}}, {"cycle3.alg", {1, 1, 1}}}) {
        auto alg = load_data_algebra(file);
        auto cat = enumerate_indecomposables(alg, bound);
        for (const auto& m : cat.entries()) {
            IntVec g = g_vector(m.module);
            Representation tm = ar_translate(m.module);
            for (const auto& n : cat.entries()) {
                int lhs = 0;
                for (size_t i = 0; i < g.size(); ++i)
                    lhs += g[i] * n.module.dim(static_cast<int>(i));
                int rhs = hom_dim(m.module, n.module) - (tm.is_zero() ? 0 : hom_dim(n.module, tm));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("g-vectors separate tau-rigid modules")
{
    World w("cycle3.alg", {1, 1, 1});
    std::set<IntVec> gs;
    for (int i = 0; i < w.reg.size(); ++i)
        gs.insert(w.reg[i].g);
    CHECK(static_cast<int>(gs.size()) == w.reg.size());
    CHECK(w.reg.size() == 6);
}
