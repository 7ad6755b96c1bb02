#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "taufan/error.hpp"
#include "taufan/tau.hpp"
#include "test_support.hpp"

#include <set>

using namespace taufan;

namespace {

struct Setup {
    AlgebraPtr alg;
    IndecomposableCatalog catalog;
};

Setup setup(const std::string& file, IntVec bound)
{
    auto alg = load_data_algebra(file);
    return {alg, enumerate_indecomposables(alg, bound)};
}

std::set<std::string> ids(const IndecomposableCatalog& c, const TorsionClass& t)
{
    std::set<std::string> out;
    for (int i : t.members)
        out.insert(c[i].id);
    return out;
}

Representation by_id(const IndecomposableCatalog& c, const std::string& id)
{
    return c[*c.find_id(id)].module;
}

std::set<std::string> node_strings(ModuleRegistry& reg, const MutationGraph& g)
{
    std::set<std::string> out;
    for (const auto& n : g.nodes)
        out.insert(pair_string(reg, n));
    return out;
}

}  // namespace

TEST_CASE("tau-rigidity in A2")
{
    auto s = setup("a2.alg", {1, 1});
    auto s1 = by_id(s.catalog, "1");
    auto s2 = by_id(s.catalog, "2");
    auto p1 = by_id(s.catalog, "1/2");
    CHECK(is_tau_rigid(p1));
    CHECK(is_tau_rigid(s2));
    CHECK_FALSE(is_tau_rigid(direct_sum_module({s1, s2})));
    CHECK(is_tau_rigid(direct_sum_module({p1, s1})));

    ModuleRegistry reg(s.alg, &s.catalog);
    TauPair all{{reg.projective_id(0), reg.projective_id(1)}, {}};
    normalize_pair(reg, all);
    CHECK(is_tau_tilting_pair(reg, all));
    TauPair sp{{reg.intern(s2)}, {0}};
    CHECK(is_tau_tilting_pair(reg, sp));
    TauPair half{{reg.intern(p1)}, {}};
    CHECK(is_tau_rigid_pair(reg, half));
    CHECK_FALSE(is_tau_tilting_pair(reg, half));
    TauPair bad{{reg.intern(p1)}, {1}};
    CHECK_FALSE(is_tau_rigid_pair(reg, bad));
}

TEST_CASE("Fac, torsion submodules and Filt(Fac)")
{
    auto s = setup("a2.alg", {1, 1});
    auto s1 = by_id(s.catalog, "1");
    auto s2 = by_id(s.catalog, "2");
    auto p1 = by_id(s.catalog, "1/2");
    CHECK(ids(s.catalog, fac({p1}, s.catalog)) == std::set<std::string>{"1", "1/2"});
    CHECK(fac({}, s.catalog).members.empty());
    CHECK(fac({s2, p1}, s.catalog).members.size() == 3);
    CHECK_THROWS_AS(fac({s1, s2}, s.catalog), Error);

    CHECK(torsion_submodule({p1}, s2).torsion.module.is_zero());
    auto t = torsion_submodule({s2}, p1);
    CHECK(t.torsion.module.dims() == IntVec{0, 1});
    CHECK(t.free.module.dims() == IntVec{1, 0});
    CHECK(torsion_submodule({p1}, p1).torsion.module.dims() == IntVec{1, 1});

    CHECK(filt_fac({s1, s2}, s.catalog).members.size() == 3);
    CHECK(filt_fac({}, s.catalog).members.empty());
    CHECK(ids(s.catalog, filt_fac({p1}, s.catalog)) == std::set<std::string>{"1", "1/2"});
    auto c = filt_fac({s1}, s.catalog);
    CHECK(closed_under_quotients(c, s.catalog));
    CHECK(closed_under_extensions(c, s.catalog));
    TorsionClass not_closed{{*s.catalog.find_id("1/2")}};
    CHECK_FALSE(closed_under_quotients(not_closed, s.catalog));
}

TEST_CASE("Ext-projectives recover the generator")
{
    auto s = setup("a2.alg", {1, 1});
    auto p1 = by_id(s.catalog, "1/2");
    auto s1 = by_id(s.catalog, "1");
    auto c = fac({p1}, s.catalog);
    auto ps = p_of_torsion_class(c, s.catalog);
    std::set<std::string> names;
    for (int i : ps)
        names.insert(s.catalog[i].id);
    CHECK(names == std::set<std::string>{"1", "1/2"});
    TorsionClass all;
    for (int i = 0; i < s.catalog.size(); ++i)
        all.members.insert(i);
    names.clear();
    for (int i : p_of_torsion_class(all, s.catalog))
        names.insert(s.catalog[i].id);
    CHECK(names == std::set<std::string>{"2", "1/2"});
    (void)s1;
}

TEST_CASE("left approximations")
{
    auto s = setup("a2.alg", {1, 1});
    auto s1 = by_id(s.catalog, "1");
    auto s2 = by_id(s.catalog, "2");
    auto p1 = by_id(s.catalog, "1/2");
    auto a = left_approximation(s2, {p1});
    CHECK(a.target.dims() == IntVec{1, 1});
    CHECK(is_left_approximation(s2, {p1}, a));
    auto b = left_approximation(p1, {s1});
    CHECK(b.target.dims() == IntVec{1, 0});
    CHECK(is_epimorphism(s.alg->field(), b.target, b.map));
    auto c = left_approximation(p1, {p1, s1});
    CHECK(c.target.dims() == IntVec{1, 1});
    CHECK(is_isomorphism(s.alg->field(), c.map));
    auto twice = left_approximation(s2, {direct_sum_module({p1, p1})});
    CHECK(twice.target.dims() == IntVec{1, 1});
}

TEST_CASE("A2 mutations")
{
    auto s = setup("a2.alg", {1, 1});
    ModuleRegistry reg(s.alg, &s.catalog);
    TauPair top{{reg.projective_id(0), reg.projective_id(1)}, {}};
    normalize_pair(reg, top);
    int at_p2 = -1, at_p1 = -1;
    for (int i = 0; i < 2; ++i)
        (reg[top.t[i]].name == "2" ? at_p2 : at_p1) = i;
    auto m1 = mutate(reg, top, at_p2);
    CHECK(pair_string(reg, m1.pair) == "(T: 1,1/2 | P:)");
    CHECK(m1.left);
    CHECK(m1.constructive);
    auto m2 = mutate(reg, top, at_p1);
    CHECK(pair_string(reg, m2.pair) == "(T: 2 | P: 1/2)");
    CHECK(m2.left);
    // mutating back at the new summand returns the original pair
    int back = -1;
    for (int i = 0; i < m1.pair.size(); ++i)
        if (reg[m1.pair.t[i]].name == "1")
            back = i;
    auto again = mutate(reg, m1.pair, back);
    CHECK(again.pair == top);
    CHECK_FALSE(again.left);
}

TEST_CASE("mutation graphs of the finite examples")
{
    {
        auto s = setup("a2.alg", {1, 1});
        ModuleRegistry reg(s.alg, &s.catalog);
        auto g = mutation_graph(reg);
        CHECK(g.complete);
        CHECK(g.nodes.size() == 5);
        CHECK(g.edges.size() == 5);
        CHECK(g.fallbacks == 0);
        CHECK(node_strings(reg, g) == std::set<std::string>{"(T: 2,1/2 | P:)", "(T: 1,1/2 | P:)", "(T: 1 | P: 2)",
                                                              "(T: 2 | P: 1/2)", "(T: | P: 1/2,2)"});
        auto h = hasse(reg, g);
        REQUIRE(h.top >= 0);
        REQUIRE(h.bottom >= 0);
        CHECK(pair_string(reg, h.nodes[h.top]) == "(T: 2,1/2 | P:)");
        CHECK(pair_string(reg, h.nodes[h.bottom]) == "(T: | P: 1/2,2)");
    }
    {
        auto s = setup("cycle3.alg", {1, 1, 1});
        ModuleRegistry reg(s.alg, &s.catalog);
        auto g = mutation_graph(reg);
        CHECK(g.complete);
        CHECK(g.nodes.size() == 14);
        CHECK(g.edges.size() == 21);
        CHECK(g.fallbacks == 0);
        std::vector<int> degree(g.nodes.size(), 0);
        for (const auto& e : g.edges) {
            ++degree[e.from];
            ++degree[e.to];
        }
        for (int d : degree)
            CHECK(d == 3);
        auto h = hasse(reg, g);
        CHECK(h.top >= 0);
        CHECK(h.bottom >= 0);
        for (const auto& n : g.nodes) {
            CHECK(is_tau_tilting_pair(reg, n));
            auto fc = fac(t_modules(reg, n), s.catalog);
            std::set<int> expected;
            for (int id : n.t)
                expected.insert(reg[id].catalog_index);
            auto ps = p_of_torsion_class(fc, s.catalog);
            CHECK(std::set<int>(ps.begin(), ps.end()) == expected);
        }
    }
}

TEST_CASE("Kronecker traversal hits a cap")
{
    auto s = setup("kronecker.alg", {1, 1});
    ModuleRegistry reg(s.alg, &s.catalog);
    GraphLimits lim;
    lim.max_nodes = 12;
    auto g = mutation_graph(reg, lim);
    CHECK_FALSE(g.complete);
    CHECK(g.nodes.size() <= 12);
    for (const auto& n : g.nodes)
        CHECK(is_tau_tilting_pair(reg, n));
    auto full = mutation_graph(reg);
    CHECK_FALSE(full.complete);
    CHECK(full.cap == "max_module_dim");
}

TEST_CASE("commutative square over f3")
{
    auto alg = load_data_algebra("commutative_square.alg");
    ModuleRegistry reg(alg);
    auto g = mutation_graph(reg);
    CHECK(g.complete);
    for (const auto& n : g.nodes)
        CHECK(is_tau_tilting_pair(reg, n));
    std::vector<int> degree(g.nodes.size(), 0);
    for (const auto& e : g.edges) {
        ++degree[e.from];
        ++degree[e.to];
    }
    for (int d : degree)
        CHECK(d == 4);
    MESSAGE("commutative square pairs: " << g.nodes.size());
}
