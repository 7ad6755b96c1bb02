#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "taufan/algebra.hpp"
#include "taufan/error.hpp"
#include "test_support.hpp"

#include <functional>

using namespace taufan;

namespace {

std::vector<std::string> basis_names(const Algebra& alg)
{
    std::vector<std::string> out;
    for (const auto& p : alg.basis())
        out.push_back(alg.path_string(p));
    return out;
}

// Independent count for homogeneous relations: enumerate every path of each
// length L < N without pruning, span all u*rho*w of length L densely, and
// subtract the rank.
int brute_force_dimension(const Algebra& alg)
{
    const Quiver& q = alg.quiver();
    const Field& F = alg.field();
    std::vector<std::vector<Path>> by_len(alg.nil_bound() + 1);
    for (int v = 0; v < q.vertex_count; ++v)
        by_len[0].push_back(Path{v, v, {}});
    for (int L = 1; L <= alg.nil_bound(); ++L)
        for (const auto& p : by_len[L - 1])
            for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
                if (q.arrows[a].source == p.target) {
                    Path e = p;
                    e.arrows.push_back(a);
                    e.target = q.arrows[a].target;
                    by_len[L].push_back(e);
                }
    int total = 0;
    for (int L = 0; L < alg.nil_bound(); ++L) {
        const auto& paths = by_len[L];
        auto find = [&](const std::vector<int>& arrows, int source) {
            for (size_t i = 0; i < paths.size(); ++i)
                if (paths[i].arrows == arrows && paths[i].source == source)
                    return static_cast<int>(i);
            return -1;
        };
        std::vector<QVec> rows;
        for (const auto& rel : alg.relations()) {
            int len = static_cast<int>(rel.terms[0].arrows.size());
            int s = q.arrows[rel.terms[0].arrows.front()].source;
            int t = q.arrows[rel.terms[0].arrows.back()].target;
            for (int lu = 0; lu + len <= L; ++lu) {
                int lw = L - len - lu;
                for (const auto& u : by_len[lu]) {
                    if (u.target != s)
                        continue;
                    for (const auto& w : by_len[lw]) {
                        if (w.source != t)
                            continue;
                        QVec row(paths.size());
                        for (const auto& term : rel.terms) {
                            std::vector<int> full = u.arrows;
                            full.insert(full.end(), term.arrows.begin(), term.arrows.end());
                            full.insert(full.end(), w.arrows.begin(), w.arrows.end());
                            int idx = find(full, u.source);
                            row[idx] = F.add(row[idx], term.coefficient);
                        }
                        rows.push_back(row);
                    }
                }
            }
        }
        int r = rows.empty() ? 0 : linalg::rank(F, Matrix::from_rows(rows, static_cast<int>(paths.size())));
        total += static_cast<int>(paths.size()) - r;
    }
    return total;
}

}  // namespace

TEST_CASE("A2 path basis")
{
    auto alg = load_data_algebra("a2.alg");
    CHECK(alg->dimension() == 3);
    CHECK(basis_names(*alg) == std::vector<std::string>{"e1", "e2", "a"});
    CHECK(alg->symmetrizer() == Matrix::identity(2));
}

TEST_CASE("3-cycle modulo rad^2")
{
    auto alg = load_data_algebra("cycle3.alg");
    CHECK(alg->dimension() == 6);
    CHECK(basis_names(*alg) == std::vector<std::string>{"e1", "e2", "e3", "a", "b", "c"});
    for (const auto& p : alg->basis())
        CHECK(p.length() < 2);
    CHECK(alg->symmetrizer() == Matrix::identity(3));
    for (const auto& r : alg->relations())
        CHECK(alg->relation_vanishes(r));
}

TEST_CASE("Kronecker basis")
{
    auto alg = load_data_algebra("kronecker.alg");
    CHECK(alg->dimension() == 4);
    CHECK(basis_names(*alg) == std::vector<std::string>{"e1", "e2", "a", "b"});
}

TEST_CASE("semisimple algebra with no arrows")
{
    auto alg = parse_algebra("vertices 2\n");
    CHECK(basis_names(*alg) == std::vector<std::string>{"e1", "e2"});
}

TEST_CASE("commutativity relation")
{
    auto alg = load_data_algebra("commutative_square.alg");
    // e1..e4, a, b, c, d, and one surviving length-2 path
    CHECK(alg->dimension() == 9);
    CHECK(alg->dimension() == brute_force_dimension(*alg));
    for (const auto& r : alg->relations())
        CHECK(alg->relation_vanishes(r));
    // a*b and c*d are identified
    Element ab = alg->reduce(0, {0, 1});
    Element cd = alg->reduce(0, {2, 3});
    CHECK(ab == cd);
    CHECK(ab.size() == 1);
}

TEST_CASE("basis count agrees with the dense oracle")
{
    const char* texts[] = {
        "vertices 3\narrow a 1 2\narrow b 2 3\nrelation a*b\n",
        "vertices 3\narrow a 1 2\narrow b 2 3\n",
        "field f3\nvertices 1\narrow x 1 1\nrelation x*x*x\nnilbound 3\n",
        "field q\nvertices 2\narrow x 1 1\narrow a 1 2\nrelation x*x\nrelation x*a\n",
        "field f5\nvertices 3\narrow a 1 2\narrow b 1 2\narrow c 2 3\narrow d 2 3\n"
        "relation a*c - b*d\nrelation a*d\nrelation b*c\n",
        "field q\nvertices 2\narrow x 1 1\narrow y 1 1\nrelation x*y - y*x\nrelation x*x\nrelation y*y\n",
    };
    for (const char* t : texts) {
        auto alg = parse_algebra(t);
        CHECK(alg->dimension() == brute_force_dimension(*alg));
        for (const auto& r : alg->relations())
            CHECK(alg->relation_vanishes(r));
    }
}

TEST_CASE("canonical serialization round-trips")
{
    for (const char* name : {"a2.alg", "cycle3.alg", "kronecker.alg", "commutative_square.alg", "cycle3_q.alg"}) {
        auto alg = load_data_algebra(name);
        auto again = parse_algebra(alg->serialize());
        CHECK(alg->structurally_equal(*again));
        CHECK(again->serialize() == alg->serialize());
    }
    auto alg = parse_algebra("field q\nvertices 2\narrow x 1 1\narrow y 1 1\n"
                             "relation 1/2*x*y - 3*y*x\nrelation x*x\nrelation y*y\nrelation x*y*x\n");
    CHECK(alg->structurally_equal(*parse_algebra(alg->serialize())));
}

TEST_CASE("parse errors carry line and column")
{
    auto column_of = [](const std::string& text) {
        try {
            parse_algebra(text);
        } catch (const ParseError& e) {
            return std::make_pair(e.line(), e.column());
        }
        return std::make_pair(0, 0);
    };
    CHECK(column_of("vertices 2\narrow a 1 3\n") == std::make_pair(2, 11));
    CHECK(column_of("vertices 2\n  bogus 1\n") == std::make_pair(2, 3));
    CHECK(column_of("vertices 2\narrow a 1 2\nrelation a*z\n") == std::make_pair(3, 12));
    CHECK(column_of("field f4\nvertices 1\n").first == 1);
    CHECK_THROWS_AS(parse_algebra("vertices 2\narrow a 1 2\nrelation a\n"), ParseError);
}

TEST_CASE("unbounded algebras are rejected")
{
    CHECK_THROWS_AS(parse_algebra("vertices 1\narrow x 1 1\n"), Error);
    CHECK_THROWS_AS(parse_algebra("vertices 2\narrow a 1 2\narrow b 2 1\n"), Error);
    // the default bound (arrows * vertices + 1 = 2) is too small for x^4 = 0
    CHECK_THROWS_AS(parse_algebra("vertices 1\narrow x 1 1\nrelation x*x*x*x\n"), Error);
    auto bounded = parse_algebra("vertices 1\narrow x 1 1\nrelation x*x*x*x\nnilbound 4\n");
    CHECK(bounded->dimension() == 4);
}

TEST_CASE("opposite algebra reverses arrows and relations")
{
    auto alg = load_data_algebra("commutative_square.alg");
    auto op = alg->opposite();
    CHECK(op->dimension() == alg->dimension());
    CHECK(op->quiver().arrows[0].source == 1);
    CHECK(op->quiver().arrows[0].target == 0);
    CHECK(op->opposite()->structurally_equal(*alg));
}
