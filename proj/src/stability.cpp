#include "taufan/stability.hpp"

#include "taufan/error.hpp"

#include <algorithm>

namespace taufan {

namespace {

QVec weighted(const Algebra& alg, const IntVec& d)
{
    Matrix sym = alg.symmetrizer();
    QVec out(d.size(), 0);
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = 0; j < d.size(); ++j)
            out[i] += sym(static_cast<int>(i), static_cast<int>(j)) * d[j];
    return out;
}

}  // namespace

Scalar pairing(const Algebra& alg, const QVec& v, const IntVec& d)
{
    if (static_cast<int>(v.size()) != alg.vertex_count() || static_cast<int>(d.size()) != alg.vertex_count())
        throw usage_error("stability", "vector length does not match the number of vertices");
    return dot(v, weighted(alg, d));
}

ProfiledModule profile(const Representation& m)
{
    ProfiledModule p;
    p.dims = m.dims();
    SubmoduleProfile sp = m.field().is_prime() ? submodule_profile(m) : submodule_profile_mod_primes(m, {2});
    for (const auto& u : sp.dims) {
        bool zero = std::all_of(u.begin(), u.end(), [](int x) { return x == 0; });
        if (!zero && u != p.dims)
            p.proper.push_back(u);
    }
    return p;
}

std::vector<ProfiledModule> profile_catalog(const IndecomposableCatalog& catalog)
{
    std::vector<ProfiledModule> out;
    for (const auto& e : catalog.entries())
        out.push_back(profile(e.module));
    return out;
}

bool is_semistable(const Algebra& alg, const ProfiledModule& m, const QVec& v)
{
    if (pairing(alg, v, m.dims) != 0)
        return false;
    for (const auto& u : m.proper)
        if (pairing(alg, v, u) > 0)
            return false;
    return true;
}

bool is_stable(const Algebra& alg, const ProfiledModule& m, const QVec& v)
{
    if (pairing(alg, v, m.dims) != 0)
        return false;
    for (const auto& u : m.proper)
        if (pairing(alg, v, u) >= 0)
            return false;
    return true;
}

bool is_semistable(const Representation& m, const QVec& v)
{
    return is_semistable(m.algebra(), profile(m), v);
}

bool is_stable(const Representation& m, const QVec& v)
{
    return !m.is_zero() && is_stable(m.algebra(), profile(m), v);
}

StabilitySpace stability_space(const Algebra& alg, const ProfiledModule& m)
{
    StabilitySpace s;
    s.dims = m.dims;
    s.cone.ambient = alg.vertex_count();
    s.cone.equalities.push_back(weighted(alg, m.dims));
    for (const auto& u : m.proper)
        s.cone.inequalities.push_back(weighted(alg, u));
    s.dimension = dimension(s.cone);
    s.codim = alg.vertex_count() - s.dimension;
    return s;
}

StabilitySpace stability_space(const Representation& m)
{
    return stability_space(m.algebra(), profile(m));
}

bool is_wall(const Representation& m)
{
    return stability_space(m).codim == 1;
}

bool sum_rule_check(const Representation& m, const Representation& n)
{
    VCone sum = generators_of(stability_space(direct_sum_module({m, n})).cone);
    return contains(stability_space(m).cone, sum) && contains(stability_space(n).cone, sum);
}

std::vector<Chamber> chambers(ModuleRegistry& reg, const MutationGraph& graph)
{
    std::vector<Chamber> out;
    for (const auto& node : graph.nodes)
        out.push_back({node, cone_of_pair(reg, node)});
    return out;
}

std::vector<int> semistable_indecs(const Algebra& alg, const std::vector<ProfiledModule>& profiles, const QVec& v)
{
    std::vector<int> out;
    for (size_t i = 0; i < profiles.size(); ++i)
        if (is_semistable(alg, profiles[i], v))
            out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> stable_indecs(const Algebra& alg, const std::vector<ProfiledModule>& profiles, const QVec& v)
{
    std::vector<int> out;
    for (size_t i = 0; i < profiles.size(); ++i)
        if (is_stable(alg, profiles[i], v))
            out.push_back(static_cast<int>(i));
    return out;
}

Location locate(ModuleRegistry& reg, const MutationGraph& graph, const std::vector<ProfiledModule>& profiles,
                const QVec& v)
{
    Location loc;
    const Algebra& alg = *reg.algebra();
    for (size_t i = 0; i < graph.nodes.size(); ++i)
        if (static_cast<int>(graph.nodes[i].size()) == alg.vertex_count() &&
            cone_contains(reg, graph.nodes[i], v, true)) {
            loc.chamber = static_cast<int>(i);
            break;
        }
    for (int i : semistable_indecs(alg, profiles, v))
        if (stability_space(alg, profiles[i]).codim == 1)
            loc.walls.push_back(i);
    return loc;
}

std::vector<int> perpendicular_category(ModuleRegistry& reg, const TauPair& pair, const IndecomposableCatalog& catalog)
{
    std::vector<int> out;
    for (int i = 0; i < catalog.size(); ++i) {
        const Representation& x = catalog[i].module;
        bool ok = true;
        for (int v : pair.p)
            ok = ok && x.dim(v) == 0;
        for (int id : pair.t) {
            if (!ok)
                break;
            ok = hom_dim(reg[id].module, x) == 0 && (reg[id].tau.is_zero() || hom_dim(x, reg[id].tau) == 0);
        }
        if (ok)
            out.push_back(i);
    }
    return out;
}

BktMembership bkt_membership(const Algebra& alg, const ProfiledModule& m, const QVec& v)
{
    BktMembership b{true, true, true, true};
    auto check_sub = [&](const IntVec& u) {
        Scalar s = pairing(alg, v, u);
        if (s >= 0)
            b.torsion_free = false;
        if (s > 0)
            b.torsion_free_closure = false;
    };
    auto check_quot = [&](const IntVec& q) {
        Scalar s = pairing(alg, v, q);
        if (s <= 0)
            b.torsion = false;
        if (s < 0)
            b.torsion_closure = false;
    };
    check_sub(m.dims);
    check_quot(m.dims);
    for (const auto& u : m.proper) {
        check_sub(u);
        IntVec q(u.size());
        for (size_t i = 0; i < u.size(); ++i)
            q[i] = m.dims[i] - u[i];
        check_quot(q);
    }
    return b;
}

namespace {

std::vector<std::vector<Matrix>> slope_zero_maximal(const Representation& m, const QVec& v)
{
    const Algebra& alg = m.algebra();
    std::vector<std::vector<Matrix>> best;
    int best_dim = 0;
    for (const auto& s : enumerate_submodules(m)) {
        IntVec d;
        int total = 0;
        for (const auto& b : s) {
            d.push_back(b.cols());
            total += b.cols();
        }
        if (total == 0 || total == m.total_dim() || pairing(alg, v, d) != 0)
            continue;
        if (total > best_dim) {
            best.clear();
            best_dim = total;
        }
        if (total == best_dim)
            best.push_back(s);
    }
    return best;
}

void require_semistable(const Representation& m, const QVec& v)
{
    if (!m.field().is_prime())
        throw Error(ErrorKind::Unsupported, "stability", "stable filtrations need explicit submodules over a prime field");
    if (!is_semistable(m, v))
        throw usage_error("stability", "module " + loewy_name(m) + " is not semistable at " + vector_string(v));
}

void collect_multisets(const Representation& m, const QVec& v, std::vector<IntVec> acc,
                       std::set<std::vector<IntVec>>& out, int& budget)
{
    if (--budget < 0)
        throw budget_error("stability", "too many filtration choices to explore");
    auto cands = slope_zero_maximal(m, v);
    if (cands.empty()) {
        acc.push_back(m.dims());
        std::sort(acc.begin(), acc.end());
        out.insert(acc);
        return;
    }
    for (const auto& c : cands) {
        SubRep l = subrepresentation(m, c);
        auto next = acc;
        next.push_back(quotient(m, c).module.dims());
        collect_multisets(l.module, v, next, out, budget);
    }
}

}  // namespace

StableFiltration stable_filtration(const Representation& m, const QVec& v, int choice)
{
    require_semistable(m, v);
    StableFiltration f;
    std::vector<Representation> tops;
    Representation cur = m;
    std::vector<IntVec> dims_chain{m.dims()};
    while (true) {
        auto cands = slope_zero_maximal(cur, v);
        if (cands.empty()) {
            tops.push_back(cur);
            break;
        }
        const auto& c = cands[static_cast<size_t>(choice) % cands.size()];
        tops.push_back(quotient(cur, c).module);
        cur = subrepresentation(cur, c).module;
        dims_chain.push_back(cur.dims());
    }
    std::reverse(tops.begin(), tops.end());
    std::reverse(dims_chain.begin(), dims_chain.end());
    f.chain.push_back(IntVec(m.dims().size(), 0));
    f.chain.insert(f.chain.end(), dims_chain.begin(), dims_chain.end());
    for (const auto& t : tops) {
        if (!is_stable(t, v))
            throw inconsistency("stability", "filtration factor " + loewy_name(t) + " is not stable");
        f.factors.push_back(t);
        f.factor_dims.push_back(t.dims());
    }
    return f;
}

std::set<std::vector<IntVec>> stable_factor_multisets(const Representation& m, const QVec& v, int budget)
{
    require_semistable(m, v);
    std::set<std::vector<IntVec>> out;
    collect_multisets(m, v, {}, out, budget);
    return out;
}

int wall_label(ModuleRegistry& reg, const TauPair& pair, int position, const std::vector<ProfiledModule>& profiles)
{
    TauPair facet = pair;
    if (position < static_cast<int>(pair.t.size()))
        facet.t.erase(facet.t.begin() + position);
    else
        facet.p.erase(facet.p.begin() + (position - static_cast<int>(pair.t.size())));
    QVec v = interior_sample(reg, facet);
    auto stables = stable_indecs(*reg.algebra(), profiles, v);
    if (stables.size() != 1)
        throw inconsistency("stability", "facet of " + pair_string(reg, pair) + " at position " +
                                             std::to_string(position) + " has " + std::to_string(stables.size()) +
                                             " stable modules in the catalog, expected 1");
    return stables[0];
}

bool is_kronecker(const Algebra& alg)
{
    const auto& q = alg.quiver();
    if (q.vertex_count != 2 || q.arrows.size() != 2 || !alg.relations().empty())
        return false;
    return q.arrows[0].source == q.arrows[1].source && q.arrows[0].target == q.arrows[1].target &&
           q.arrows[0].source != q.arrows[0].target;
}

std::vector<ClosedFormWall> kronecker_walls(int m_max)
{
    if (m_max < 0)
        throw usage_error("stability", "Kronecker depth must be nonnegative");
    std::vector<ClosedFormWall> out;
    out.push_back({"2", {0, 1}, {1, 0}, true, false});
    out.push_back({"1", {1, 0}, {0, 1}, true, false});
    auto tag = [](const std::string& base, const std::string& power, int m) {
        return base + "^" + power + std::to_string(m);
    };
    for (int m = 0; m <= m_max; ++m) {
        if (m >= 1)
            out.push_back({tag("tau", "-", m) + "(2)", {2 * m, 2 * m + 1}, {2 * m + 1, -2 * m}, false, false});
        out.push_back({m ? tag("tau", "-", m) + "(1/22)" : "1/22", {2 * m + 1, 2 * m + 2}, {2 * (m + 1), -(2 * m + 1)},
                       false, false});
        if (m >= 1)
            out.push_back({tag("tau", "", m) + "(1)", {2 * m + 1, 2 * m}, {2 * m, -(2 * m + 1)}, false, false});
        out.push_back({m ? tag("tau", "", m) + "(11/2)" : "11/2", {2 * m + 2, 2 * m + 1}, {2 * m + 1, -2 * (m + 1)},
                       false, false});
    }
    out.push_back({"1/2(d,lambda)", {1, 1}, {1, -1}, false, true});
    return out;
}

}  // namespace taufan
