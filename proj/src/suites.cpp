#include "taufan/suites.hpp"

#include "taufan/error.hpp"
#include "taufan/parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace taufan {

namespace {

const char* kInfinite = "tau-tilting infinite suspected";

struct Collector {
    SuiteResult r;
    std::mutex m;

    explicit Collector(std::string name) { r.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& what)
    {
        std::lock_guard<std::mutex> lock(m);
        ++r.checks;
        if (!ok && r.status != SuiteStatus::Fail) {
            r.status = SuiteStatus::Fail;
            r.detail = what();
        }
    }

    SuiteResult done() { return r; }
};

SuiteResult skipped(const std::string& name, const std::string& why)
{
    SuiteResult r;
    r.name = name;
    r.status = SuiteStatus::Skipped;
    r.detail = why;
    return r;
}

std::string vec(const QVec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

std::string ids(const IndecomposableCatalog& cat, const std::vector<int>& xs)
{
    std::string s = "{";
    for (size_t i = 0; i < xs.size(); ++i)
        s += (i ? "," : "") + cat[xs[i]].id;
    return s + "}";
}

bool finite(Engine& e)
{
    return e.graph().complete;
}

}  // namespace

std::string status_string(SuiteStatus s)
{
    switch (s) {
    case SuiteStatus::Pass: return "pass";
    case SuiteStatus::Fail: return "fail";
    case SuiteStatus::Skipped: return "skipped";
    }
    return "?";
}

std::vector<QVec> sample_vectors(Engine& e)
{
    std::set<QVec> out;
    if (finite(e))
        for (const auto& p : e.rigid_subpairs())
            out.insert(interior_sample(e.registry(), p));
    const int n = e.rank();
    QVec v(n, -1);
    while (true) {
        out.insert(v);
        int i = 0;
        while (i < n && v[i] == 1)
            v[i++] = -1;
        if (i == n)
            break;
        v[i] += 1;
    }
    return {out.begin(), out.end()};
}

SuiteResult suite_ar_pairing(Engine& e)
{
    Collector c("ar-pairing");
    const auto& cat = e.catalog();
    parallel_for(cat.size(), [&](int i) {
        const auto& m = cat[i].module;
        IntVec g = g_vector(m);
        Representation tm = ar_translate(m);
        for (int j = 0; j < cat.size(); ++j) {
            const auto& n = cat[j].module;
            int lhs = 0;
            for (size_t k = 0; k < g.size(); ++k)
                lhs += g[k] * n.dim(static_cast<int>(k));
            int rhs = hom_dim(m, n) - (tm.is_zero() ? 0 : hom_dim(n, tm));
            c.check(lhs == rhs, [&] {
                return "<g(" + cat[i].id + "), dim " + cat[j].id + "> = " + std::to_string(lhs) + " but hom - hom tau = " +
                       std::to_string(rhs);
            });
        }
    });
    return c.done();
}

SuiteResult suite_fan(Engine& e)
{
    if (!finite(e))
        return skipped("fan", kInfinite);
    Collector c("fan");
    FanReport rep = fan_check(e.registry(), e.graph().nodes);
    c.r.checks = rep.pairs_checked;
    if (!rep.violations.empty()) {
        c.r.status = SuiteStatus::Fail;
        c.r.detail = rep.violations.front();
    }
    return c.done();
}

SuiteResult suite_unimodularity(Engine& e)
{
    if (!finite(e))
        return skipped("unimodularity", kInfinite);
    Collector c("unimodularity");
    auto& reg = e.registry();
    for (const auto& node : e.graph().nodes) {
        Scalar det = 0;
        try {
            det = linalg::determinant(Field::rationals(), g_matrix(reg, node));
        } catch (const Error&) {
        }
        c.check(det == 1 || det == -1, [&] { return "det G" + pair_string(reg, node) + " = " + det.get_str(); });
    }
    return c.done();
}

SuiteResult suite_sign_coherence(Engine& e)
{
    if (!finite(e))
        return skipped("sign-coherence", kInfinite);
    Collector c("sign-coherence");
    auto& reg = e.registry();
    for (const auto& node : e.graph().nodes)
        c.check(sign_coherent(c_matrix(reg, node)), [&] { return "C" + pair_string(reg, node) + " is not sign-coherent"; });
    return c.done();
}

SuiteResult suite_semibricks(Engine& e)
{
    if (!finite(e))
        return skipped("semibricks", kInfinite);
    Collector c("semibricks");
    auto& reg = e.registry();
    const auto& cat = e.catalog();
    const auto& prof = e.profiles();
    for (const auto& node : e.graph().nodes) {
        std::vector<int> bricks;
        std::vector<IntVec> dims;
        for (int pos = 0; pos < node.size(); ++pos) {
            int b = wall_label(reg, node, pos, prof);
            bricks.push_back(b);
            dims.push_back(cat[b].module.dims());
        }
        auto name = pair_string(reg, node);
        auto bm = brick_matrix_check(reg, node, dims);
        c.check(bm.diagonal && bm.unit_signs, [&] { return "G^T B is not a signed identity at " + name; });
        if (!bm.unit_signs)
            continue;
        auto split = semibrick_split(reg, node, bricks, bm.signs, cat);
        c.check(split.hom_vanishing, [&] { return "brick labels of " + name + " are not Hom-orthogonal"; });
        c.check(split.filt_matches, [&] { return "Filt(Fac C+) differs from Fac T at " + name; });
    }
    return c.done();
}

SuiteResult suite_semistable_equivalence(Engine& e)
{
    if (!finite(e))
        return skipped("semistable-equivalence", kInfinite);
    Collector c("semistable-equivalence");
    auto& reg = e.registry();
    const auto& cat = e.catalog();
    for (const auto& pair : e.rigid_subpairs()) {
        QVec v = interior_sample(reg, pair);
        auto ss = semistable_indecs(*e.algebra(), e.profiles(), v);
        auto perp = perpendicular_category(reg, pair, cat);
        c.check(ss == perp, [&] {
            return "at " + vec(v) + " for " + pair_string(reg, pair) + ": semistable " + ids(cat, ss) + ", perpendicular " +
                   ids(cat, perp);
        });
    }
    return c.done();
}

SuiteResult suite_chamber_count(Engine& e)
{
    if (!finite(e))
        return skipped("chamber-count", kInfinite);
    Collector c("chamber-count");
    auto& reg = e.registry();
    auto ch = e.chamber_list();
    c.check(ch.size() == e.graph().nodes.size(), [&] { return "chambers and pairs differ in number"; });
    for (const auto& chamber : ch) {
        c.check(dimension(chamber.cone) == e.rank(), [&] { return "cone of " + pair_string(reg, chamber.pair) + " is not full"; });
        QVec v = interior_sample(reg, chamber.pair);
        auto ss = semistable_indecs(*e.algebra(), e.profiles(), v);
        c.check(ss.empty(), [&] { return "chamber sample " + vec(v) + " has semistable modules"; });
    }
    for (const auto& v : sample_vectors(e)) {
        if (!semistable_indecs(*e.algebra(), e.profiles(), v).empty())
            continue;
        int hits = 0;
        for (const auto& node : e.graph().nodes)
            hits += cone_contains(reg, node, v, true) ? 1 : 0;
        c.check(hits == 1, [&] { return vec(v) + " avoids every wall but lies in " + std::to_string(hits) + " chambers"; });
    }
    return c.done();
}

SuiteResult suite_stable_count(Engine& e)
{
    if (!finite(e))
        return skipped("stable-count", kInfinite);
    Collector c("stable-count");
    auto& reg = e.registry();
    for (const auto& pair : e.rigid_subpairs()) {
        QVec v = interior_sample(reg, pair);
        int stables = static_cast<int>(stable_indecs(*e.algebra(), e.profiles(), v).size());
        int expected = e.rank() - pair.size();
        c.check(stables == expected, [&] {
            return pair_string(reg, pair) + " at " + vec(v) + ": " + std::to_string(stables) + " stables, expected " +
                   std::to_string(expected);
        });
    }
    return c.done();
}

SuiteResult suite_wide(Engine& e)
{
    Collector c("wide-subcategory");
    const auto& cat = e.catalog();
    e.profiles();
    auto vs = sample_vectors(e);
    parallel_for(static_cast<int>(vs.size()), [&](int k) {
        const QVec& v = vs[k];
        auto ss = semistable_indecs(*e.algebra(), e.profiles(), v);
        for (int i : ss)
            for (int j : ss) {
                const auto& m = cat[i].module;
                const auto& n = cat[j].module;
                for (const auto& f : hom_basis(m, n).basis) {
                    auto ker = kernel(m, f).module;
                    auto cok = cokernel(n, f).module;
                    c.check(ker.is_zero() || is_semistable(ker, v),
                            [&] { return "kernel of a map " + cat[i].id + " -> " + cat[j].id + " at " + vec(v); });
                    c.check(cok.is_zero() || is_semistable(cok, v),
                            [&] { return "cokernel of a map " + cat[i].id + " -> " + cat[j].id + " at " + vec(v); });
                }
            }
    });
    return c.done();
}

SuiteResult suite_stable_brick(Engine& e)
{
    Collector c("stable-brick");
    const auto& cat = e.catalog();
    std::set<int> stable_somewhere;
    for (const auto& v : sample_vectors(e))
        for (int i : stable_indecs(*e.algebra(), e.profiles(), v))
            stable_somewhere.insert(i);
    for (int i : stable_somewhere)
        c.check(is_brick(cat[i].module), [&] { return cat[i].id + " is stable but not a brick"; });
    return c.done();
}

SuiteResult suite_bkt(Engine& e)
{
    Collector c("bkt");
    const auto& cat = e.catalog();
    const auto& prof = e.profiles();
    for (const auto& v : sample_vectors(e))
        for (int i = 0; i < cat.size(); ++i) {
            auto b = bkt_membership(*e.algebra(), prof[i], v);
            bool ss = is_semistable(*e.algebra(), prof[i], v);
            c.check(ss == (b.torsion_closure && b.torsion_free_closure),
                    [&] { return cat[i].id + " at " + vec(v) + ": semistability disagrees with the closures"; });
        }
    return c.done();
}

SuiteResult suite_rudakov(Engine& e)
{
    if (!e.algebra()->field().is_prime())
        return skipped("rudakov", "filtrations are enumerated over prime fields only");
    Collector c("rudakov");
    const auto& cat = e.catalog();
    e.profiles();
    auto vs = sample_vectors(e);
    parallel_for(static_cast<int>(vs.size()), [&](int k) {
        const QVec& v = vs[k];
        auto ss = semistable_indecs(*e.algebra(), e.profiles(), v);
        for (size_t a = 0; a < ss.size(); ++a)
            for (size_t b = a; b < ss.size(); ++b) {
                const auto& m = cat[ss[a]].module;
                const auto& n = cat[ss[b]].module;
                if (m.total_dim() + n.total_dim() > 4)
                    continue;
                Representation sum = direct_sum_module({m, n});
                auto multisets = stable_factor_multisets(sum, v);
                c.check(multisets.size() == 1, [&] {
                    return cat[ss[a]].id + "+" + cat[ss[b]].id + " at " + vec(v) + " has " +
                           std::to_string(multisets.size()) + " factor multisets";
                });
            }
    });
    return c.done();
}

SuiteResult suite_skowronski(Engine& e)
{
    Collector c("skowronski");
    auto& reg = e.registry();
    const int n = e.rank();
    const int r = reg.size();
    if (r + n > 16)
        return skipped("skowronski", "too many tau-rigid modules for the subset sweep");
    int maximal = 0;
    for (int mask = 1; mask < (1 << (r + n)); ++mask) {
        TauPair p;
        for (int i = 0; i < r; ++i)
            if (mask & (1 << i))
                p.t.push_back(i);
        for (int v = 0; v < n; ++v)
            if (mask & (1 << (r + v)))
                p.p.push_back(v);
        if (!is_tau_rigid_pair(reg, p))
            continue;
        c.check(p.size() <= n, [&] { return pair_string(reg, p) + " is tau-rigid with more than n summands"; });
        maximal += p.size() == n ? 1 : 0;
    }
    if (finite(e))
        c.check(maximal == static_cast<int>(e.graph().nodes.size()), [&] {
            return "subset sweep finds " + std::to_string(maximal) + " pairs with n summands, the graph has " +
                   std::to_string(e.graph().nodes.size());
        });
    return c.done();
}

SuiteResult suite_sum_rule(Engine& e)
{
    Collector c("sum-rule");
    const auto& cat = e.catalog();
    for (int i = 0; i < cat.size(); ++i)
        for (int j = i; j < cat.size(); ++j) {
            if (cat[i].module.total_dim() + cat[j].module.total_dim() > 6)
                continue;
            c.check(sum_rule_check(cat[i].module, cat[j].module),
                    [&] { return "D(" + cat[i].id + " + " + cat[j].id + ") is not inside D(" + cat[i].id + ") and D(" + cat[j].id + ")"; });
        }
    return c.done();
}

std::vector<SuiteResult> run_all_suites(Engine& e)
{
    using Suite = SuiteResult (*)(Engine&);
    const Suite suites[] = {suite_ar_pairing,   suite_fan,           suite_unimodularity,
                            suite_sign_coherence, suite_semibricks,  suite_semistable_equivalence,
                            suite_chamber_count, suite_stable_count, suite_wide,
                            suite_stable_brick,  suite_bkt,          suite_rudakov,
                            suite_skowronski,    suite_sum_rule};
    std::vector<SuiteResult> out;
    for (Suite s : suites)
        out.push_back(s(e));
    return out;
}

}  // namespace taufan
