#include "taufan/tau.hpp"

#include "taufan/error.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <optional>

namespace taufan {

ModuleRegistry::ModuleRegistry(AlgebraPtr algebra, const IndecomposableCatalog* catalog)
    : algebra_(std::move(algebra)), opposite_(algebra_->opposite()), catalog_(catalog)
{
}

int ModuleRegistry::intern(const Representation& m)
{
    Presentation pr = min_presentation(m);
    IntVec g(pr.a.size());
    for (size_t i = 0; i < g.size(); ++i)
        g[i] = pr.a[i] - pr.b[i];
    auto it = by_g_.find(g);
    if (it != by_g_.end())
        return it->second;
    RegisteredModule r;
    r.module = m;
    r.tau = ar_translate(m);
    r.g = g;
    if (hom_dim(m, r.tau) != 0)
        throw inconsistency("tautheory", "module " + loewy_name(m) + " registered as tau-rigid is not tau-rigid");
    std::optional<int> idx;
    if (catalog_ && catalog_->within_bound(m.dims()))
        idx = catalog_->find(m);
    if (idx) {
        r.catalog_index = *idx;
        r.name = (*catalog_)[*idx].id;
    } else {
        r.name = loewy_name(m);
        bool clash = false;
        for (const auto& other : modules_)
            clash = clash || other.name == r.name;
        if (catalog_)
            clash = clash || catalog_->find_id(r.name).has_value();
        if (clash)
            r.name += "#g" + vector_string(g);
    }
    int id = size();
    modules_.push_back(std::move(r));
    by_g_[g] = id;
    return id;
}

int ModuleRegistry::projective_id(int vertex)
{
    return intern(projective(algebra_, vertex));
}

int ModuleRegistry::hom_dim_cached(int from, int to)
{
    auto key = std::make_pair(from, to);
    auto it = hom_cache_.find(key);
    if (it != hom_cache_.end())
        return it->second;
    int d = hom_dim(modules_[from].module, modules_[to].module);
    hom_cache_[key] = d;
    return d;
}

int ModuleRegistry::hom_to_tau(int from, int to)
{
    auto key = std::make_pair(from, to);
    auto it = tau_cache_.find(key);
    if (it != tau_cache_.end())
        return it->second;
    int d = modules_[to].tau.is_zero() ? 0 : hom_dim(modules_[from].module, modules_[to].tau);
    tau_cache_[key] = d;
    return d;
}

std::string ModuleRegistry::vertex_name(int vertex)
{
    return modules_[projective_id(vertex)].name;
}

void normalize_pair(ModuleRegistry& reg, TauPair& pair)
{
    auto rank = [&](int id) {
        int c = reg[id].catalog_index;
        return std::make_pair(c < 0 ? INT_MAX : c, id);
    };
    std::sort(pair.t.begin(), pair.t.end(), [&](int a, int b) { return rank(a) < rank(b); });
    std::sort(pair.p.begin(), pair.p.end());
}

std::vector<IntVec> pair_key(ModuleRegistry& reg, const TauPair& pair)
{
    std::vector<IntVec> key;
    for (int id : pair.t)
        key.push_back(reg[id].g);
    const int n = reg.algebra()->vertex_count();
    for (int v : pair.p) {
        IntVec e(n, 0);
        e[v] = -1;
        key.push_back(e);
    }
    std::sort(key.begin(), key.end());
    return key;
}

std::string key_string(const std::vector<IntVec>& key)
{
    std::string s = "[";
    for (size_t i = 0; i < key.size(); ++i) {
        if (i)
            s += ",";
        s += vector_string(key[i]);
    }
    return s + "]";
}

std::string pair_string(ModuleRegistry& reg, const TauPair& pair)
{
    std::string s = "(T:";
    for (size_t i = 0; i < pair.t.size(); ++i)
        s += (i ? "," : " ") + reg[pair.t[i]].name;
    s += " | P:";
    for (size_t i = 0; i < pair.p.size(); ++i)
        s += (i ? "," : " ") + reg.vertex_name(pair.p[i]);
    return s + ")";
}

std::vector<Representation> t_modules(const ModuleRegistry& reg, const TauPair& pair)
{
    std::vector<Representation> out;
    for (int id : pair.t)
        out.push_back(reg[id].module);
    return out;
}

bool is_tau_rigid(const Representation& m)
{
    if (m.is_zero())
        return true;
    Representation t = ar_translate(m);
    return t.is_zero() || hom_dim(m, t) == 0;
}

bool is_tau_rigid_pair(const std::vector<Representation>& t, const std::vector<int>& p)
{
    std::vector<Representation> taus;
    for (const auto& m : t)
        taus.push_back(ar_translate(m));
    for (const auto& m : t) {
        for (int v : p)
            if (m.dim(v) != 0)
                return false;
        for (const auto& tau : taus)
            if (!tau.is_zero() && hom_dim(m, tau) != 0)
                return false;
    }
    return true;
}

bool is_tau_rigid_pair(ModuleRegistry& reg, const TauPair& pair)
{
    for (int a : pair.t) {
        for (int v : pair.p)
            if (reg[a].module.dim(v) != 0)
                return false;
        for (int b : pair.t)
            if (reg.hom_to_tau(a, b) != 0)
                return false;
    }
    std::set<int> distinct_t(pair.t.begin(), pair.t.end());
    std::set<int> distinct_p(pair.p.begin(), pair.p.end());
    if (distinct_t.size() != pair.t.size() || distinct_p.size() != pair.p.size())
        return false;
    if (pair.size() > reg.algebra()->vertex_count())
        throw inconsistency("tautheory", "tau-rigid pair " + pair_string(reg, pair) +
                                             " has more summands than vertices");
    return true;
}

bool is_tau_tilting_pair(ModuleRegistry& reg, const TauPair& pair)
{
    return is_tau_rigid_pair(reg, pair) && pair.size() == reg.algebra()->vertex_count();
}

SubRep trace(const std::vector<Representation>& u, const Representation& x)
{
    const Field& F = x.field();
    const int n = x.algebra().vertex_count();
    std::vector<std::vector<Matrix>> blocks(n);
    for (const auto& m : u)
        for (const auto& f : hom_basis(m, x).basis)
            for (int i = 0; i < n; ++i)
                blocks[i].push_back(f.comps[i]);
    std::vector<Matrix> bases;
    for (int i = 0; i < n; ++i)
        bases.push_back(linalg::column_basis(F, linalg::hstack(blocks[i], x.dim(i))));
    return subrepresentation(x, bases);
}

bool in_fac(const std::vector<Representation>& u, const Representation& x)
{
    if (x.is_zero())
        return true;
    return trace(u, x).module.total_dim() == x.total_dim();
}

bool in_filt_fac(const std::vector<Representation>& u, const Representation& x)
{
    Representation q = x;
    while (!q.is_zero()) {
        SubRep tr = trace(u, q);
        if (tr.module.is_zero())
            return false;
        q = quotient(q, tr.inclusion.comps).module;
    }
    return true;
}

TorsionSequence torsion_submodule(const std::vector<Representation>& t, const Representation& m)
{
    SubRep tm = trace(t, m);
    QuotientRep fm = quotient(m, tm.inclusion.comps);
    for (const auto& x : t)
        if (hom_dim(x, fm.module) != 0)
            throw inconsistency("tautheory", "torsion-free quotient receives a map from the generator");
    return {tm, fm};
}

TorsionClass fac(const std::vector<Representation>& t, const IndecomposableCatalog& catalog)
{
    if (!t.empty() && !is_tau_rigid(direct_sum_module(t)))
        throw usage_error("tautheory", "Fac is only a torsion class for tau-rigid generators");
    TorsionClass c;
    if (t.empty())
        return c;
    for (int i = 0; i < catalog.size(); ++i)
        if (in_fac(t, catalog[i].module))
            c.members.insert(i);
    return c;
}

TorsionClass filt_fac(const std::vector<Representation>& m, const IndecomposableCatalog& catalog)
{
    TorsionClass c;
    if (m.empty())
        return c;
    for (int i = 0; i < catalog.size(); ++i)
        if (in_filt_fac(m, catalog[i].module))
            c.members.insert(i);
    return c;
}

namespace {

std::vector<Representation> member_modules(const TorsionClass& c, const IndecomposableCatalog& catalog)
{
    std::vector<Representation> out;
    for (int i : c.members)
        out.push_back(catalog[i].module);
    return out;
}

}  // namespace

bool closed_under_quotients(const TorsionClass& c, const IndecomposableCatalog& catalog)
{
    auto mods = member_modules(c, catalog);
    if (mods.empty())
        return true;
    for (int i = 0; i < catalog.size(); ++i)
        if (!c.members.count(i) && in_fac(mods, catalog[i].module))
            return false;
    return true;
}

bool closed_under_extensions(const TorsionClass& c, const IndecomposableCatalog& catalog)
{
    auto mods = member_modules(c, catalog);
    if (mods.empty())
        return true;
    for (int i = 0; i < catalog.size(); ++i)
        if (!c.members.count(i) && in_filt_fac(mods, catalog[i].module))
            return false;
    return true;
}

std::vector<int> p_of_torsion_class(const TorsionClass& c, const IndecomposableCatalog& catalog)
{
    std::vector<int> out;
    for (int x : c.members) {
        Presentation px = min_presentation(catalog[x].module);
        bool projective = true;
        for (int y : c.members)
            if (ext1_dim(px, catalog[y].module) != 0) {
                projective = false;
                break;
            }
        if (projective)
            out.push_back(x);
    }
    return out;
}

namespace {

std::vector<Representation> distinct_indecomposables(const std::vector<Representation>& u)
{
    std::vector<Representation> out;
    for (const auto& m : u)
        for (const auto& [part, mult] : decompose(m).parts) {
            bool seen = false;
            for (const auto& o : out)
                seen = seen || indecomposables_isomorphic(o, part).isomorphic;
            if (!seen)
                out.push_back(part);
        }
    return out;
}

// Radical of a local endomorphism ring, spanned by b - lambda(b) for basis b.
std::vector<Morphism> local_radical(const Representation& m)
{
    const Field& F = m.field();
    Morphism id = identity_morphism(m);
    std::vector<Morphism> out;
    for (const auto& b : hom_basis(m, m).basis) {
        std::optional<Scalar> lambda;
        Scalar tr = 0;
        for (const auto& c : b.comps)
            for (int r = 0; r < c.rows(); ++r)
                tr = F.add(tr, c(r, r));
        if (!F.is_prime() || m.total_dim() % F.characteristic() != 0) {
            lambda = F.div(tr, F.normalize(Scalar(m.total_dim())));
        } else {
            for (const auto& l : F.elements())
                if (!is_isomorphism(F, add(F, b, scale(F, id, F.neg(l))))) {
                    lambda = l;
                    break;
                }
        }
        if (!lambda)
            throw Error(ErrorKind::Unsupported, "tautheory",
                        "endomorphism ring of " + loewy_name(m) + " is not split local over " + F.name());
        Morphism r = add(F, b, scale(F, id, F.neg(*lambda)));
        if (is_isomorphism(F, r) && m.total_dim() > 0)
            throw Error(ErrorKind::Unsupported, "tautheory", "endomorphism ring of " + loewy_name(m) + " is not local");
        out.push_back(r);
    }
    return out;
}

int span_rank(const Field& F, const std::vector<Morphism>& maps)
{
    if (maps.empty())
        return 0;
    std::vector<Matrix> cols;
    for (const auto& f : maps)
        cols.push_back(Matrix::column(flatten(f)));
    return linalg::rank(F, linalg::hstack(cols));
}

Approximation assemble(const Representation& x, const std::vector<Representation>& parts,
                       const std::vector<std::pair<int, Morphism>>& comps)
{
    const Field& F = x.field();
    std::vector<Representation> targets;
    for (const auto& c : comps)
        targets.push_back(parts[c.first]);
    Approximation a;
    if (targets.empty()) {
        a.target = Representation::zero(x.algebra_ptr());
        a.map = zero_morphism(x, a.target);
        return a;
    }
    DirectSum ds = direct_sum(targets);
    a.target = ds.module;
    a.map = zero_morphism(x, a.target);
    for (size_t k = 0; k < comps.size(); ++k) {
        a.map = add(F, a.map, compose(F, ds.inclusions[k], comps[k].second));
        a.components.push_back(comps[k].first);
    }
    return a;
}

bool factors_all(const Representation& x, const std::vector<Representation>& parts, const Approximation& a)
{
    const Field& F = x.field();
    for (const auto& u : parts) {
        int need = hom_dim(x, u);
        if (need == 0)
            continue;
        if (a.target.is_zero())
            return false;
        std::vector<Morphism> composites;
        for (const auto& psi : hom_basis(a.target, u).basis)
            composites.push_back(compose(F, psi, a.map));
        if (span_rank(F, composites) != need)
            return false;
    }
    return true;
}

}  // namespace

Approximation left_approximation(const Representation& x, const std::vector<Representation>& u)
{
    const Field& F = x.field();
    std::vector<Representation> parts = distinct_indecomposables(u);
    const int k = static_cast<int>(parts.size());
    std::vector<HomBasis> from_x;
    for (const auto& p : parts)
        from_x.push_back(hom_basis(x, p));

    std::vector<std::pair<int, Morphism>> comps;
    for (int j = 0; j < k; ++j) {
        if (from_x[j].dim() == 0)
            continue;
        std::vector<Morphism> radical;
        for (int l = 0; l < k; ++l) {
            std::vector<Morphism> between =
                l == j ? local_radical(parts[j]) : hom_basis(parts[l], parts[j]).basis;
            for (const auto& psi : between)
                for (const auto& phi : from_x[l].basis)
                    radical.push_back(compose(F, psi, phi));
        }
        std::vector<Morphism> span = radical;
        int r = span_rank(F, span);
        for (const auto& phi : from_x[j].basis) {
            span.push_back(phi);
            int r2 = span_rank(F, span);
            if (r2 > r) {
                comps.emplace_back(j, phi);
                r = r2;
            } else {
                span.pop_back();
            }
        }
    }
    Approximation a = assemble(x, parts, comps);
    if (!factors_all(x, parts, a))
        throw inconsistency("tautheory", "constructed left approximation of " + loewy_name(x) +
                                             " misses a morphism");
    for (size_t drop = 0; drop < comps.size(); ++drop) {
        auto fewer = comps;
        fewer.erase(fewer.begin() + static_cast<long>(drop));
        if (factors_all(x, parts, assemble(x, parts, fewer)))
            throw inconsistency("tautheory", "constructed left approximation of " + loewy_name(x) +
                                                 " is not minimal");
    }
    return a;
}

bool is_left_approximation(const Representation& x, const std::vector<Representation>& u, const Approximation& a)
{
    return is_morphism(x, a.target, a.map) && factors_all(x, distinct_indecomposables(u), a);
}

namespace {

ModulePair dual_with_position(const ModulePair& pair, AlgebraPtr target, int pos_in, int& pos_out)
{
    ModulePair out;
    std::vector<int> pr_vertices;
    std::vector<int> pr_origin;
    std::vector<int> t_origin;
    for (size_t i = 0; i < pair.t.size(); ++i) {
        int v = -1;
        if (is_projective_module(pair.t[i], &v)) {
            pr_vertices.push_back(v);
            pr_origin.push_back(static_cast<int>(i));
        } else {
            out.t.push_back(auslander_transpose(pair.t[i], target));
            t_origin.push_back(static_cast<int>(i));
        }
    }
    for (size_t j = 0; j < pair.p.size(); ++j) {
        out.t.push_back(projective(target, pair.p[j]));
        t_origin.push_back(static_cast<int>(pair.t.size() + j));
    }
    out.p = pr_vertices;
    pos_out = -1;
    for (size_t i = 0; i < t_origin.size(); ++i)
        if (t_origin[i] == pos_in)
            pos_out = static_cast<int>(i);
    for (size_t i = 0; i < pr_origin.size(); ++i)
        if (pr_origin[i] == pos_in)
            pos_out = static_cast<int>(out.t.size() + i);
    return out;
}

std::optional<ModulePair> left_exchange(const ModulePair& pair, int index)
{
    const Representation& x = pair.t[index];
    const AlgebraPtr& alg = x.algebra_ptr();
    std::vector<Representation> u;
    for (size_t i = 0; i < pair.t.size(); ++i)
        if (static_cast<int>(i) != index)
            u.push_back(pair.t[i]);
    if (in_fac(u, x))
        return std::nullopt;

    Representation y = Representation::zero(alg);
    if (!u.empty()) {
        Approximation a = left_approximation(x, u);
        y = cokernel(a.target, a.map).module;
    }
    ModulePair out{u, pair.p};
    if (y.is_zero()) {
        std::vector<int> candidates;
        for (int v = 0; v < alg->vertex_count(); ++v) {
            if (std::find(pair.p.begin(), pair.p.end(), v) != pair.p.end())
                continue;
            bool outside = true;
            for (const auto& m : u)
                outside = outside && m.dim(v) == 0;
            if (outside)
                candidates.push_back(v);
        }
        if (candidates.size() != 1)
            return std::nullopt;
        out.p.push_back(candidates[0]);
        return out;
    }
    std::vector<Representation> fresh;
    for (const auto& [part, mult] : decompose(y).parts) {
        bool known = false;
        for (const auto& m : u)
            known = known || indecomposables_isomorphic(m, part).isomorphic;
        if (!known)
            fresh.push_back(part);
    }
    if (fresh.size() != 1)
        return std::nullopt;
    out.t.push_back(fresh[0]);
    return out;
}

int shared_summands(const TauPair& a, const TauPair& b)
{
    int c = 0;
    for (int x : a.t)
        c += static_cast<int>(std::count(b.t.begin(), b.t.end(), x));
    for (int x : a.p)
        c += static_cast<int>(std::count(b.p.begin(), b.p.end(), x));
    return c;
}

TauPair intern_pair(ModuleRegistry& reg, const ModulePair& mp)
{
    TauPair out;
    for (const auto& m : mp.t)
        out.t.push_back(reg.intern(m));
    out.p = mp.p;
    normalize_pair(reg, out);
    return out;
}

bool valid_neighbour(ModuleRegistry& reg, const TauPair& old, const TauPair& fresh)
{
    const int n = reg.algebra()->vertex_count();
    return !(fresh == old) && is_tau_tilting_pair(reg, fresh) && shared_summands(old, fresh) == n - 1;
}

TauPair completion_search(ModuleRegistry& reg, const TauPair& pair, int position)
{
    const IndecomposableCatalog* cat = reg.catalog();
    if (!cat)
        throw inconsistency("tautheory", "mutation of " + pair_string(reg, pair) +
                                             " failed verification and no catalog is available for fallback");
    TauPair almost = pair;
    if (position < static_cast<int>(pair.t.size()))
        almost.t.erase(almost.t.begin() + position);
    else
        almost.p.erase(almost.p.begin() + (position - static_cast<int>(pair.t.size())));
    std::vector<TauPair> found;
    for (const auto& e : cat->entries()) {
        if (!is_tau_rigid(e.module))
            continue;
        int id = reg.intern(e.module);
        TauPair cand = almost;
        if (std::find(cand.t.begin(), cand.t.end(), id) != cand.t.end())
            continue;
        cand.t.push_back(id);
        normalize_pair(reg, cand);
        if (valid_neighbour(reg, pair, cand))
            found.push_back(cand);
    }
    for (int v = 0; v < reg.algebra()->vertex_count(); ++v) {
        if (std::find(almost.p.begin(), almost.p.end(), v) != almost.p.end())
            continue;
        TauPair cand = almost;
        cand.p.push_back(v);
        normalize_pair(reg, cand);
        if (valid_neighbour(reg, pair, cand))
            found.push_back(cand);
    }
    if (found.size() != 1)
        throw inconsistency("tautheory", "almost tau-tilting pair obtained from " + pair_string(reg, pair) +
                                             " has " + std::to_string(found.size() + 1) +
                                             " completions in the catalog, expected 2");
    return found[0];
}

}  // namespace

ModulePair dual_pair(const ModulePair& pair, AlgebraPtr target)
{
    int ignored = 0;
    return dual_with_position(pair, std::move(target), -1, ignored);
}

bool fac_contains(const ModuleRegistry& reg, const TauPair& big, const TauPair& small)
{
    auto bt = t_modules(reg, big);
    for (int id : small.t)
        if (bt.empty() || !in_fac(bt, reg[id].module))
            return false;
    return true;
}

MutationResult mutate(ModuleRegistry& reg, const TauPair& pair, int position)
{
    if (!is_tau_tilting_pair(reg, pair))
        throw usage_error("tautheory", "mutation needs a tau-tilting pair, got " + pair_string(reg, pair));
    if (position < 0 || position >= pair.size())
        throw usage_error("tautheory", "summand position " + std::to_string(position) + " out of range");
    ModulePair mp{t_modules(reg, pair), pair.p};
    std::optional<ModulePair> next;
    if (position < static_cast<int>(pair.t.size())) {
        next = left_exchange(mp, position);
    }
    if (!next) {
        int pos_op = -1;
        ModulePair dual = dual_with_position(mp, reg.opposite(), position, pos_op);
        if (pos_op >= 0 && pos_op < static_cast<int>(dual.t.size()))
            if (auto mut = left_exchange(dual, pos_op))
                next = dual_pair(*mut, reg.algebra());
    }
    MutationResult res;
    if (next) {
        res.pair = intern_pair(reg, *next);
        if (!valid_neighbour(reg, pair, res.pair))
            next.reset();
    }
    if (!next) {
        res.pair = completion_search(reg, pair, position);
        res.constructive = false;
    }
    bool down = fac_contains(reg, pair, res.pair);
    bool up = fac_contains(reg, res.pair, pair);
    if (down == up)
        throw inconsistency("tautheory", "mutation " + pair_string(reg, pair) + " -> " +
                                             pair_string(reg, res.pair) + " is not comparable by Fac inclusion");
    res.left = down;
    return res;
}

int MutationGraph::find(const TauPair& p) const
{
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == p)
            return static_cast<int>(i);
    return -1;
}

namespace {

int position_of_new(const TauPair& in, const TauPair& old)
{
    for (size_t i = 0; i < in.t.size(); ++i)
        if (std::find(old.t.begin(), old.t.end(), in.t[i]) == old.t.end())
            return static_cast<int>(i);
    for (size_t i = 0; i < in.p.size(); ++i)
        if (std::find(old.p.begin(), old.p.end(), in.p[i]) == old.p.end())
            return static_cast<int>(in.t.size() + i);
    return -1;
}

}  // namespace

MutationGraph mutation_graph(ModuleRegistry& reg, const GraphLimits& limits)
{
    const int n = reg.algebra()->vertex_count();
    MutationGraph g;
    TauPair start;
    for (int v = 0; v < n; ++v)
        start.t.push_back(reg.projective_id(v));
    normalize_pair(reg, start);
    std::map<std::vector<IntVec>, int> index;
    g.nodes.push_back(start);
    g.depth.push_back(0);
    index[pair_key(reg, start)] = 0;
    std::set<std::pair<int, int>> seen_edges;
    auto flag = [&](const std::string& cap) {
        if (g.complete) {
            g.complete = false;
            g.cap = cap;
        }
    };
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (g.depth[u] >= limits.max_depth) {
            flag("max_depth");
            continue;
        }
        for (int pos = 0; pos < n; ++pos) {
            const TauPair current = g.nodes[u];
            MutationResult res = mutate(reg, current, pos);
            if (!res.constructive)
                ++g.fallbacks;
            bool too_big = false;
            for (int id : res.pair.t)
                too_big = too_big || reg[id].module.total_dim() > limits.max_module_dim;
            if (too_big) {
                flag("max_module_dim");
                continue;
            }
            auto key = pair_key(reg, res.pair);
            auto it = index.find(key);
            int v;
            if (it == index.end()) {
                if (static_cast<int>(g.nodes.size()) >= limits.max_nodes) {
                    flag("max_nodes");
                    continue;
                }
                v = static_cast<int>(g.nodes.size());
                g.nodes.push_back(res.pair);
                g.depth.push_back(g.depth[u] + 1);
                index[key] = v;
                queue.push_back(v);
            } else {
                v = it->second;
            }
            auto ek = std::make_pair(std::min(u, v), std::max(u, v));
            if (!seen_edges.insert(ek).second)
                continue;
            MutationEdge e;
            if (res.left) {
                e.from = u;
                e.to = v;
                e.position = pos;
            } else {
                e.from = v;
                e.to = u;
                e.position = position_of_new(res.pair, current);
            }
            g.edges.push_back(e);
        }
    }
    return g;
}

HassePoset hasse(ModuleRegistry& reg, const MutationGraph& graph)
{
    HassePoset h;
    h.nodes = graph.nodes;
    std::vector<int> in(graph.nodes.size(), 0), out(graph.nodes.size(), 0);
    for (const auto& e : graph.edges) {
        const TauPair& a = graph.nodes[e.from];
        const TauPair& b = graph.nodes[e.to];
        if (!fac_contains(reg, a, b) || fac_contains(reg, b, a))
            throw inconsistency("tautheory", "mutation edge " + pair_string(reg, a) + " -> " + pair_string(reg, b) +
                                                 " disagrees with Fac inclusion");
        h.covers.emplace_back(e.from, e.to);
        ++out[e.from];
        ++in[e.to];
    }
    for (size_t i = 0; i < h.nodes.size(); ++i) {
        if (in[i] == 0)
            h.top = h.top == -1 ? static_cast<int>(i) : -2;
        if (out[i] == 0)
            h.bottom = h.bottom == -1 ? static_cast<int>(i) : -2;
    }
    if (h.top < 0)
        h.top = -1;
    if (h.bottom < 0)
        h.bottom = -1;
    return h;
}

}  // namespace taufan
