#include "taufan/engine.hpp"

#include "taufan/error.hpp"
#include "taufan/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace taufan {

Engine::Engine(AlgebraPtr algebra, EngineOptions options)
    : algebra_(std::move(algebra)), options_(std::move(options))
{
}

IndecomposableCatalog Engine::pool_catalog(const ModuleRegistry& reg, const IntVec* bound) const
{
    std::vector<Representation> pool;
    auto add = [&](const Representation& m) {
        if (bound) {
            IntVec d = m.dims();
            for (size_t i = 0; i < d.size(); ++i)
                if (d[i] > (*bound)[i])
                    return;
        }
        for (const auto& q : pool)
            if (q.dims() == m.dims() && indecomposables_isomorphic(q, m).isomorphic)
                return;
        pool.push_back(m);
    };
    for (int v = 0; v < rank(); ++v)
        add(simple(algebra_, v));
    for (int i = 0; i < reg.size(); ++i)
        add(reg[i].module);

    std::vector<int> order(pool.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<IntVec>> layers;
    for (const auto& m : pool)
        layers.push_back(loewy_layers(m));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = pool[a].total_dim(), db = pool[b].total_dim();
        if (da != db)
            return da < db;
        return layers[a] > layers[b];
    });
    std::vector<CatalogEntry> entries;
    std::map<std::string, int> seen;
    IntVec hull(rank(), 0);
    for (int i : order) {
        std::string id = loewy_name(pool[i]);
        int k = seen[id]++;
        if (k > 0)
            id += "#" + std::to_string(k + 1);
        entries.push_back({pool[i], id});
        for (int v = 0; v < rank(); ++v)
            hull[v] = std::max(hull[v], pool[i].dim(v));
    }
    return IndecomposableCatalog(algebra_, bound ? *bound : hull, std::move(entries));
}

void Engine::build()
{
    if (registry_)
        return;
    const bool prime = algebra_->field().is_prime();
    if (options_.bound) {
        if (prime) {
            catalog_ = std::make_unique<IndecomposableCatalog>(
                enumerate_indecomposables(algebra_, *options_.bound, options_.catalog));
        } else {
            ModuleRegistry probe(algebra_);
            mutation_graph(probe, options_.limits);
            catalog_ = std::make_unique<IndecomposableCatalog>(pool_catalog(probe, &*options_.bound));
        }
        registry_ = std::make_unique<ModuleRegistry>(algebra_, catalog_.get());
        graph_ = mutation_graph(*registry_, options_.limits);
        return;
    }

    auto probe = std::make_unique<ModuleRegistry>(algebra_);
    MutationGraph first = mutation_graph(*probe, options_.limits);
    if (!first.complete) {
        // A second traversal would only rename modules; keep this one.
        IntVec ones(rank(), 1);
        if (prime)
            catalog_ = std::make_unique<IndecomposableCatalog>(
                enumerate_indecomposables(algebra_, ones, options_.catalog));
        else
            catalog_ = std::make_unique<IndecomposableCatalog>(pool_catalog(ModuleRegistry(algebra_), &ones));
        registry_ = std::move(probe);
        graph_ = std::move(first);
        return;
    }
    IntVec bound(rank(), 0);
    for (int i = 0; i < probe->size(); ++i)
        for (int v = 0; v < rank(); ++v)
            bound[v] = std::max(bound[v], (*probe)[i].module.dim(v));
    if (prime)
        catalog_ = std::make_unique<IndecomposableCatalog>(enumerate_indecomposables(algebra_, bound, options_.catalog));
    else
        catalog_ = std::make_unique<IndecomposableCatalog>(pool_catalog(*probe, nullptr));
    registry_ = std::make_unique<ModuleRegistry>(algebra_, catalog_.get());
    graph_ = mutation_graph(*registry_, options_.limits);
}

const MutationGraph& Engine::graph()
{
    build();
    return *graph_;
}

ModuleRegistry& Engine::registry()
{
    build();
    return *registry_;
}

const IndecomposableCatalog& Engine::catalog()
{
    build();
    return *catalog_;
}

const std::vector<ProfiledModule>& Engine::profiles()
{
    if (!profiles_) {
        const auto& cat = catalog();
        std::vector<ProfiledModule> out(cat.size());
        parallel_for(cat.size(), [&](int i) { out[i] = profile(cat[i].module); });
        profiles_ = std::move(out);
    }
    return *profiles_;
}

const std::vector<WallInfo>& Engine::walls()
{
    if (!walls_) {
        const auto& prof = profiles();
        std::vector<WallInfo> out;
        for (size_t i = 0; i < prof.size(); ++i) {
            StabilitySpace s = stability_space(*algebra_, prof[i]);
            if (s.codim != 1)
                continue;
            out.push_back({static_cast<int>(i), s, generators_of(s.cone)});
        }
        walls_ = std::move(out);
    }
    return *walls_;
}

std::vector<Chamber> Engine::chamber_list()
{
    return chambers(registry(), graph());
}

const std::vector<int>& Engine::edge_labels()
{
    if (!labels_) {
        const auto& g = graph();
        if (!g.complete)
            throw budget_error("stability", "brick labels need a complete mutation graph (stopped at " + g.cap + ")");
        const auto& prof = profiles();
        std::vector<int> out;
        for (const auto& e : g.edges)
            out.push_back(wall_label(*registry_, g.nodes[e.from], e.position, prof));
        labels_ = std::move(out);
    }
    return *labels_;
}

const std::vector<TauPair>& Engine::rigid_subpairs()
{
    if (!subpairs_) {
        auto& reg = registry();
        std::map<std::vector<IntVec>, TauPair> seen;
        for (const auto& node : graph().nodes) {
            const int tn = static_cast<int>(node.t.size());
            const int total = node.size();
            for (int mask = 0; mask < (1 << total); ++mask) {
                TauPair sub;
                for (int i = 0; i < total; ++i) {
                    if (!(mask & (1 << i)))
                        continue;
                    if (i < tn)
                        sub.t.push_back(node.t[i]);
                    else
                        sub.p.push_back(node.p[i - tn]);
                }
                normalize_pair(reg, sub);
                seen.emplace(pair_key(reg, sub), sub);
            }
        }
        std::vector<TauPair> out;
        for (auto& [key, pair] : seen)
            out.push_back(pair);
        subpairs_ = std::move(out);
    }
    return *subpairs_;
}

std::vector<WallGeometry> Engine::wall_geometry()
{
    std::vector<WallGeometry> out;
    if (kronecker()) {
        for (const auto& w : kronecker_walls(options_.kronecker_depth)) {
            VCone c{2, {}, {}};
            if (w.line)
                c.lineality.push_back(to_qvec(w.direction));
            else
                c.rays.push_back(to_qvec(w.direction));
            out.push_back({w.name, w.name, c, w.limit});
        }
        return out;
    }
    const auto& cat = catalog();
    for (const auto& w : walls())
        out.push_back({cat[w.module].id, cat[w.module].id, w.generators, false});
    return out;
}

std::string Engine::render_svg(const std::optional<QVec>& projection)
{
    auto geometry = wall_geometry();
    if (rank() == 2) {
        std::vector<ChamberAnchor> anchors;
        if (!kronecker()) {
            auto& reg = registry();
            for (const auto& node : graph().nodes)
                anchors.push_back({pair_string(reg, node), interior_sample(reg, node)});
        }
        return render_2d(geometry, anchors);
    }
    if (rank() == 3) {
        ProjectionSpec spec;
        if (projection)
            spec.point = *projection;
        return render_stereographic(geometry, spec);
    }
    throw usage_error("render", "pictures exist for two or three vertices, this algebra has " +
                                    std::to_string(rank()));
}

std::string Engine::mutation_dot(bool labels)
{
    auto& reg = registry();
    const auto& g = graph();
    std::vector<std::string> nodes;
    for (const auto& n : g.nodes)
        nodes.push_back(pair_string(reg, n));
    std::vector<DotEdge> edges;
    const std::vector<int>* lab = labels ? &edge_labels() : nullptr;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        DotEdge e{g.edges[i].from, g.edges[i].to, ""};
        if (lab)
            e.label = catalog()[(*lab)[i]].id;
        edges.push_back(e);
    }
    return export_dot("mutation", nodes, edges);
}

std::string Engine::hasse_dot()
{
    auto& reg = registry();
    HassePoset h = hasse(reg, graph());
    std::vector<std::string> nodes;
    for (const auto& n : h.nodes)
        nodes.push_back(pair_string(reg, n));
    std::vector<DotEdge> edges;
    for (auto [a, b] : h.covers)
        edges.push_back({a, b, ""});
    return export_dot("hasse", nodes, edges);
}

}  // namespace taufan
