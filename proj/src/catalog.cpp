#include "taufan/catalog.hpp"

#include "taufan/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace taufan {

IndecomposableCatalog::IndecomposableCatalog(AlgebraPtr algebra, IntVec bound, std::vector<CatalogEntry> entries)
    : algebra_(std::move(algebra)), bound_(std::move(bound)), entries_(std::move(entries))
{
}

bool IndecomposableCatalog::within_bound(const IntVec& dims) const
{
    for (size_t i = 0; i < dims.size(); ++i)
        if (dims[i] > bound_[i])
            return false;
    return true;
}

std::optional<int> IndecomposableCatalog::find(const Representation& m) const
{
    for (int i = 0; i < size(); ++i)
        if (entries_[i].module.dims() == m.dims() && indecomposables_isomorphic(entries_[i].module, m).isomorphic)
            return i;
    return std::nullopt;
}

std::optional<int> IndecomposableCatalog::find_id(const std::string& id) const
{
    for (int i = 0; i < size(); ++i)
        if (entries_[i].id == id)
            return i;
    return std::nullopt;
}

namespace {

struct Fingerprint {
    int end_dim;
    IntVec from_simples;
    IntVec to_simples;

    bool operator==(const Fingerprint& o) const
    {
        return end_dim == o.end_dim && from_simples == o.from_simples && to_simples == o.to_simples;
    }
};

Fingerprint fingerprint(const Representation& m, const std::vector<Representation>& simples)
{
    Fingerprint f{hom_dim(m, m), {}, {}};
    for (const auto& s : simples) {
        f.from_simples.push_back(hom_dim(s, m));
        f.to_simples.push_back(hom_dim(m, s));
    }
    return f;
}

struct Found {
    Representation module;
    Fingerprint print;
    long order;
};

}  // namespace

IndecomposableCatalog enumerate_indecomposables(AlgebraPtr alg, const IntVec& bound, const CatalogOptions& opts)
{
    const Field& F = alg->field();
    if (!F.is_prime())
        throw Error(ErrorKind::Unsupported, "repcat", "indecomposable enumeration needs a prime field");
    const long p = F.characteristic();
    if (p > opts.max_prime)
        throw budget_error("repcat", "field size " + std::to_string(p) + " exceeds the enumeration cap " +
                                         std::to_string(opts.max_prime));
    const int n = alg->vertex_count();
    if (static_cast<int>(bound.size()) != n)
        throw usage_error("repcat", "dimension bound has " + std::to_string(bound.size()) + " entries, expected " +
                                        std::to_string(n));
    for (int b : bound)
        if (b < 0)
            throw usage_error("repcat", "dimension bound entries must be nonnegative");
    int total_bound = std::accumulate(bound.begin(), bound.end(), 0);
    if (total_bound > opts.max_total_dim)
        throw budget_error("repcat", "dimension bound total " + std::to_string(total_bound) + " exceeds the cap " +
                                         std::to_string(opts.max_total_dim));

    const auto& arrows = alg->quiver().arrows;
    std::vector<IntVec> dim_vectors;
    IntVec d(n, 0);
    double tuples = 0;
    while (true) {
        int pos = 0;
        while (pos < n) {
            if (++d[pos] > bound[pos]) {
                d[pos] = 0;
                ++pos;
            } else {
                break;
            }
        }
        if (pos == n)
            break;
        dim_vectors.push_back(d);
        long entries = 0;
        for (const auto& a : arrows)
            entries += static_cast<long>(d[a.source]) * d[a.target];
        tuples += std::pow(static_cast<double>(p), static_cast<double>(entries));
    }
    if (tuples > static_cast<double>(opts.max_tuples))
        throw budget_error("repcat", "enumeration needs " + std::to_string(static_cast<long>(tuples)) +
                                         " matrix tuples, above the cap " + std::to_string(opts.max_tuples));
    std::sort(dim_vectors.begin(), dim_vectors.end(), [](const IntVec& a, const IntVec& b) {
        int sa = std::accumulate(a.begin(), a.end(), 0);
        int sb = std::accumulate(b.begin(), b.end(), 0);
        if (sa != sb)
            return sa < sb;
        return a > b;
    });

    std::vector<Representation> simples;
    for (int i = 0; i < n; ++i)
        simples.push_back(simple(alg, i));

    std::vector<Found> found;
    long order = 0;
    for (const auto& dims : dim_vectors) {
        std::vector<std::pair<int, int>> slots;  // (arrow, flat index)
        for (size_t a = 0; a < arrows.size(); ++a)
            for (int k = 0; k < dims[arrows[a].source] * dims[arrows[a].target]; ++k)
                slots.emplace_back(static_cast<int>(a), k);
        std::vector<long> vals(slots.size(), 0);
        const size_t first_of_dims = found.size();
        while (true) {
            std::vector<Matrix> maps;
            for (const auto& a : arrows)
                maps.emplace_back(dims[a.target], dims[a.source]);
            for (size_t s = 0; s < slots.size(); ++s) {
                Matrix& mm = maps[slots[s].first];
                int k = slots[s].second;
                mm(k / mm.cols(), k % mm.cols()) = vals[s];
            }
            Representation m(alg, dims, maps);
            if (m.satisfies_relations() && is_indecomposable(m)) {
                Fingerprint fp = fingerprint(m, simples);
                bool known = false;
                for (size_t j = first_of_dims; j < found.size() && !known; ++j)
                    if (found[j].print == fp && indecomposables_isomorphic(found[j].module, m).isomorphic)
                        known = true;
                if (!known)
                    found.push_back({m, fp, order});
            }
            ++order;
            size_t pos = 0;
            while (pos < vals.size()) {
                if (++vals[pos] == p) {
                    vals[pos] = 0;
                    ++pos;
                } else {
                    break;
                }
            }
            if (pos == vals.size())
                break;
        }
    }

    std::vector<std::vector<IntVec>> layers;
    for (const auto& f : found)
        layers.push_back(loewy_layers(f.module));
    std::vector<size_t> perm(found.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        int ta = found[a].module.total_dim();
        int tb = found[b].module.total_dim();
        if (ta != tb)
            return ta < tb;
        return layers[a] > layers[b];
    });
    std::vector<Found> sorted;
    for (size_t i : perm)
        sorted.push_back(found[i]);
    found.swap(sorted);

    std::vector<CatalogEntry> entries;
    std::map<std::string, int> counts;
    for (const auto& f : found)
        ++counts[loewy_name(f.module)];
    std::map<std::string, int> seen;
    for (const auto& f : found) {
        std::string name = loewy_name(f.module);
        if (counts[name] > 1)
            name += "#" + std::to_string(++seen[name]);
        entries.push_back({f.module, name});
    }
    return IndecomposableCatalog(alg, bound, std::move(entries));
}

}  // namespace taufan
