#include "taufan/submodules.hpp"

#include "taufan/error.hpp"

#include <map>
#include <mutex>

namespace taufan {

namespace {

std::vector<Matrix> build_subspaces(long p, int d)
{
    std::vector<Matrix> out;
    for (int k = 0; k <= d; ++k) {
        std::vector<int> pivots(k);
        for (int i = 0; i < k; ++i)
            pivots[i] = i;
        while (true) {
            // Free slots: row r, column c > pivots[r] that is not a pivot.
            std::vector<std::pair<int, int>> free_slots;
            std::vector<bool> is_pivot(d, false);
            for (int c : pivots)
                is_pivot[c] = true;
            for (int r = 0; r < k; ++r)
                for (int c = pivots[r] + 1; c < d; ++c)
                    if (!is_pivot[c])
                        free_slots.emplace_back(r, c);
            std::vector<long> vals(free_slots.size(), 0);
            while (true) {
                Matrix basis(d, k);
                for (int r = 0; r < k; ++r)
                    basis(pivots[r], r) = 1;
                for (size_t s = 0; s < free_slots.size(); ++s)
                    basis(free_slots[s].second, free_slots[s].first) = vals[s];
                out.push_back(basis);
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
            int i = k - 1;
            while (i >= 0 && pivots[i] == d - k + i)
                --i;
            if (i < 0)
                break;
            ++pivots[i];
            for (int j = i + 1; j < k; ++j)
                pivots[j] = pivots[j - 1] + 1;
        }
    }
    return out;
}

struct Search {
    const Representation& m;
    const Field& F;
    const SubmoduleOptions& opts;
    std::vector<std::vector<int>> arrows_closing_at;
    std::vector<Matrix> chosen;
    std::vector<std::vector<Matrix>> found;
    long visited = 0;

    bool compatible(int v) const
    {
        for (int a : arrows_closing_at[v]) {
            const Arrow& arr = m.algebra().quiver().arrows[a];
            Matrix img = linalg::multiply(F, m.map(a), chosen[arr.source]);
            if (!linalg::contains_columns(F, chosen[arr.target], img))
                return false;
        }
        return true;
    }

    void run(int v)
    {
        if (v == m.algebra().vertex_count()) {
            found.push_back(chosen);
            return;
        }
        for (const auto& s : subspaces(F.characteristic(), m.dim(v))) {
            if (++visited > opts.max_candidates)
                throw budget_error("repcat", "submodule enumeration exceeded " +
                                                 std::to_string(opts.max_candidates) + " candidates");
            chosen[v] = s;
            if (compatible(v))
                run(v + 1);
        }
    }
};

}  // namespace

const std::vector<Matrix>& subspaces(long p, int d)
{
    static std::mutex mu;
    static std::map<std::pair<long, int>, std::vector<Matrix>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, d);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_subspaces(p, d)).first;
    return it->second;
}

std::vector<std::vector<Matrix>> enumerate_submodules(const Representation& m, const SubmoduleOptions& opts)
{
    const Field& F = m.field();
    if (!F.is_prime())
        throw Error(ErrorKind::Unsupported, "repcat", "submodule enumeration needs a prime field");
    const int n = m.algebra().vertex_count();
    Search s{m, F, opts, std::vector<std::vector<int>>(n), std::vector<Matrix>(n), {}, 0};
    const auto& arrows = m.algebra().quiver().arrows;
    for (size_t a = 0; a < arrows.size(); ++a)
        s.arrows_closing_at[std::max(arrows[a].source, arrows[a].target)].push_back(static_cast<int>(a));
    s.run(0);
    return s.found;
}

namespace {

std::set<IntVec> dims_of(const std::vector<std::vector<Matrix>>& subs)
{
    std::set<IntVec> out;
    for (const auto& s : subs) {
        IntVec d;
        for (const auto& b : s)
            d.push_back(b.cols());
        out.insert(d);
    }
    return out;
}

}  // namespace

SubmoduleProfile submodule_profile(const Representation& m, const SubmoduleOptions& opts)
{
    SubmoduleProfile prof;
    prof.module = m;
    prof.primes = {m.field().characteristic()};
    prof.dims = dims_of(enumerate_submodules(m, opts));
    return prof;
}

SubmoduleProfile submodule_profile_mod_primes(const Representation& m, const std::vector<long>& primes,
                                              const SubmoduleOptions& opts)
{
    if (m.field().is_prime())
        return submodule_profile(m, opts);
    if (primes.empty())
        throw usage_error("repcat", "no primes given for reduction of a rational module");
    SubmoduleProfile prof;
    prof.module = m;
    bool first = true;
    for (long p : primes) {
        AlgebraPtr alg = m.algebra().over_field(Field::prime(p));
        auto d = dims_of(enumerate_submodules(reinterpret(m, alg), opts));
        prof.primes.push_back(p);
        if (!first && d != prof.dims)
            prof.consistent = false;
        prof.dims.insert(d.begin(), d.end());
        first = false;
    }
    return prof;
}

}  // namespace taufan
