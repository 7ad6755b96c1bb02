#pragma once

#include "taufan/decompose.hpp"

#include <optional>
#include <string>
#include <vector>

namespace taufan {

struct CatalogOptions {
    int max_total_dim = 6;
    long max_prime = 5;
    long max_tuples = 2000000;
};

struct CatalogEntry {
    Representation module;
    std::string id;
};

// Brute-force list of indecomposables with dimension vector below a bound,
// pairwise non-isomorphic, ordered by total dimension, then Loewy layers
// (descending, top first), then discovery order.
class IndecomposableCatalog {
public:
    IndecomposableCatalog() = default;
    IndecomposableCatalog(AlgebraPtr algebra, IntVec bound, std::vector<CatalogEntry> entries);

    const AlgebraPtr& algebra() const { return algebra_; }
    const IntVec& bound() const { return bound_; }
    const std::vector<CatalogEntry>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    const CatalogEntry& operator[](int i) const { return entries_[i]; }

    bool within_bound(const IntVec& dims) const;
    // Index of the entry isomorphic to an indecomposable module.
    std::optional<int> find(const Representation& m) const;
    std::optional<int> find_id(const std::string& id) const;

private:
    AlgebraPtr algebra_;
    IntVec bound_;
    std::vector<CatalogEntry> entries_;
};

IndecomposableCatalog enumerate_indecomposables(AlgebraPtr alg, const IntVec& bound,
                                                const CatalogOptions& opts = {});

}  // namespace taufan
