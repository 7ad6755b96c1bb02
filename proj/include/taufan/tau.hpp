#pragma once

#include "taufan/catalog.hpp"
#include "taufan/homological.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace taufan {

struct RegisteredModule {
    Representation module;
    Representation tau;
    IntVec g;
    std::string name;
    int catalog_index = -1;
};

// Interns indecomposable tau-rigid modules by g-vector, which determines them
// up to isomorphism. Not thread-safe; one registry per traversal.
class ModuleRegistry {
public:
    ModuleRegistry(AlgebraPtr algebra, const IndecomposableCatalog* catalog = nullptr);

    const AlgebraPtr& algebra() const { return algebra_; }
    const AlgebraPtr& opposite() const { return opposite_; }
    const IndecomposableCatalog* catalog() const { return catalog_; }
    int size() const { return static_cast<int>(modules_.size()); }
    const RegisteredModule& operator[](int id) const { return modules_[id]; }

    int intern(const Representation& m);
    int projective_id(int vertex);
    int hom_dim_cached(int from, int to);
    int hom_to_tau(int from, int to);
    std::string vertex_name(int vertex);

private:
    AlgebraPtr algebra_;
    AlgebraPtr opposite_;
    const IndecomposableCatalog* catalog_;
    std::vector<RegisteredModule> modules_;
    std::map<IntVec, int> by_g_;
    std::map<std::pair<int, int>, int> hom_cache_;
    std::map<std::pair<int, int>, int> tau_cache_;
};

// t: registry ids of the tau-rigid part, p: vertices i of the projectives P(i).
struct TauPair {
    std::vector<int> t;
    std::vector<int> p;

    int size() const { return static_cast<int>(t.size() + p.size()); }
    bool operator==(const TauPair& o) const { return t == o.t && p == o.p; }
};

void normalize_pair(ModuleRegistry& reg, TauPair& pair);
std::vector<IntVec> pair_key(ModuleRegistry& reg, const TauPair& pair);
std::string pair_string(ModuleRegistry& reg, const TauPair& pair);
std::string key_string(const std::vector<IntVec>& key);
std::vector<Representation> t_modules(const ModuleRegistry& reg, const TauPair& pair);

bool is_tau_rigid(const Representation& m);
bool is_tau_rigid_pair(const std::vector<Representation>& t, const std::vector<int>& p);
bool is_tau_rigid_pair(ModuleRegistry& reg, const TauPair& pair);
bool is_tau_tilting_pair(ModuleRegistry& reg, const TauPair& pair);

// Trace of add(u) in x: the sum of images of all maps from summands of u.
SubRep trace(const std::vector<Representation>& u, const Representation& x);
bool in_fac(const std::vector<Representation>& u, const Representation& x);
bool in_filt_fac(const std::vector<Representation>& u, const Representation& x);

struct TorsionSequence {
    SubRep torsion;
    QuotientRep free;
};

TorsionSequence torsion_submodule(const std::vector<Representation>& t, const Representation& m);

struct TorsionClass {
    std::set<int> members;
    bool operator==(const TorsionClass& o) const { return members == o.members; }
};

TorsionClass fac(const std::vector<Representation>& t, const IndecomposableCatalog& catalog);
TorsionClass filt_fac(const std::vector<Representation>& m, const IndecomposableCatalog& catalog);
bool closed_under_quotients(const TorsionClass& c, const IndecomposableCatalog& catalog);
bool closed_under_extensions(const TorsionClass& c, const IndecomposableCatalog& catalog);
std::vector<int> p_of_torsion_class(const TorsionClass& c, const IndecomposableCatalog& catalog);

struct Approximation {
    Representation target;
    Morphism map;
    // For each component of the target, the index into the distinct summands of u.
    std::vector<int> components;
};

// Minimal left add(u)-approximation of x; u is split into indecomposables first.
Approximation left_approximation(const Representation& x, const std::vector<Representation>& u);
bool is_left_approximation(const Representation& x, const std::vector<Representation>& u, const Approximation& a);

struct ModulePair {
    std::vector<Representation> t;
    std::vector<int> p;
};

// (M, P) -> (Tr M_np + P*, M_pr*), an order-reversing bijection between
// support tau-tilting pairs of an algebra and of its opposite.
ModulePair dual_pair(const ModulePair& pair, AlgebraPtr target);

struct MutationResult {
    TauPair pair;
    bool left = false;
    bool constructive = true;
};

MutationResult mutate(ModuleRegistry& reg, const TauPair& pair, int position);

struct MutationEdge {
    int from = 0;  // larger torsion class
    int to = 0;
    int position = 0;  // deleted summand, indexed in the source's summand list
    int brick = -1;
};

struct GraphLimits {
    int max_nodes = 512;
    int max_depth = 64;
    int max_module_dim = 16;
};

struct MutationGraph {
    std::vector<TauPair> nodes;
    std::vector<int> depth;
    std::vector<MutationEdge> edges;
    bool complete = true;
    std::string cap;
    int fallbacks = 0;

    int find(const TauPair& p) const;
};

MutationGraph mutation_graph(ModuleRegistry& reg, const GraphLimits& limits = {});

struct HassePoset {
    std::vector<TauPair> nodes;
    std::vector<std::pair<int, int>> covers;
    int top = -1;
    int bottom = -1;
};

HassePoset hasse(ModuleRegistry& reg, const MutationGraph& graph);
bool fac_contains(const ModuleRegistry& reg, const TauPair& big, const TauPair& small);

}  // namespace taufan
