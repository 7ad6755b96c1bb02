#pragma once

#include "taufan/gfan.hpp"
#include "taufan/submodules.hpp"

#include <set>
#include <string>
#include <vector>

namespace taufan {

Scalar pairing(const Algebra& alg, const QVec& v, const IntVec& d);

// Dimension vectors of the proper nonzero submodules, the only data the
// King conditions need.
struct ProfiledModule {
    IntVec dims;
    std::vector<IntVec> proper;
};

ProfiledModule profile(const Representation& m);
std::vector<ProfiledModule> profile_catalog(const IndecomposableCatalog& catalog);

bool is_semistable(const Algebra& alg, const ProfiledModule& m, const QVec& v);
bool is_stable(const Algebra& alg, const ProfiledModule& m, const QVec& v);
bool is_semistable(const Representation& m, const QVec& v);
bool is_stable(const Representation& m, const QVec& v);

struct StabilitySpace {
    IntVec dims;
    HCone cone;
    int dimension = 0;
    int codim = 0;
};

StabilitySpace stability_space(const Algebra& alg, const ProfiledModule& m);
StabilitySpace stability_space(const Representation& m);
bool is_wall(const Representation& m);
bool sum_rule_check(const Representation& m, const Representation& n);

struct Chamber {
    TauPair pair;
    VCone cone;
};

std::vector<Chamber> chambers(ModuleRegistry& reg, const MutationGraph& graph);

struct Location {
    int chamber = -1;
    std::vector<int> walls;
};

Location locate(ModuleRegistry& reg, const MutationGraph& graph, const std::vector<ProfiledModule>& profiles,
                const QVec& v);

std::vector<int> semistable_indecs(const Algebra& alg, const std::vector<ProfiledModule>& profiles, const QVec& v);
std::vector<int> stable_indecs(const Algebra& alg, const std::vector<ProfiledModule>& profiles, const QVec& v);
std::vector<int> perpendicular_category(ModuleRegistry& reg, const TauPair& pair, const IndecomposableCatalog& catalog);

struct BktMembership {
    bool torsion = false;
    bool torsion_closure = false;
    bool torsion_free = false;
    bool torsion_free_closure = false;
};

BktMembership bkt_membership(const Algebra& alg, const ProfiledModule& m, const QVec& v);

struct StableFiltration {
    std::vector<IntVec> chain;
    std::vector<Representation> factors;
    std::vector<IntVec> factor_dims;
};

// Descends through maximal submodules of slope zero; choice selects among the
// maximal candidates at each step (modulo their number).
StableFiltration stable_filtration(const Representation& m, const QVec& v, int choice = 0);
std::set<std::vector<IntVec>> stable_factor_multisets(const Representation& m, const QVec& v, int budget = 2000);

// Brick labelling the facet of a tau-tilting pair opposite to a summand.
int wall_label(ModuleRegistry& reg, const TauPair& pair, int position, const std::vector<ProfiledModule>& profiles);

struct ClosedFormWall {
    std::string name;
    IntVec dims;
    IntVec direction;
    bool line = false;
    bool limit = false;
};

bool is_kronecker(const Algebra& alg);
// Axis lines, the four preprojective/preinjective ray families for m up to
// m_max, and the limit ray of the regular modules.
std::vector<ClosedFormWall> kronecker_walls(int m_max);

}  // namespace taufan
