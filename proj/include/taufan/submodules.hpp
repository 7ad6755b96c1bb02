#pragma once

#include "taufan/representation.hpp"

#include <set>
#include <vector>

namespace taufan {

struct SubmoduleOptions {
    long max_candidates = 2000000;
};

// All subspaces of F_p^d, each as a d x k matrix of reduced basis columns.
const std::vector<Matrix>& subspaces(long p, int d);

// Every subrepresentation of a module over a prime field, as per-vertex bases.
std::vector<std::vector<Matrix>> enumerate_submodules(const Representation& m, const SubmoduleOptions& opts = {});

struct SubmoduleProfile {
    Representation module;
    std::set<IntVec> dims;
    std::vector<long> primes;
    bool consistent = true;
};

// Dimension vectors of all submodules; prime fields only.
SubmoduleProfile submodule_profile(const Representation& m, const SubmoduleOptions& opts = {});

// Over q: reduce modulo each prime and take the union, recording whether the
// primes agree. Over a prime field this is submodule_profile.
SubmoduleProfile submodule_profile_mod_primes(const Representation& m, const std::vector<long>& primes = {2},
                                              const SubmoduleOptions& opts = {});

}  // namespace taufan
