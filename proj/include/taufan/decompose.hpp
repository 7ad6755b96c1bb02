#pragma once

#include "taufan/representation.hpp"

#include <utility>
#include <vector>

namespace taufan {

struct DecomposeOptions {
    long exhaustive_cap = 65536;
    int random_trials = 64;
    unsigned seed = 20240601u;
};

struct Summand {
    Representation module;
    Morphism inclusion;
    Morphism projection;
};

// Fitting splitting down to indecomposable summands, each carried with its
// inclusion into and projection from the input.
std::vector<Summand> indecomposable_summands(const Representation& m, const DecomposeOptions& opts = {});

struct Decomposition {
    std::vector<std::pair<Representation, int>> parts;
    std::vector<Summand> summands;
    std::vector<int> class_of;
    // Isomorphism from the direct sum of parts (each repeated by its
    // multiplicity, in order) onto the input.
    Morphism witness;
};

Decomposition decompose(const Representation& m, const DecomposeOptions& opts = {});
bool is_indecomposable(const Representation& m, const DecomposeOptions& opts = {});

struct IsoResult {
    bool isomorphic = false;
    Morphism witness;
};

IsoResult is_isomorphic(const Representation& m, const Representation& n, const DecomposeOptions& opts = {});
IsoResult indecomposables_isomorphic(const Representation& m, const Representation& n);
bool is_brick(const Representation& m, const DecomposeOptions& opts = {});

std::vector<Scalar> characteristic_polynomial(const Matrix& a);
std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly);

}  // namespace taufan
