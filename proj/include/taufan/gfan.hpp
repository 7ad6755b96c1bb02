#pragma once

#include "taufan/cone.hpp"
#include "taufan/tau.hpp"

#include <string>
#include <vector>

namespace taufan {

IntVec g_vector(const Representation& m);

// Columns in summand order: +g for T summands, -e_i for P(i).
std::vector<IntVec> signed_g_vectors(ModuleRegistry& reg, const TauPair& pair);
Matrix g_matrix(ModuleRegistry& reg, const TauPair& pair);
Matrix c_matrix(ModuleRegistry& reg, const TauPair& pair);

VCone cone_of_pair(ModuleRegistry& reg, const TauPair& pair);
// Membership by solving in the generator basis; interior asks for strictly
// positive coefficients.
bool cone_contains(ModuleRegistry& reg, const TauPair& pair, const QVec& v, bool interior);
QVec interior_sample(ModuleRegistry& reg, const TauPair& pair);

TauPair common_summands(const TauPair& a, const TauPair& b);

struct FanReport {
    int pairs_checked = 0;
    std::vector<std::string> violations;
};

FanReport fan_check(ModuleRegistry& reg, const std::vector<TauPair>& nodes);

struct BrickMatrixReport {
    Matrix product;
    bool diagonal = false;
    std::vector<Scalar> signs;
    bool unit_signs = false;
};

// G^T times the matrix whose columns are the brick dimension vectors.
BrickMatrixReport brick_matrix_check(ModuleRegistry& reg, const TauPair& pair, const std::vector<IntVec>& brick_dims);

struct SemibrickSplit {
    std::vector<int> plus;
    std::vector<int> minus;
    bool hom_vanishing = false;
    bool filt_matches = false;
};

// bricks[i] labels column i; entries are catalog indices.
SemibrickSplit semibrick_split(ModuleRegistry& reg, const TauPair& pair, const std::vector<int>& bricks,
                               const std::vector<Scalar>& signs, const IndecomposableCatalog& catalog);

bool sign_coherent(const Matrix& c);

}  // namespace taufan
