#pragma once

#include "taufan/representation.hpp"

#include <vector>

namespace taufan {

// Minimal projective presentation P1 --map--> P0 --cover--> M --> 0.
// elements[k][l] lies in e_{p0_tops[k]} A e_{p1_tops[l]} and describes the
// component P(p1_tops[l]) -> P(p0_tops[k]) as left multiplication.
struct Presentation {
    Representation module;
    IntVec a;
    IntVec b;
    std::vector<int> p0_tops;
    std::vector<int> p1_tops;
    std::vector<std::vector<Element>> elements;
    Representation p0;
    Representation p1;
    Morphism map;
    Morphism cover;
    SubRep syzygy;
};

Representation projective_sum(AlgebraPtr alg, const std::vector<int>& tops);
Representation injective_sum(AlgebraPtr alg, const std::vector<int>& tops);
Morphism projective_map(AlgebraPtr alg, const std::vector<int>& to_tops, const std::vector<int>& from_tops,
                        const std::vector<std::vector<Element>>& elements);
Morphism nakayama_map(AlgebraPtr alg, const std::vector<int>& to_tops, const std::vector<int>& from_tops,
                      const std::vector<std::vector<Element>>& elements);

Presentation min_presentation(const Representation& m);
Representation ar_translate(const Representation& m);
Representation auslander_transpose(const Representation& m, AlgebraPtr opposite);
Element opposite_element(const Algebra& alg, const Algebra& opposite, const Element& x);
int ext1_dim(const Representation& x, const Representation& y);
int ext1_dim(const Presentation& px, const Representation& y);
bool is_projective_module(const Representation& m, int* vertex = nullptr);

}  // namespace taufan
