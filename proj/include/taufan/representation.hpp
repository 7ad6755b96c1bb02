#pragma once

#include "taufan/algebra.hpp"

#include <string>
#include <vector>

namespace taufan {

class Representation {
public:
    Representation() = default;
    Representation(AlgebraPtr algebra, IntVec dims, std::vector<Matrix> maps);

    static Representation zero(AlgebraPtr algebra);

    const Algebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    const Field& field() const { return algebra_->field(); }
    const IntVec& dims() const { return dims_; }
    int dim(int vertex) const { return dims_[vertex]; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    const Matrix& map(int arrow) const { return maps_[arrow]; }
    const std::vector<Matrix>& maps() const { return maps_; }

    // Matrix of the right action of a path (arrows applied left to right).
    Matrix path_map(int source, const std::vector<int>& arrows) const;
    Matrix element_map(int source, int target, const Element& x) const;
    bool satisfies_relations() const;

    bool operator==(const Representation& other) const
    {
        return dims_ == other.dims_ && maps_ == other.maps_;
    }

private:
    AlgebraPtr algebra_;
    IntVec dims_;
    std::vector<Matrix> maps_;
};

// A morphism stores one matrix per vertex, dims_target[i] x dims_source[i].
struct Morphism {
    std::vector<Matrix> comps;

    bool is_zero() const;
};

Morphism identity_morphism(const Representation& m);
Morphism zero_morphism(const Representation& from, const Representation& to);
Morphism compose(const Field& F, const Morphism& g, const Morphism& f);
Morphism add(const Field& F, const Morphism& a, const Morphism& b);
Morphism scale(const Field& F, const Morphism& a, const Scalar& s);
bool is_morphism(const Representation& from, const Representation& to, const Morphism& f);
bool is_isomorphism(const Field& F, const Morphism& f);
bool is_epimorphism(const Field& F, const Representation& to, const Morphism& f);
QVec flatten(const Morphism& f);

struct HomBasis {
    std::vector<Morphism> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

HomBasis hom_basis(const Representation& from, const Representation& to);
int hom_dim(const Representation& from, const Representation& to);

// Sub- and quotient objects, always carried with their structure maps.
struct SubRep {
    Representation module;
    Morphism inclusion;
};

struct QuotientRep {
    Representation module;
    Morphism projection;
};

SubRep subrepresentation(const Representation& m, const std::vector<Matrix>& bases);
QuotientRep quotient(const Representation& m, const std::vector<Matrix>& bases);
bool is_arrow_stable(const Representation& m, const std::vector<Matrix>& bases);
SubRep kernel(const Representation& from, const Morphism& f);
SubRep image(const Representation& to, const Morphism& f);
QuotientRep cokernel(const Representation& to, const Morphism& f);
std::vector<Matrix> image_spaces(const Representation& to, const Morphism& f);

struct DirectSum {
    Representation module;
    std::vector<Morphism> inclusions;
    std::vector<Morphism> projections;
};

DirectSum direct_sum(const std::vector<Representation>& parts);
Representation direct_sum_module(const std::vector<Representation>& parts);

Representation simple(AlgebraPtr alg, int vertex);
Representation projective(AlgebraPtr alg, int vertex);
Representation injective(AlgebraPtr alg, int vertex);

std::vector<Matrix> radical_spaces(const Representation& m);
IntVec top_dims(const Representation& m);
std::vector<IntVec> loewy_layers(const Representation& m);
std::string loewy_name(const Representation& m);

Representation reinterpret(const Representation& m, AlgebraPtr target);
Representation change_basis(const Representation& m, const std::vector<Matrix>& bases);

Representation parse_module(const std::string& text, AlgebraPtr alg, std::string* name = nullptr);
Representation load_module(const std::string& path, AlgebraPtr alg, std::string* name = nullptr);
std::string serialize_module(const Representation& m, const std::string& name);

}  // namespace taufan
