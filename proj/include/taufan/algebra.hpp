#pragma once

#include "taufan/field.hpp"
#include "taufan/matrix.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace taufan {

struct Arrow {
    std::string label;
    int source = 0;  // 0-based
    int target = 0;
};

struct Quiver {
    int vertex_count = 0;
    std::vector<Arrow> arrows;

    int arrow_index(const std::string& label) const;
    bool operator==(const Quiver& other) const;
};

// A path is a sequence of composable arrows read left to right; a trivial
// path has no arrows and source == target.
struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool operator==(const Path& other) const
    {
        return source == other.source && target == other.target && arrows == other.arrows;
    }
};

struct Term {
    Scalar coefficient;
    std::vector<int> arrows;
};

struct Relation {
    std::vector<Term> terms;
};

// Element of the algebra written in the path basis (basis index -> coefficient).
using Element = std::map<int, Scalar>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AlgebraLimits {
    long max_paths = 200000;
    long max_generators = 400000;
};

class Algebra {
public:
    static AlgebraPtr build(Quiver quiver, std::vector<Relation> relations, Field field,
                            std::optional<int> nil_bound = std::nullopt, const AlgebraLimits& limits = {});

    const Quiver& quiver() const { return quiver_; }
    int vertex_count() const { return quiver_.vertex_count; }
    int arrow_count() const { return static_cast<int>(quiver_.arrows.size()); }
    const std::vector<Relation>& relations() const { return relations_; }
    const Field& field() const { return field_; }
    int nil_bound() const { return nil_bound_; }

    const std::vector<Path>& basis() const { return basis_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<int>& basis_between(int source, int target) const;
    int position_in_block(int basis_index) const { return block_position_[basis_index]; }
    int trivial_path(int vertex) const { return trivial_[vertex]; }

    Element reduce(int source, const std::vector<int>& arrows) const;
    Element multiply(int basis_left, int basis_right) const;
    Element multiply(const Element& left, const Element& right) const;

    Matrix symmetrizer() const;
    std::string path_string(const Path& p) const;
    std::string element_string(const Element& e) const;
    std::string serialize() const;

    AlgebraPtr opposite() const;
    AlgebraPtr over_field(const Field& field) const;
    bool structurally_equal(const Algebra& other) const;
    bool relation_vanishes(const Relation& r) const;

    // Number of non-pruned paths enumerated while certifying the nil bound.
    long enumerated_paths() const { return enumerated_paths_; }

private:
    Algebra() = default;

    Quiver quiver_;
    std::vector<Relation> relations_;
    Field field_ = Field::prime(2);
    int nil_bound_ = 0;
    bool declared_bound_ = false;
    std::vector<Path> basis_;
    std::map<std::vector<int>, int> basis_index_;
    std::map<std::vector<int>, Element> normal_forms_;
    std::vector<std::vector<std::vector<int>>> blocks_;
    std::vector<int> block_position_;
    std::vector<int> trivial_;
    long enumerated_paths_ = 0;

    friend class AlgebraBuilder;
};

AlgebraPtr parse_algebra(const std::string& text, const AlgebraLimits& limits = {});
AlgebraPtr load_algebra(const std::string& path, const AlgebraLimits& limits = {});
std::vector<int> path_key(const Quiver& q, int source, const std::vector<int>& arrows);

}  // namespace taufan
