#pragma once

#include "taufan/matrix.hpp"

#include <vector>

namespace taufan {

// {x : e.x = 0 for e in equalities, h.x <= 0 for h in inequalities}
struct HCone {
    int ambient = 0;
    std::vector<QVec> equalities;
    std::vector<QVec> inequalities;
};

// lineality span plus the nonnegative hull of rays; rays are extreme rays of
// the pointed part orthogonal to the lineality space, scaled to primitive
// integer vectors and sorted.
struct VCone {
    int ambient = 0;
    std::vector<QVec> lineality;
    std::vector<QVec> rays;
};

QVec primitive(const QVec& v);
IntVec to_int_vector(const QVec& v);
QVec to_qvec(const IntVec& v);
Scalar dot(const QVec& a, const QVec& b);

VCone generators_of(const HCone& h);
HCone constraints_of(const VCone& v);
VCone cone_hull(int ambient, const std::vector<QVec>& generators);

HCone intersect(const HCone& a, const HCone& b);
bool contains(const HCone& h, const QVec& x);
bool strictly_satisfies(const HCone& h, const QVec& x);
bool contains(const HCone& outer, const VCone& inner);
bool same_cone(const VCone& a, const VCone& b);
int dimension(const VCone& v);
int dimension(const HCone& h);
QVec relative_interior_point(const VCone& v);

}  // namespace taufan
