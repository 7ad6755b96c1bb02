#include "taufan/cone.hpp"

#include "taufan/error.hpp"

#include <algorithm>
#include <set>

namespace taufan {

namespace {

const Field& Q()
{
    static const Field f = Field::rationals();
    return f;
}

Matrix rows_matrix(const std::vector<QVec>& rows, int ambient)
{
    Matrix m(static_cast<int>(rows.size()), ambient);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < ambient; ++c)
            m(static_cast<int>(r), c) = rows[r][c];
    return m;
}

std::vector<QVec> nullspace_vectors(const std::vector<QVec>& rows, int ambient)
{
    Matrix ns = linalg::nullspace(Q(), rows_matrix(rows, ambient));
    std::vector<QVec> out;
    for (int c = 0; c < ns.cols(); ++c)
        out.push_back(ns.column_vector(c));
    return out;
}

int rank_of(const std::vector<QVec>& rows, int ambient)
{
    if (rows.empty())
        return 0;
    return linalg::rank(Q(), rows_matrix(rows, ambient));
}

bool is_zero_vector(const QVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

std::vector<QVec> canonical_span(const std::vector<QVec>& vecs, int ambient)
{
    if (vecs.empty())
        return {};
    auto e = linalg::rref(Q(), rows_matrix(vecs, ambient));
    std::vector<QVec> out;
    for (size_t r = 0; r < e.pivots.size(); ++r)
        out.push_back(primitive(e.reduced.row_vector(static_cast<int>(r))));
    return out;
}

}  // namespace

Scalar dot(const QVec& a, const QVec& b)
{
    Scalar s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

QVec primitive(const QVec& v)
{
    mpz_class l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_class num = Scalar(x * l).get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    QVec out(v.size());
    if (g == 0)
        return out;
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = Scalar(v[i] * l / g);
        out[i].canonicalize();
    }
    return out;
}

IntVec to_int_vector(const QVec& v)
{
    IntVec out;
    for (const auto& x : v) {
        if (x.get_den() != 1 || !x.get_num().fits_sint_p())
            throw inconsistency("gfan", "vector " + vector_string(v) + " is not a small integer vector");
        out.push_back(static_cast<int>(x.get_num().get_si()));
    }
    return out;
}

QVec to_qvec(const IntVec& v)
{
    QVec out;
    for (int x : v)
        out.emplace_back(x);
    return out;
}

VCone generators_of(const HCone& h)
{
    const int n = h.ambient;
    std::vector<QVec> all = h.equalities;
    all.insert(all.end(), h.inequalities.begin(), h.inequalities.end());
    VCone v;
    v.ambient = n;
    v.lineality = canonical_span(nullspace_vectors(all, n), n);

    std::vector<QVec> ineqs;
    for (const auto& q : h.inequalities)
        if (!is_zero_vector(q))
            ineqs.push_back(q);

    std::vector<QVec> base = h.equalities;
    base.insert(base.end(), v.lineality.begin(), v.lineality.end());
    const int base_rank = rank_of(base, n);
    const int need = n - 1 - base_rank;
    if (need < 0)
        return v;

    std::set<QVec> found;
    auto consider = [&](const std::vector<QVec>& rows) {
        auto ns = nullspace_vectors(rows, n);
        if (ns.size() != 1)
            return;
        for (int sign : {1, -1}) {
            QVec r = ns[0];
            if (sign < 0)
                for (auto& x : r)
                    x = -x;
            bool ok = true;
            for (const auto& q : ineqs)
                if (dot(q, r) > 0) {
                    ok = false;
                    break;
                }
            if (ok)
                found.insert(primitive(r));
        }
    };

    const int m = static_cast<int>(ineqs.size());
    if (need > m)
        return v;
    std::vector<int> pick(need);
    for (int i = 0; i < need; ++i)
        pick[i] = i;
    while (true) {
        std::vector<QVec> rows = base;
        for (int i : pick)
            rows.push_back(ineqs[i]);
        if (rank_of(rows, n) == n - 1)
            consider(rows);
        int i = need - 1;
        while (i >= 0 && pick[i] == m - need + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < need; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    v.rays.assign(found.begin(), found.end());
    return v;
}

HCone constraints_of(const VCone& v)
{
    HCone dual;
    dual.ambient = v.ambient;
    dual.equalities = v.lineality;
    dual.inequalities = v.rays;
    VCone d = generators_of(dual);
    HCone h;
    h.ambient = v.ambient;
    h.equalities = d.lineality;
    h.inequalities = d.rays;
    return h;
}

VCone cone_hull(int ambient, const std::vector<QVec>& generators)
{
    VCone raw;
    raw.ambient = ambient;
    for (const auto& g : generators)
        if (!is_zero_vector(g))
            raw.rays.push_back(g);
    return generators_of(constraints_of(raw));
}

HCone intersect(const HCone& a, const HCone& b)
{
    HCone h = a;
    h.equalities.insert(h.equalities.end(), b.equalities.begin(), b.equalities.end());
    h.inequalities.insert(h.inequalities.end(), b.inequalities.begin(), b.inequalities.end());
    return h;
}

bool contains(const HCone& h, const QVec& x)
{
    for (const auto& e : h.equalities)
        if (dot(e, x) != 0)
            return false;
    for (const auto& q : h.inequalities)
        if (dot(q, x) > 0)
            return false;
    return true;
}

bool strictly_satisfies(const HCone& h, const QVec& x)
{
    for (const auto& e : h.equalities)
        if (dot(e, x) != 0)
            return false;
    for (const auto& q : h.inequalities)
        if (!is_zero_vector(q) && dot(q, x) >= 0)
            return false;
    return true;
}

bool contains(const HCone& outer, const VCone& inner)
{
    for (const auto& r : inner.rays)
        if (!contains(outer, r))
            return false;
    for (const auto& l : inner.lineality) {
        if (!contains(outer, l))
            return false;
        QVec neg = l;
        for (auto& x : neg)
            x = -x;
        if (!contains(outer, neg))
            return false;
    }
    return true;
}

bool same_cone(const VCone& a, const VCone& b)
{
    return contains(constraints_of(a), b) && contains(constraints_of(b), a);
}

int dimension(const VCone& v)
{
    std::vector<QVec> all = v.lineality;
    all.insert(all.end(), v.rays.begin(), v.rays.end());
    return rank_of(all, v.ambient);
}

int dimension(const HCone& h)
{
    return dimension(generators_of(h));
}

QVec relative_interior_point(const VCone& v)
{
    QVec p(v.ambient, 0);
    for (const auto& r : v.rays)
        for (int i = 0; i < v.ambient; ++i)
            p[i] += r[i];
    return p;
}

}  // namespace taufan
