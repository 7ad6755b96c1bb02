#include "taufan/gfan.hpp"

#include "taufan/error.hpp"

#include <algorithm>

namespace taufan {

namespace {

const Field& Q()
{
    static const Field f = Field::rationals();
    return f;
}

Matrix generator_matrix(ModuleRegistry& reg, const TauPair& pair)
{
    const int n = reg.algebra()->vertex_count();
    auto cols = signed_g_vectors(reg, pair);
    Matrix g(n, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r < n; ++r)
            g(r, static_cast<int>(c)) = cols[c][r];
    return g;
}

}  // namespace

IntVec g_vector(const Representation& m)
{
    if (m.is_zero())
        return IntVec(m.algebra().vertex_count(), 0);
    Presentation pr = min_presentation(m);
    IntVec g(pr.a.size());
    for (size_t i = 0; i < g.size(); ++i)
        g[i] = pr.a[i] - pr.b[i];
    return g;
}

std::vector<IntVec> signed_g_vectors(ModuleRegistry& reg, const TauPair& pair)
{
    const int n = reg.algebra()->vertex_count();
    std::vector<IntVec> out;
    for (int id : pair.t)
        out.push_back(reg[id].g);
    for (int v : pair.p) {
        IntVec e(n, 0);
        e[v] = -1;
        out.push_back(e);
    }
    return out;
}

Matrix g_matrix(ModuleRegistry& reg, const TauPair& pair)
{
    const int n = reg.algebra()->vertex_count();
    if (pair.size() != n)
        throw usage_error("gfan", "G-matrix needs a tau-tilting pair, got " + pair_string(reg, pair));
    Matrix g = generator_matrix(reg, pair);
    Scalar det = linalg::determinant(Q(), g);
    if (det != 1 && det != -1)
        throw inconsistency("gfan", "G-matrix of " + pair_string(reg, pair) + " has determinant " + det.get_str());
    return g;
}

Matrix c_matrix(ModuleRegistry& reg, const TauPair& pair)
{
    Matrix g = g_matrix(reg, pair);
    auto inv = linalg::inverse(Q(), g.transpose());
    for (int r = 0; r < inv->rows(); ++r)
        for (int c = 0; c < inv->cols(); ++c)
            if ((*inv)(r, c).get_den() != 1)
                throw inconsistency("gfan", "C-matrix of " + pair_string(reg, pair) + " is not integral");
    return *inv;
}

VCone cone_of_pair(ModuleRegistry& reg, const TauPair& pair)
{
    VCone v;
    v.ambient = reg.algebra()->vertex_count();
    for (const auto& g : signed_g_vectors(reg, pair))
        v.rays.push_back(primitive(to_qvec(g)));
    std::sort(v.rays.begin(), v.rays.end());
    if (dimension(v) != static_cast<int>(v.rays.size()))
        throw inconsistency("gfan", "g-vectors of " + pair_string(reg, pair) + " are linearly dependent");
    return v;
}

bool cone_contains(ModuleRegistry& reg, const TauPair& pair, const QVec& v, bool interior)
{
    Matrix g = generator_matrix(reg, pair);
    if (g.cols() == 0) {
        bool zero = std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
        return zero;
    }
    auto x = linalg::solve(Q(), g, Matrix::column(v));
    if (!x)
        return false;
    for (int i = 0; i < x->rows(); ++i) {
        const Scalar& c = (*x)(i, 0);
        if (c < 0 || (interior && c == 0))
            return false;
    }
    return true;
}

QVec interior_sample(ModuleRegistry& reg, const TauPair& pair)
{
    const int n = reg.algebra()->vertex_count();
    QVec v(n, 0);
    for (const auto& g : signed_g_vectors(reg, pair))
        for (int i = 0; i < n; ++i)
            v[i] += g[i];
    return v;
}

TauPair common_summands(const TauPair& a, const TauPair& b)
{
    TauPair c;
    for (int x : a.t)
        if (std::find(b.t.begin(), b.t.end(), x) != b.t.end())
            c.t.push_back(x);
    for (int x : a.p)
        if (std::find(b.p.begin(), b.p.end(), x) != b.p.end())
            c.p.push_back(x);
    return c;
}

FanReport fan_check(ModuleRegistry& reg, const std::vector<TauPair>& nodes)
{
    FanReport r;
    std::vector<HCone> h;
    for (const auto& n : nodes)
        h.push_back(constraints_of(cone_of_pair(reg, n)));
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = i + 1; j < nodes.size(); ++j) {
            ++r.pairs_checked;
            VCone meet = generators_of(intersect(h[i], h[j]));
            VCone expected = cone_of_pair(reg, common_summands(nodes[i], nodes[j]));
            if (!same_cone(meet, expected))
                r.violations.push_back(pair_string(reg, nodes[i]) + " & " + pair_string(reg, nodes[j]));
        }
    return r;
}

BrickMatrixReport brick_matrix_check(ModuleRegistry& reg, const TauPair& pair, const std::vector<IntVec>& brick_dims)
{
    const int n = reg.algebra()->vertex_count();
    Matrix g = g_matrix(reg, pair);
    Matrix b(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r)
            b(r, c) = brick_dims[c][r];
    BrickMatrixReport rep;
    rep.product = linalg::multiply(Q(), g.transpose(), b);
    rep.diagonal = true;
    rep.unit_signs = true;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const Scalar& x = rep.product(r, c);
            if (r != c && x != 0)
                rep.diagonal = false;
        }
    for (int i = 0; i < n; ++i) {
        const Scalar& d = rep.product(i, i);
        rep.signs.push_back(d);
        if (d != 1 && d != -1)
            rep.unit_signs = false;
    }
    rep.unit_signs = rep.unit_signs && rep.diagonal;
    return rep;
}

SemibrickSplit semibrick_split(ModuleRegistry& reg, const TauPair& pair, const std::vector<int>& bricks,
                               const std::vector<Scalar>& signs, const IndecomposableCatalog& catalog)
{
    SemibrickSplit s;
    for (size_t i = 0; i < bricks.size(); ++i)
        (signs[i] > 0 ? s.plus : s.minus).push_back(bricks[i]);
    auto vanishing = [&](const std::vector<int>& set) {
        for (int a : set)
            for (int b : set)
                if (a != b && hom_dim(catalog[a].module, catalog[b].module) != 0)
                    return false;
        return true;
    };
    s.hom_vanishing = vanishing(s.plus) && vanishing(s.minus);
    std::vector<Representation> plus_mods;
    for (int i : s.plus)
        plus_mods.push_back(catalog[i].module);
    s.filt_matches = filt_fac(plus_mods, catalog) == fac(t_modules(reg, pair), catalog);
    return s;
}

bool sign_coherent(const Matrix& c)
{
    for (int col = 0; col < c.cols(); ++col) {
        bool pos = false, neg = false;
        for (int r = 0; r < c.rows(); ++r) {
            pos = pos || c(r, col) > 0;
            neg = neg || c(r, col) < 0;
        }
        if (pos && neg)
            return false;
    }
    return true;
}

}  // namespace taufan
