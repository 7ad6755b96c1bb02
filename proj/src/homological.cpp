#include "taufan/homological.hpp"

#include "taufan/error.hpp"

namespace taufan {

namespace {

// Offsets of each summand's block at every vertex of a sum of projectives
// (use_target = true) or injectives.
std::vector<IntVec> block_offsets(const Algebra& alg, const std::vector<int>& tops, bool projective_blocks)
{
    const int n = alg.vertex_count();
    std::vector<IntVec> off(tops.size(), IntVec(n, 0));
    IntVec running(n, 0);
    for (size_t k = 0; k < tops.size(); ++k)
        for (int t = 0; t < n; ++t) {
            off[k][t] = running[t];
            running[t] += static_cast<int>(projective_blocks ? alg.basis_between(tops[k], t).size()
                                                             : alg.basis_between(t, tops[k]).size());
        }
    return off;
}

IntVec sum_dims(const Algebra& alg, const std::vector<int>& tops, bool projective_blocks)
{
    IntVec d(alg.vertex_count(), 0);
    for (int top : tops)
        for (int t = 0; t < alg.vertex_count(); ++t)
            d[t] += static_cast<int>(projective_blocks ? alg.basis_between(top, t).size()
                                                       : alg.basis_between(t, top).size());
    return d;
}

void accumulate(Element& into, const Element& add, const Scalar& c, const Field& F)
{
    for (const auto& [k, v] : add) {
        Scalar nv = F.add(into[k], F.mul(c, v));
        if (nv == 0)
            into.erase(k);
        else
            into[k] = nv;
    }
}

// x * basis path q, with x = sum c_p p.
Element left_multiply(const Algebra& alg, const Element& x, int q)
{
    Element out;
    for (const auto& [p, c] : x)
        accumulate(out, alg.multiply(p, q), c, alg.field());
    return out;
}

Element right_multiply(const Algebra& alg, int y, const Element& x)
{
    Element out;
    for (const auto& [p, c] : x)
        accumulate(out, alg.multiply(y, p), c, alg.field());
    return out;
}

}  // namespace

Representation projective_sum(AlgebraPtr alg, const std::vector<int>& tops)
{
    if (tops.empty())
        return Representation::zero(alg);
    std::vector<Representation> parts;
    for (int t : tops)
        parts.push_back(projective(alg, t));
    return direct_sum_module(parts);
}

Representation injective_sum(AlgebraPtr alg, const std::vector<int>& tops)
{
    if (tops.empty())
        return Representation::zero(alg);
    std::vector<Representation> parts;
    for (int t : tops)
        parts.push_back(injective(alg, t));
    return direct_sum_module(parts);
}

Morphism projective_map(AlgebraPtr alg, const std::vector<int>& to_tops, const std::vector<int>& from_tops,
                        const std::vector<std::vector<Element>>& elements)
{
    const int n = alg->vertex_count();
    IntVec to_dims = sum_dims(*alg, to_tops, true);
    IntVec from_dims = sum_dims(*alg, from_tops, true);
    auto to_off = block_offsets(*alg, to_tops, true);
    auto from_off = block_offsets(*alg, from_tops, true);
    Morphism f;
    for (int t = 0; t < n; ++t)
        f.comps.emplace_back(to_dims[t], from_dims[t]);
    for (size_t k = 0; k < to_tops.size(); ++k)
        for (size_t l = 0; l < from_tops.size(); ++l) {
            const Element& x = elements[k][l];
            if (x.empty())
                continue;
            for (int t = 0; t < n; ++t) {
                const auto& src = alg->basis_between(from_tops[l], t);
                for (size_t c = 0; c < src.size(); ++c)
                    for (const auto& [b, v] : left_multiply(*alg, x, src[c]))
                        f.comps[t](to_off[k][t] + alg->position_in_block(b), from_off[l][t] + static_cast<int>(c)) =
                            v;
            }
        }
    return f;
}

Morphism nakayama_map(AlgebraPtr alg, const std::vector<int>& to_tops, const std::vector<int>& from_tops,
                      const std::vector<std::vector<Element>>& elements)
{
    const int n = alg->vertex_count();
    IntVec to_dims = sum_dims(*alg, to_tops, false);
    IntVec from_dims = sum_dims(*alg, from_tops, false);
    auto to_off = block_offsets(*alg, to_tops, false);
    auto from_off = block_offsets(*alg, from_tops, false);
    Morphism f;
    for (int t = 0; t < n; ++t)
        f.comps.emplace_back(to_dims[t], from_dims[t]);
    for (size_t k = 0; k < to_tops.size(); ++k)
        for (size_t l = 0; l < from_tops.size(); ++l) {
            const Element& x = elements[k][l];
            if (x.empty())
                continue;
            for (int t = 0; t < n; ++t) {
                const auto& rows = alg->basis_between(t, to_tops[k]);
                for (size_t r = 0; r < rows.size(); ++r)
                    for (const auto& [q, v] : right_multiply(*alg, rows[r], x))
                        f.comps[t](to_off[k][t] + static_cast<int>(r), from_off[l][t] + alg->position_in_block(q)) =
                            v;
            }
        }
    return f;
}

namespace {

// Vectors completing rad(M)_i to M_i, as (vertex, column vector) pairs.
std::vector<std::pair<int, QVec>> top_generators(const Representation& m)
{
    const Field& F = m.field();
    auto rad = radical_spaces(m);
    std::vector<std::pair<int, QVec>> gens;
    for (int i = 0; i < m.algebra().vertex_count(); ++i) {
        Matrix comp = linalg::complement_basis(F, rad[i], m.dim(i));
        for (int c = 0; c < comp.cols(); ++c)
            gens.emplace_back(i, comp.column_vector(c));
    }
    return gens;
}

Morphism cover_map(const Representation& m, const std::vector<std::pair<int, QVec>>& gens)
{
    const Algebra& alg = m.algebra();
    const Field& F = m.field();
    const int n = alg.vertex_count();
    std::vector<int> tops;
    for (const auto& g : gens)
        tops.push_back(g.first);
    IntVec dims = sum_dims(alg, tops, true);
    Morphism pi;
    for (int t = 0; t < n; ++t) {
        Matrix c(m.dim(t), dims[t]);
        int col = 0;
        for (const auto& [i, v] : gens)
            for (int b : alg.basis_between(i, t)) {
                QVec img = linalg::apply(F, m.path_map(i, alg.basis()[b].arrows), v);
                for (int r = 0; r < m.dim(t); ++r)
                    c(r, col) = img[r];
                ++col;
            }
        pi.comps.push_back(std::move(c));
    }
    return pi;
}

}  // namespace

Presentation min_presentation(const Representation& m)
{
    AlgebraPtr alg = m.algebra_ptr();
    const Field& F = m.field();
    const int n = alg->vertex_count();
    Presentation pr;
    pr.module = m;
    pr.a.assign(n, 0);
    pr.b.assign(n, 0);

    auto gens = top_generators(m);
    for (const auto& g : gens) {
        pr.p0_tops.push_back(g.first);
        ++pr.a[g.first];
    }
    pr.p0 = projective_sum(alg, pr.p0_tops);
    pr.cover = cover_map(m, gens);
    if (!is_epimorphism(F, m, pr.cover))
        throw inconsistency("repcat", "projective cover is not surjective");
    pr.syzygy = kernel(pr.p0, pr.cover);

    // Minimality: the kernel has no component along any trivial path e_{i_k}.
    auto p0_off = block_offsets(*alg, pr.p0_tops, true);
    for (size_t k = 0; k < pr.p0_tops.size(); ++k) {
        int i = pr.p0_tops[k];
        int row = p0_off[k][i] + alg->position_in_block(alg->trivial_path(i));
        const Matrix& inc = pr.syzygy.inclusion.comps[i];
        for (int c = 0; c < inc.cols(); ++c)
            if (inc(row, c) != 0)
                throw inconsistency("repcat", "projective cover is not minimal");
    }

    auto kgens = top_generators(pr.syzygy.module);
    for (const auto& g : kgens) {
        pr.p1_tops.push_back(g.first);
        ++pr.b[g.first];
    }
    pr.elements.assign(pr.p0_tops.size(), std::vector<Element>(pr.p1_tops.size()));
    for (size_t l = 0; l < kgens.size(); ++l) {
        int j = kgens[l].first;
        QVec v = linalg::apply(F, pr.syzygy.inclusion.comps[j], kgens[l].second);
        for (size_t k = 0; k < pr.p0_tops.size(); ++k) {
            const auto& paths = alg->basis_between(pr.p0_tops[k], j);
            for (size_t t = 0; t < paths.size(); ++t) {
                const Scalar& c = v[p0_off[k][j] + static_cast<int>(t)];
                if (c != 0)
                    pr.elements[k][l][paths[t]] = c;
            }
        }
    }
    pr.p1 = projective_sum(alg, pr.p1_tops);
    pr.map = projective_map(alg, pr.p0_tops, pr.p1_tops, pr.elements);

    if (!compose(F, pr.cover, pr.map).is_zero())
        throw inconsistency("repcat", "presentation is not a complex");
    auto img = image_spaces(pr.p0, pr.map);
    for (int t = 0; t < n; ++t)
        if (img[t].cols() != pr.syzygy.module.dim(t))
            throw inconsistency("repcat", "presentation is not exact at P0");
    return pr;
}

Representation ar_translate(const Representation& m)
{
    if (m.is_zero())
        return m;
    Presentation pr = min_presentation(m);
    if (pr.p1_tops.empty())
        return Representation::zero(m.algebra_ptr());
    AlgebraPtr alg = m.algebra_ptr();
    Representation nu1 = injective_sum(alg, pr.p1_tops);
    Morphism nu = nakayama_map(alg, pr.p0_tops, pr.p1_tops, pr.elements);
    return kernel(nu1, nu).module;
}

Element opposite_element(const Algebra& alg, const Algebra& opposite, const Element& x)
{
    const Field& F = alg.field();
    Element out;
    for (const auto& [p, c] : x) {
        const Path& path = alg.basis()[p];
        std::vector<int> rev(path.arrows.rbegin(), path.arrows.rend());
        accumulate(out, opposite.reduce(path.target, rev), c, F);
    }
    return out;
}

Representation auslander_transpose(const Representation& m, AlgebraPtr opposite)
{
    if (m.is_zero())
        return Representation::zero(opposite);
    Presentation pr = min_presentation(m);
    const Algebra& alg = m.algebra();
    std::vector<std::vector<Element>> op(pr.p1_tops.size(), std::vector<Element>(pr.p0_tops.size()));
    for (size_t k = 0; k < pr.p0_tops.size(); ++k)
        for (size_t l = 0; l < pr.p1_tops.size(); ++l)
            op[l][k] = opposite_element(alg, *opposite, pr.elements[k][l]);
    Representation target = projective_sum(opposite, pr.p1_tops);
    if (target.is_zero())
        return target;
    Morphism f = projective_map(opposite, pr.p1_tops, pr.p0_tops, op);
    return cokernel(target, f).module;
}

int ext1_dim(const Presentation& px, const Representation& y)
{
    int hom_p0 = 0;
    for (int i = 0; i < y.algebra().vertex_count(); ++i)
        hom_p0 += px.a[i] * y.dim(i);
    return hom_dim(px.syzygy.module, y) - hom_p0 + hom_dim(px.module, y);
}

int ext1_dim(const Representation& x, const Representation& y)
{
    if (x.is_zero() || y.is_zero())
        return 0;
    return ext1_dim(min_presentation(x), y);
}

bool is_projective_module(const Representation& m, int* vertex)
{
    if (m.is_zero())
        return false;
    Presentation pr = min_presentation(m);
    if (!pr.p1_tops.empty() || pr.p0_tops.size() != 1)
        return false;
    if (vertex)
        *vertex = pr.p0_tops[0];
    return true;
}

}  // namespace taufan
