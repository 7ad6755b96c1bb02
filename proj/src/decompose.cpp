#include "taufan/decompose.hpp"

#include "taufan/error.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

namespace taufan {

namespace {

Morphism power(const Field& F, const Morphism& f, int k)
{
    Morphism out;
    for (const auto& c : f.comps)
        out.comps.push_back(linalg::power(F, c, k));
    return out;
}

Morphism combination(const Field& F, const std::vector<Morphism>& basis, const std::vector<Scalar>& coeffs)
{
    Morphism out;
    for (const auto& c : basis[0].comps)
        out.comps.emplace_back(c.rows(), c.cols());
    for (size_t b = 0; b < basis.size(); ++b)
        if (coeffs[b] != 0)
            out = add(F, out, scale(F, basis[b], coeffs[b]));
    return out;
}

Matrix block_matrix(const Morphism& f)
{
    return linalg::block_diagonal(f.comps);
}

struct Split {
    SubRep first;
    SubRep second;
    Morphism proj_first;
    Morphism proj_second;
};

std::optional<Split> fitting_split(const Representation& m, const Morphism& f)
{
    const Field& F = m.field();
    int k = 1;
    for (int d : m.dims())
        k = std::max(k, d);
    Morphism g = power(F, f, k);
    bool zero = g.is_zero();
    bool invertible = is_isomorphism(F, g);
    if (zero || invertible)
        return std::nullopt;
    SubRep im = image(m, g);
    SubRep ker = kernel(m, g);
    Split s{im, ker, {}, {}};
    for (int i = 0; i < m.algebra().vertex_count(); ++i) {
        Matrix full = linalg::hstack({im.inclusion.comps[i], ker.inclusion.comps[i]}, m.dim(i));
        auto inv = linalg::inverse(F, full);
        if (!inv)
            throw inconsistency("repcat", "Fitting decomposition is not a direct sum");
        std::vector<int> top, bottom;
        for (int r = 0; r < im.module.dim(i); ++r)
            top.push_back(r);
        for (int r = im.module.dim(i); r < m.dim(i); ++r)
            bottom.push_back(r);
        s.proj_first.comps.push_back(inv->rows_subset(top));
        s.proj_second.comps.push_back(inv->rows_subset(bottom));
    }
    return s;
}

std::vector<Scalar> candidate_shifts(const Field& F, const Morphism& f)
{
    if (F.is_prime())
        return F.elements();
    std::vector<Scalar> shifts{0};
    Matrix big = block_matrix(f);
    if (big.rows() > 0)
        for (const auto& r : rational_roots(characteristic_polynomial(big)))
            if (r != 0)
                shifts.push_back(r);
    return shifts;
}

std::optional<Split> try_with_shifts(const Representation& m, const Morphism& f, const Morphism& id)
{
    const Field& F = m.field();
    for (const auto& lambda : candidate_shifts(F, f)) {
        Morphism g = lambda == 0 ? f : add(F, f, scale(F, id, F.neg(lambda)));
        if (auto s = fitting_split(m, g))
            return s;
    }
    return std::nullopt;
}

// Dimension of End/rad via the trace form, valid in characteristic zero.
int semisimple_quotient_dim(const Field& F, const std::vector<Morphism>& basis)
{
    const int d = static_cast<int>(basis.size());
    Matrix gram(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Scalar tr = 0;
            Morphism p = compose(F, basis[i], basis[j]);
            for (const auto& c : p.comps)
                for (int r = 0; r < c.rows(); ++r)
                    tr += c(r, r);
            gram(i, j) = tr;
        }
    return linalg::rank(F, gram);
}

std::optional<Split> find_split(const Representation& m, const std::vector<Morphism>& basis,
                                const DecomposeOptions& opts, bool& local)
{
    const Field& F = m.field();
    Morphism id = identity_morphism(m);
    local = false;
    for (const auto& b : basis)
        if (auto s = try_with_shifts(m, b, id))
            return s;

    std::mt19937 rng(opts.seed);
    const int d = static_cast<int>(basis.size());
    for (int trial = 0; trial < opts.random_trials; ++trial) {
        std::vector<Scalar> coeffs(d);
        for (auto& c : coeffs) {
            if (F.is_prime())
                c = static_cast<long>(rng() % static_cast<unsigned long>(F.characteristic()));
            else
                c = static_cast<long>(rng() % 7) - 3;
        }
        if (auto s = try_with_shifts(m, combination(F, basis, coeffs), id))
            return s;
    }

    if (F.is_prime()) {
        const long p = F.characteristic();
        double count = std::pow(static_cast<double>(p), d);
        if (count > static_cast<double>(opts.exhaustive_cap))
            throw budget_error("repcat", "indecomposability inconclusive: " + std::to_string(p) + "^" +
                                             std::to_string(d) + " endomorphisms exceed the exhaustive cap");
        std::vector<Scalar> coeffs(d, 0);
        while (true) {
            int pos = 0;
            while (pos < d) {
                coeffs[pos] += 1;
                if (coeffs[pos] == p) {
                    coeffs[pos] = 0;
                    ++pos;
                } else {
                    break;
                }
            }
            if (pos == d)
                break;
            if (auto s = fitting_split(m, combination(F, basis, coeffs)))
                return s;
        }
        local = true;
        return std::nullopt;
    }

    if (semisimple_quotient_dim(F, basis) == 1) {
        local = true;
        return std::nullopt;
    }
    throw budget_error("repcat", "indecomposability inconclusive over q: End/rad has dimension > 1 "
                                 "and no rational splitting endomorphism was found");
}

void split_recursive(const Representation& m, const Morphism& inclusion, const Morphism& projection,
                     const DecomposeOptions& opts, std::vector<Summand>& out)
{
    if (m.is_zero())
        return;
    const Field& F = m.field();
    HomBasis end = hom_basis(m, m);
    if (end.dim() == 1) {
        out.push_back({m, inclusion, projection});
        return;
    }
    bool local = false;
    auto s = find_split(m, end.basis, opts, local);
    if (!s) {
        out.push_back({m, inclusion, projection});
        return;
    }
    split_recursive(s->first.module, compose(F, inclusion, s->first.inclusion),
                    compose(F, s->proj_first, projection), opts, out);
    split_recursive(s->second.module, compose(F, inclusion, s->second.inclusion),
                    compose(F, s->proj_second, projection), opts, out);
}

}  // namespace

std::vector<Summand> indecomposable_summands(const Representation& m, const DecomposeOptions& opts)
{
    std::vector<Summand> out;
    split_recursive(m, identity_morphism(m), identity_morphism(m), opts, out);
    return out;
}

bool is_indecomposable(const Representation& m, const DecomposeOptions& opts)
{
    if (m.is_zero())
        return false;
    HomBasis end = hom_basis(m, m);
    if (end.dim() == 1)
        return true;
    bool local = false;
    return !find_split(m, end.basis, opts, local).has_value();
}

IsoResult indecomposables_isomorphic(const Representation& m, const Representation& n)
{
    IsoResult r;
    if (m.dims() != n.dims())
        return r;
    const Field& F = m.field();
    // The non-isomorphisms between indecomposables form a proper subspace,
    // so an isomorphism exists iff some basis element is one.
    for (const auto& f : hom_basis(m, n).basis)
        if (is_isomorphism(F, f)) {
            r.isomorphic = true;
            r.witness = f;
            return r;
        }
    return r;
}

Decomposition decompose(const Representation& m, const DecomposeOptions& opts)
{
    const Field& F = m.field();
    Decomposition d;
    d.summands = indecomposable_summands(m, opts);
    std::vector<Morphism> to_summand;
    for (const auto& s : d.summands) {
        int cls = -1;
        Morphism iso;
        for (size_t c = 0; c < d.parts.size(); ++c) {
            auto r = indecomposables_isomorphic(d.parts[c].first, s.module);
            if (r.isomorphic) {
                cls = static_cast<int>(c);
                iso = r.witness;
                break;
            }
        }
        if (cls < 0) {
            cls = static_cast<int>(d.parts.size());
            d.parts.emplace_back(s.module, 0);
            iso = identity_morphism(s.module);
        }
        ++d.parts[cls].second;
        d.class_of.push_back(cls);
        to_summand.push_back(iso);
    }
    const int n = m.algebra().vertex_count();
    d.witness.comps.assign(n, Matrix());
    for (int i = 0; i < n; ++i) {
        std::vector<Matrix> cols;
        for (size_t c = 0; c < d.parts.size(); ++c)
            for (size_t s = 0; s < d.summands.size(); ++s)
                if (d.class_of[s] == static_cast<int>(c))
                    cols.push_back(linalg::multiply(F, d.summands[s].inclusion.comps[i], to_summand[s].comps[i]));
        d.witness.comps[i] = linalg::hstack(cols, m.dim(i));
    }
    return d;
}

IsoResult is_isomorphic(const Representation& m, const Representation& n, const DecomposeOptions& opts)
{
    IsoResult r;
    if (m.dims() != n.dims())
        return r;
    if (m.is_zero()) {
        r.isomorphic = true;
        r.witness = identity_morphism(m);
        return r;
    }
    const Field& F = m.field();
    auto sm = indecomposable_summands(m, opts);
    auto sn = indecomposable_summands(n, opts);
    if (sm.size() != sn.size())
        return r;
    std::vector<bool> used(sn.size(), false);
    Morphism total = zero_morphism(m, n);
    for (const auto& a : sm) {
        bool matched = false;
        for (size_t j = 0; j < sn.size(); ++j) {
            if (used[j])
                continue;
            auto iso = indecomposables_isomorphic(a.module, sn[j].module);
            if (!iso.isomorphic)
                continue;
            used[j] = true;
            matched = true;
            total = add(F, total, compose(F, sn[j].inclusion, compose(F, iso.witness, a.projection)));
            break;
        }
        if (!matched)
            return r;
    }
    if (!is_isomorphism(F, total) || !is_morphism(m, n, total))
        throw inconsistency("repcat", "assembled isomorphism witness failed verification");
    r.isomorphic = true;
    r.witness = total;
    return r;
}

bool is_brick(const Representation& m, const DecomposeOptions& opts)
{
    if (m.is_zero())
        return false;
    const Field& F = m.field();
    HomBasis end = hom_basis(m, m);
    const int d = end.dim();
    if (d == 1)
        return true;
    if (F.is_prime()) {
        const long p = F.characteristic();
        if (std::pow(static_cast<double>(p), d) > static_cast<double>(opts.exhaustive_cap))
            throw budget_error("repcat", "brick test inconclusive: endomorphism space too large to exhaust");
        std::vector<Scalar> coeffs(d, 0);
        while (true) {
            int pos = 0;
            while (pos < d) {
                coeffs[pos] += 1;
                if (coeffs[pos] == p) {
                    coeffs[pos] = 0;
                    ++pos;
                } else {
                    break;
                }
            }
            if (pos == d)
                return true;
            if (!is_isomorphism(F, combination(F, end.basis, coeffs)))
                return false;
        }
    }
    if (semisimple_quotient_dim(F, end.basis) < d)
        return false;
    Morphism id = identity_morphism(m);
    for (const auto& b : end.basis)
        for (const auto& lambda : candidate_shifts(F, b)) {
            Morphism g = add(F, b, scale(F, id, F.neg(lambda)));
            if (!g.is_zero() && !is_isomorphism(F, g))
                return false;
        }
    throw budget_error("repcat", "brick test inconclusive over q: semisimple endomorphism algebra of dimension > 1");
}

std::vector<Scalar> characteristic_polynomial(const Matrix& a)
{
    // Faddeev-LeVerrier; coefficients c[0..n] of det(xI - A), c[n] = 1.
    const int n = a.rows();
    const Field Q = Field::rationals();
    std::vector<Scalar> c(n + 1);
    c[n] = 1;
    Matrix mk(n, n);
    for (int k = 1; k <= n; ++k) {
        Matrix next = linalg::multiply(Q, a, mk);
        for (int i = 0; i < n; ++i)
            next(i, i) += c[n - k + 1];
        mk = next;
        Matrix am = linalg::multiply(Q, a, mk);
        Scalar tr = 0;
        for (int i = 0; i < n; ++i)
            tr += am(i, i);
        c[n - k] = -tr / k;
    }
    return c;
}

namespace {

std::vector<mpz_class> divisors(mpz_class v)
{
    std::vector<mpz_class> out;
    if (v < 0)
        v = -v;
    if (v == 0 || v > mpz_class("1000000000000"))
        return out;
    for (mpz_class d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v)
                out.push_back(v / d);
        }
    return out;
}

}  // namespace

std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly)
{
    std::vector<Scalar> p = poly;
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    std::vector<Scalar> roots;
    if (p.size() <= 1)
        return roots;
    size_t low = 0;
    while (low < p.size() && p[low] == 0)
        ++low;
    if (low > 0)
        roots.push_back(0);
    std::vector<Scalar> q(p.begin() + static_cast<long>(low), p.end());
    if (q.size() <= 1)
        return roots;
    mpz_class lcm = 1;
    for (const auto& x : q)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& x : q)
        ints.push_back(Scalar(x * lcm).get_num());
    auto eval = [&](const Scalar& x) {
        Scalar acc = 0;
        for (size_t i = ints.size(); i-- > 0;)
            acc = acc * x + Scalar(ints[i]);
        return acc;
    };
    for (const auto& num : divisors(ints.front()))
        for (const auto& den : divisors(ints.back()))
            for (int sign : {1, -1}) {
                Scalar cand(num * sign, den);
                cand.canonicalize();
                if (std::find(roots.begin(), roots.end(), cand) != roots.end())
                    continue;
                if (eval(cand) == 0)
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace taufan
