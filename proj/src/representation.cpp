#include "taufan/representation.hpp"

#include "taufan/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

namespace taufan {

Representation::Representation(AlgebraPtr algebra, IntVec dims, std::vector<Matrix> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps))
{
    const Quiver& q = algebra_->quiver();
    if (static_cast<int>(dims_.size()) != q.vertex_count)
        throw inconsistency("repcat", "dimension vector has the wrong length");
    if (maps_.size() != q.arrows.size())
        throw inconsistency("repcat", "wrong number of arrow maps");
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Arrow& arr = q.arrows[a];
        if (maps_[a].rows() != dims_[arr.target] || maps_[a].cols() != dims_[arr.source])
            throw inconsistency("repcat", "map for arrow '" + arr.label + "' has the wrong shape");
    }
}

Representation Representation::zero(AlgebraPtr algebra)
{
    const Quiver& q = algebra->quiver();
    std::vector<Matrix> maps(q.arrows.size());
    return Representation(algebra, IntVec(q.vertex_count, 0), maps);
}

int Representation::total_dim() const
{
    return std::accumulate(dims_.begin(), dims_.end(), 0);
}

Matrix Representation::path_map(int source, const std::vector<int>& arrows) const
{
    const Field& F = field();
    Matrix m = Matrix::identity(dims_[source]);
    for (int a : arrows)
        m = linalg::multiply(F, maps_[a], m);
    return m;
}

Matrix Representation::element_map(int source, int target, const Element& x) const
{
    const Field& F = field();
    Matrix out(dims_[target], dims_[source]);
    for (const auto& [b, c] : x) {
        const Path& p = algebra_->basis()[b];
        if (p.source != source || p.target != target)
            throw inconsistency("repcat", "element component outside e_s A e_t");
        out = linalg::add(F, out, linalg::scale(F, path_map(source, p.arrows), c));
    }
    return out;
}

bool Representation::satisfies_relations() const
{
    const Field& F = field();
    const Quiver& q = algebra_->quiver();
    for (const auto& rel : algebra_->relations()) {
        int s = q.arrows[rel.terms[0].arrows.front()].source;
        int t = q.arrows[rel.terms[0].arrows.back()].target;
        Matrix sum(dims_[t], dims_[s]);
        for (const auto& term : rel.terms)
            sum = linalg::add(F, sum, linalg::scale(F, path_map(s, term.arrows), term.coefficient));
        if (!sum.is_zero())
            return false;
    }
    return true;
}

bool Morphism::is_zero() const
{
    for (const auto& c : comps)
        if (!c.is_zero())
            return false;
    return true;
}

Morphism identity_morphism(const Representation& m)
{
    Morphism f;
    for (int d : m.dims())
        f.comps.push_back(Matrix::identity(d));
    return f;
}

Morphism zero_morphism(const Representation& from, const Representation& to)
{
    Morphism f;
    for (size_t i = 0; i < from.dims().size(); ++i)
        f.comps.emplace_back(to.dim(static_cast<int>(i)), from.dim(static_cast<int>(i)));
    return f;
}

Morphism compose(const Field& F, const Morphism& g, const Morphism& f)
{
    Morphism h;
    for (size_t i = 0; i < f.comps.size(); ++i)
        h.comps.push_back(linalg::multiply(F, g.comps[i], f.comps[i]));
    return h;
}

Morphism add(const Field& F, const Morphism& a, const Morphism& b)
{
    Morphism h;
    for (size_t i = 0; i < a.comps.size(); ++i)
        h.comps.push_back(linalg::add(F, a.comps[i], b.comps[i]));
    return h;
}

Morphism scale(const Field& F, const Morphism& a, const Scalar& s)
{
    Morphism h;
    for (const auto& c : a.comps)
        h.comps.push_back(linalg::scale(F, c, s));
    return h;
}

bool is_morphism(const Representation& from, const Representation& to, const Morphism& f)
{
    const Field& F = from.field();
    const Quiver& q = from.algebra().quiver();
    if (f.comps.size() != from.dims().size())
        return false;
    for (size_t i = 0; i < f.comps.size(); ++i)
        if (f.comps[i].rows() != to.dim(static_cast<int>(i)) || f.comps[i].cols() != from.dim(static_cast<int>(i)))
            return false;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Arrow& arr = q.arrows[a];
        Matrix lhs = linalg::multiply(F, f.comps[arr.target], from.map(static_cast<int>(a)));
        Matrix rhs = linalg::multiply(F, to.map(static_cast<int>(a)), f.comps[arr.source]);
        if (lhs != rhs)
            return false;
    }
    return true;
}

bool is_isomorphism(const Field& F, const Morphism& f)
{
    for (const auto& c : f.comps)
        if (!linalg::invertible(F, c))
            return false;
    return true;
}

bool is_epimorphism(const Field& F, const Representation& to, const Morphism& f)
{
    for (size_t i = 0; i < f.comps.size(); ++i)
        if (linalg::rank(F, f.comps[i]) != to.dim(static_cast<int>(i)))
            return false;
    return true;
}

QVec flatten(const Morphism& f)
{
    QVec v;
    for (const auto& c : f.comps)
        for (int r = 0; r < c.rows(); ++r)
            for (int k = 0; k < c.cols(); ++k)
                v.push_back(c(r, k));
    return v;
}

HomBasis hom_basis(const Representation& from, const Representation& to)
{
    const Field& F = from.field();
    const Quiver& q = from.algebra().quiver();
    const int n = q.vertex_count;
    std::vector<int> offset(n + 1, 0);
    for (int i = 0; i < n; ++i)
        offset[i + 1] = offset[i] + to.dim(i) * from.dim(i);
    const int unknowns = offset[n];
    HomBasis out;
    if (unknowns == 0)
        return out;

    int eq_count = 0;
    for (const auto& arr : q.arrows)
        eq_count += to.dim(arr.target) * from.dim(arr.source);
    Matrix eqs(eq_count, unknowns);
    int row = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Arrow& arr = q.arrows[a];
        const int s = arr.source, t = arr.target;
        const Matrix& Ma = from.map(static_cast<int>(a));
        const Matrix& Na = to.map(static_cast<int>(a));
        for (int r = 0; r < to.dim(t); ++r)
            for (int c = 0; c < from.dim(s); ++c, ++row) {
                // (phi_t M_a)[r][c] = sum_k phi_t[r][k] M_a[k][c]
                for (int k = 0; k < from.dim(t); ++k)
                    if (Ma(k, c) != 0) {
                        Scalar& e = eqs(row, offset[t] + r * from.dim(t) + k);
                        e = F.add(e, Ma(k, c));
                    }
                // (N_a phi_s)[r][c] = sum_k N_a[r][k] phi_s[k][c]
                for (int k = 0; k < to.dim(s); ++k)
                    if (Na(r, k) != 0) {
                        Scalar& e = eqs(row, offset[s] + k * from.dim(s) + c);
                        e = F.sub(e, Na(r, k));
                    }
            }
    }
    Matrix null = linalg::nullspace(F, eqs);
    for (int b = 0; b < null.cols(); ++b) {
        Morphism f;
        for (int i = 0; i < n; ++i) {
            Matrix c(to.dim(i), from.dim(i));
            for (int r = 0; r < to.dim(i); ++r)
                for (int k = 0; k < from.dim(i); ++k)
                    c(r, k) = null(offset[i] + r * from.dim(i) + k, b);
            f.comps.push_back(std::move(c));
        }
        out.basis.push_back(std::move(f));
    }
    return out;
}

int hom_dim(const Representation& from, const Representation& to)
{
    return hom_basis(from, to).dim();
}

bool is_arrow_stable(const Representation& m, const std::vector<Matrix>& bases)
{
    const Field& F = m.field();
    const Quiver& q = m.algebra().quiver();
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Arrow& arr = q.arrows[a];
        if (bases[arr.source].cols() == 0)
            continue;
        Matrix img = linalg::multiply(F, m.map(static_cast<int>(a)), bases[arr.source]);
        if (!linalg::contains_columns(F, bases[arr.target], img))
            return false;
    }
    return true;
}

SubRep subrepresentation(const Representation& m, const std::vector<Matrix>& bases)
{
    const Field& F = m.field();
    const Quiver& q = m.algebra().quiver();
    IntVec dims;
    for (const auto& b : bases)
        dims.push_back(b.cols());
    std::vector<Matrix> maps;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Arrow& arr = q.arrows[a];
        Matrix img = linalg::multiply(F, m.map(static_cast<int>(a)), bases[arr.source]);
        auto x = linalg::solve(F, bases[arr.target], img);
        if (!x)
            throw inconsistency("repcat", "subspace tuple is not arrow-stable");
        maps.push_back(std::move(*x));
    }
    SubRep s{Representation(m.algebra_ptr(), dims, maps), Morphism{bases}};
    return s;
}

QuotientRep quotient(const Representation& m, const std::vector<Matrix>& bases)
{
    const Field& F = m.field();
    const Quiver& q = m.algebra().quiver();
    const int n = q.vertex_count;
    std::vector<Matrix> comp(n), proj(n);
    IntVec dims(n);
    for (int i = 0; i < n; ++i) {
        comp[i] = linalg::complement_basis(F, bases[i], m.dim(i));
        dims[i] = comp[i].cols();
        Matrix full = linalg::hstack({bases[i], comp[i]}, m.dim(i));
        auto inv = linalg::inverse(F, full);
        if (!inv)
            throw inconsistency("repcat", "subspace basis is not independent");
        std::vector<int> rows;
        for (int r = bases[i].cols(); r < m.dim(i); ++r)
            rows.push_back(r);
        proj[i] = inv->rows_subset(rows);
    }
    std::vector<Matrix> maps;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Arrow& arr = q.arrows[a];
        maps.push_back(linalg::multiply(
            F, proj[arr.target], linalg::multiply(F, m.map(static_cast<int>(a)), comp[arr.source])));
    }
    return QuotientRep{Representation(m.algebra_ptr(), dims, maps), Morphism{proj}};
}

SubRep kernel(const Representation& from, const Morphism& f)
{
    const Field& F = from.field();
    std::vector<Matrix> bases;
    for (size_t i = 0; i < f.comps.size(); ++i) {
        if (f.comps[i].rows() == 0)
            bases.push_back(Matrix::identity(from.dim(static_cast<int>(i))));
        else
            bases.push_back(linalg::nullspace(F, f.comps[i]));
    }
    return subrepresentation(from, bases);
}

std::vector<Matrix> image_spaces(const Representation& to, const Morphism& f)
{
    const Field& F = to.field();
    std::vector<Matrix> bases;
    for (size_t i = 0; i < f.comps.size(); ++i)
        bases.push_back(linalg::column_basis(F, f.comps[i]));
    return bases;
}

SubRep image(const Representation& to, const Morphism& f)
{
    return subrepresentation(to, image_spaces(to, f));
}

QuotientRep cokernel(const Representation& to, const Morphism& f)
{
    return quotient(to, image_spaces(to, f));
}

DirectSum direct_sum(const std::vector<Representation>& parts)
{
    if (parts.empty())
        throw inconsistency("repcat", "direct sum of an empty list");
    AlgebraPtr alg = parts[0].algebra_ptr();
    const Quiver& q = alg->quiver();
    const int n = q.vertex_count;
    IntVec dims(n, 0);
    for (const auto& p : parts)
        for (int i = 0; i < n; ++i)
            dims[i] += p.dim(i);
    std::vector<Matrix> maps;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts)
            blocks.push_back(p.map(static_cast<int>(a)));
        maps.push_back(linalg::block_diagonal(blocks));
    }
    DirectSum out{Representation(alg, dims, maps), {}, {}};
    IntVec off(n, 0);
    for (const auto& p : parts) {
        Morphism inc, proj;
        for (int i = 0; i < n; ++i) {
            Matrix in(dims[i], p.dim(i)), pr(p.dim(i), dims[i]);
            for (int k = 0; k < p.dim(i); ++k) {
                in(off[i] + k, k) = 1;
                pr(k, off[i] + k) = 1;
            }
            inc.comps.push_back(std::move(in));
            proj.comps.push_back(std::move(pr));
            off[i] += p.dim(i);
        }
        out.inclusions.push_back(std::move(inc));
        out.projections.push_back(std::move(proj));
    }
    return out;
}

Representation direct_sum_module(const std::vector<Representation>& parts)
{
    return direct_sum(parts).module;
}

Representation simple(AlgebraPtr alg, int vertex)
{
    const Quiver& q = alg->quiver();
    if (vertex < 0 || vertex >= q.vertex_count)
        throw usage_error("repcat", "vertex index out of range");
    IntVec dims(q.vertex_count, 0);
    dims[vertex] = 1;
    std::vector<Matrix> maps;
    for (const auto& arr : q.arrows)
        maps.emplace_back(dims[arr.target], dims[arr.source]);
    return Representation(alg, dims, maps);
}

Representation projective(AlgebraPtr alg, int vertex)
{
    const Quiver& q = alg->quiver();
    const int n = q.vertex_count;
    if (vertex < 0 || vertex >= n)
        throw usage_error("repcat", "vertex index out of range");
    IntVec dims(n);
    for (int j = 0; j < n; ++j)
        dims[j] = static_cast<int>(alg->basis_between(vertex, j).size());
    std::vector<Matrix> maps;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Arrow& arr = q.arrows[a];
        Matrix m(dims[arr.target], dims[arr.source]);
        const auto& from = alg->basis_between(vertex, arr.source);
        for (size_t c = 0; c < from.size(); ++c) {
            std::vector<int> path = alg->basis()[from[c]].arrows;
            path.push_back(static_cast<int>(a));
            for (const auto& [b, v] : alg->reduce(vertex, path))
                m(alg->position_in_block(b), static_cast<int>(c)) = v;
        }
        maps.push_back(std::move(m));
    }
    return Representation(alg, dims, maps);
}

Representation injective(AlgebraPtr alg, int vertex)
{
    const Quiver& q = alg->quiver();
    const int n = q.vertex_count;
    if (vertex < 0 || vertex >= n)
        throw usage_error("repcat", "vertex index out of range");
    IntVec dims(n);
    for (int j = 0; j < n; ++j)
        dims[j] = static_cast<int>(alg->basis_between(j, vertex).size());
    std::vector<Matrix> maps;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Arrow& arr = q.arrows[a];
        Matrix m(dims[arr.target], dims[arr.source]);
        const auto& rows = alg->basis_between(arr.target, vertex);
        for (size_t r = 0; r < rows.size(); ++r) {
            std::vector<int> path{static_cast<int>(a)};
            const auto& tail = alg->basis()[rows[r]].arrows;
            path.insert(path.end(), tail.begin(), tail.end());
            for (const auto& [b, v] : alg->reduce(arr.source, path))
                m(static_cast<int>(r), alg->position_in_block(b)) = v;
        }
        maps.push_back(std::move(m));
    }
    return Representation(alg, dims, maps);
}

std::vector<Matrix> radical_spaces(const Representation& m)
{
    const Field& F = m.field();
    const Quiver& q = m.algebra().quiver();
    std::vector<std::vector<Matrix>> incoming(q.vertex_count);
    for (size_t a = 0; a < q.arrows.size(); ++a)
        incoming[q.arrows[a].target].push_back(m.map(static_cast<int>(a)));
    std::vector<Matrix> out;
    for (int i = 0; i < q.vertex_count; ++i)
        out.push_back(linalg::column_basis(F, linalg::hstack(incoming[i], m.dim(i))));
    return out;
}

IntVec top_dims(const Representation& m)
{
    auto rad = radical_spaces(m);
    IntVec out;
    for (int i = 0; i < m.algebra().vertex_count(); ++i)
        out.push_back(m.dim(i) - rad[i].cols());
    return out;
}

std::vector<IntVec> loewy_layers(const Representation& m)
{
    const Field& F = m.field();
    const Quiver& q = m.algebra().quiver();
    const int n = q.vertex_count;
    std::vector<Matrix> layer;
    for (int i = 0; i < n; ++i)
        layer.push_back(Matrix::identity(m.dim(i)));
    std::vector<IntVec> out;
    while (true) {
        bool nonzero = false;
        for (const auto& b : layer)
            nonzero = nonzero || b.cols() > 0;
        if (!nonzero)
            break;
        std::vector<std::vector<Matrix>> incoming(n);
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            const Arrow& arr = q.arrows[a];
            incoming[arr.target].push_back(linalg::multiply(F, m.map(static_cast<int>(a)), layer[arr.source]));
        }
        std::vector<Matrix> next;
        IntVec dims(n);
        for (int i = 0; i < n; ++i) {
            next.push_back(linalg::column_basis(F, linalg::hstack(incoming[i], m.dim(i))));
            dims[i] = layer[i].cols() - next[i].cols();
        }
        out.push_back(dims);
        layer = std::move(next);
        if (out.size() > static_cast<size_t>(m.total_dim()) + 1)
            throw inconsistency("repcat", "radical series does not terminate");
    }
    return out;
}

std::string loewy_name(const Representation& m)
{
    if (m.is_zero())
        return "0";
    const int n = m.algebra().vertex_count();
    std::string name;
    for (const auto& layer : loewy_layers(m)) {
        if (!name.empty())
            name += "/";
        bool first = true;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < layer[i]; ++k) {
                if (n > 9 && !first)
                    name += ",";
                name += std::to_string(i + 1);
                first = false;
            }
    }
    return name;
}

Representation reinterpret(const Representation& m, AlgebraPtr target)
{
    const Field& F = target->field();
    std::vector<Matrix> maps;
    for (const auto& mp : m.maps()) {
        for (int r = 0; r < mp.rows(); ++r)
            for (int c = 0; c < mp.cols(); ++c)
                if (!F.representable(mp(r, c)))
                    throw Error(ErrorKind::Unsupported, "repcat",
                                "entry " + mp(r, c).get_str() + " not representable over " + F.name());
        maps.push_back(linalg::normalized(F, mp));
    }
    return Representation(target, m.dims(), maps);
}

Representation change_basis(const Representation& m, const std::vector<Matrix>& bases)
{
    const Field& F = m.field();
    const Quiver& q = m.algebra().quiver();
    std::vector<Matrix> inv;
    for (const auto& b : bases) {
        auto i = linalg::inverse(F, b);
        if (!i)
            throw inconsistency("repcat", "change of basis is not invertible");
        inv.push_back(*i);
    }
    std::vector<Matrix> maps;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Arrow& arr = q.arrows[a];
        maps.push_back(linalg::multiply(
            F, inv[arr.target], linalg::multiply(F, m.map(static_cast<int>(a)), bases[arr.source])));
    }
    return Representation(m.algebra_ptr(), m.dims(), maps);
}

// ---------------------------------------------------------------------------
// Module files

namespace {

struct MatrixParser {
    const std::string& s;
    size_t pos;
    int line;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError("repcat", line, static_cast<int>(pos) + 1, msg);
    }
    void ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    void expect(char ch)
    {
        ws();
        if (pos >= s.size() || s[pos] != ch)
            fail(std::string("expected '") + ch + "'");
        ++pos;
    }
    bool peek(char ch)
    {
        ws();
        return pos < s.size() && s[pos] == ch;
    }
    Scalar number()
    {
        ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
            ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (digits == pos)
            fail("expected a number");
        std::string num = s.substr(start, pos - start);
        if (num[0] == '+')
            num = num.substr(1);
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            size_t ds = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                ++pos;
            if (ds == pos)
                fail("expected a denominator");
            mpz_class den(s.substr(ds, pos - ds));
            if (den == 0)
                fail("zero denominator");
            Scalar q(mpz_class(num), den);
            q.canonicalize();
            return q;
        }
        return Scalar(mpz_class(num));
    }
    std::vector<std::vector<Scalar>> matrix()
    {
        std::vector<std::vector<Scalar>> rows;
        expect('[');
        if (peek(']')) {
            ++pos;
            return rows;
        }
        while (true) {
            expect('[');
            std::vector<Scalar> row;
            if (!peek(']')) {
                while (true) {
                    row.push_back(number());
                    if (peek(',')) {
                        ++pos;
                        continue;
                    }
                    break;
                }
            }
            expect(']');
            rows.push_back(std::move(row));
            if (peek(',')) {
                ++pos;
                continue;
            }
            break;
        }
        expect(']');
        return rows;
    }
};

}  // namespace

Representation parse_module(const std::string& text, AlgebraPtr alg, std::string* name)
{
    const Quiver& q = alg->quiver();
    const Field& F = alg->field();
    const int n = q.vertex_count;
    std::optional<IntVec> dims;
    std::vector<std::optional<Matrix>> maps(q.arrows.size());
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw))
            continue;
        int kw_col = static_cast<int>(line.find(kw)) + 1;
        if (kw == "module") {
            std::string nm;
            ls >> nm;
            if (name)
                *name = nm;
        } else if (kw == "dim") {
            IntVec d;
            std::string tok;
            while (ls >> tok) {
                if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(c); }))
                    throw ParseError("repcat", line_no, static_cast<int>(line.find(tok)) + 1,
                                     "expected a nonnegative integer");
                d.push_back(std::stoi(tok));
            }
            if (static_cast<int>(d.size()) != n)
                throw ParseError("repcat", line_no, kw_col,
                                 "expected " + std::to_string(n) + " dimensions, got " + std::to_string(d.size()));
            dims = d;
        } else if (kw == "map") {
            if (!dims)
                throw ParseError("repcat", line_no, kw_col, "'dim' must precede maps");
            std::string label;
            ls >> label;
            int a = q.arrow_index(label);
            if (a < 0)
                throw ParseError("repcat", line_no, static_cast<int>(line.find(label, kw_col + 2)) + 1,
                                 "unknown arrow '" + label + "'");
            size_t start = line.find('[');
            if (start == std::string::npos)
                throw ParseError("repcat", line_no, static_cast<int>(line.size()) + 1, "expected a matrix");
            MatrixParser mp{line, start, line_no};
            auto rows = mp.matrix();
            mp.ws();
            if (mp.pos != line.size())
                mp.fail("unexpected trailing input");
            int r = (*dims)[q.arrows[a].target], c = (*dims)[q.arrows[a].source];
            if (rows.empty() && (r == 0 || c == 0)) {
                maps[a] = Matrix(r, c);
                continue;
            }
            if (static_cast<int>(rows.size()) != r)
                throw ParseError("repcat", line_no, static_cast<int>(start) + 1,
                                 "map '" + label + "' needs " + std::to_string(r) + " rows");
            for (const auto& row : rows)
                if (static_cast<int>(row.size()) != c)
                    throw ParseError("repcat", line_no, static_cast<int>(start) + 1,
                                     "map '" + label + "' needs " + std::to_string(c) + " columns");
            for (const auto& row : rows)
                for (const auto& x : row)
                    if (!F.representable(x))
                        throw ParseError("repcat", line_no, static_cast<int>(start) + 1,
                                         "entry " + x.get_str() + " not representable over " + F.name());
            maps[a] = linalg::normalized(F, Matrix::from_rows(rows, c));
        } else {
            throw ParseError("repcat", line_no, kw_col, "unknown keyword '" + kw + "'");
        }
    }
    if (!dims)
        throw ParseError("repcat", line_no + 1, 1, "missing 'dim' line");
    std::vector<Matrix> out;
    for (size_t a = 0; a < q.arrows.size(); ++a)
        out.push_back(maps[a] ? *maps[a] : Matrix((*dims)[q.arrows[a].target], (*dims)[q.arrows[a].source]));
    Representation m(alg, *dims, out);
    if (!m.satisfies_relations())
        throw Error(ErrorKind::Parse, "repcat", "module does not satisfy the relations of the algebra");
    return m;
}

Representation load_module(const std::string& path, AlgebraPtr alg, std::string* name)
{
    std::ifstream f(path);
    if (!f)
        throw usage_error("repcat", "cannot open module file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_module(ss.str(), alg, name);
}

std::string serialize_module(const Representation& m, const std::string& name)
{
    std::ostringstream os;
    os << "module " << name << "\n";
    os << "dim";
    for (int d : m.dims())
        os << " " << d;
    os << "\n";
    const Quiver& q = m.algebra().quiver();
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Matrix& mp = m.map(static_cast<int>(a));
        if (mp.empty() || mp.is_zero())
            continue;
        os << "map " << q.arrows[a].label << " " << mp.str() << "\n";
    }
    return os.str();
}

}  // namespace taufan
