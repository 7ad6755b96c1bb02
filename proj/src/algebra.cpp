#include "taufan/algebra.hpp"

#include "taufan/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace taufan {

int Quiver::arrow_index(const std::string& label) const
{
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].label == label)
            return static_cast<int>(i);
    return -1;
}

bool Quiver::operator==(const Quiver& other) const
{
    if (vertex_count != other.vertex_count || arrows.size() != other.arrows.size())
        return false;
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].label != other.arrows[i].label || arrows[i].source != other.arrows[i].source ||
            arrows[i].target != other.arrows[i].target)
            return false;
    return true;
}

namespace {

std::vector<int> label_ranks(const Quiver& q)
{
    std::vector<int> order(q.arrows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return q.arrows[a].label < q.arrows[b].label; });
    std::vector<int> rank(q.arrows.size());
    for (size_t i = 0; i < order.size(); ++i)
        rank[order[i]] = static_cast<int>(i);
    return rank;
}

}  // namespace

// Keys compare length first, then arrow labels lexicographically, then the
// source vertex (which only matters for trivial paths).
std::vector<int> path_key(const Quiver& q, int source, const std::vector<int>& arrows)
{
    static thread_local const Quiver* cached_for = nullptr;
    static thread_local std::vector<int> cached_rank;
    static thread_local std::vector<std::string> cached_labels;
    bool stale = cached_for != &q || cached_rank.size() != q.arrows.size();
    if (!stale)
        for (size_t i = 0; i < q.arrows.size(); ++i)
            if (cached_labels[i] != q.arrows[i].label) {
                stale = true;
                break;
            }
    if (stale) {
        cached_for = &q;
        cached_rank = label_ranks(q);
        cached_labels.clear();
        for (const auto& a : q.arrows)
            cached_labels.push_back(a.label);
    }
    std::vector<int> key;
    key.reserve(arrows.size() + 2);
    key.push_back(static_cast<int>(arrows.size()));
    for (int a : arrows)
        key.push_back(cached_rank[a]);
    key.push_back(source);
    return key;
}

class AlgebraBuilder {
public:
    AlgebraBuilder(Algebra& alg, const AlgebraLimits& limits) : alg_(alg), limits_(limits) {}

    void run()
    {
        validate_relations();
        enumerate_paths();
        build_generators();
        certify_and_extend();
        assemble_basis();
    }

private:
    using Row = std::map<int, Scalar>;

    struct EnumPath {
        Path path;
        std::vector<int> key;
    };

    Algebra& alg_;
    AlgebraLimits limits_;
    std::vector<std::vector<int>> monomials_;
    int max_length_ = 0;
    std::vector<EnumPath> paths_;
    std::map<std::vector<int>, int> index_;
    std::map<int, Row> pivots_;

    const Quiver& q() const { return alg_.quiver_; }

    void validate_relations()
    {
        const Field& F = alg_.field_;
        std::vector<Relation> cleaned;
        int min_len = 0, max_len = 0;
        bool any = false;
        for (const auto& rel : alg_.relations_) {
            Relation out;
            int s = -1, t = -1;
            for (const auto& term : rel.terms) {
                if (term.arrows.size() < 2)
                    throw Error(ErrorKind::Parse, "algebra_core",
                                "relation term of length " + std::to_string(term.arrows.size()) +
                                    " is not admissible (length >= 2 required)");
                for (size_t k = 0; k + 1 < term.arrows.size(); ++k)
                    if (q().arrows[term.arrows[k]].target != q().arrows[term.arrows[k + 1]].source)
                        throw Error(ErrorKind::Parse, "algebra_core", "relation term is not a composable path");
                int ts = q().arrows[term.arrows.front()].source;
                int tt = q().arrows[term.arrows.back()].target;
                if (s < 0) {
                    s = ts;
                    t = tt;
                } else if (s != ts || t != tt) {
                    throw Error(ErrorKind::Parse, "algebra_core", "relation terms are not parallel paths");
                }
                if (!F.representable(term.coefficient))
                    throw Error(ErrorKind::Parse, "algebra_core",
                                "coefficient " + term.coefficient.get_str() + " not representable over " + F.name());
                Scalar c = F.normalize(term.coefficient);
                auto it = std::find_if(out.terms.begin(), out.terms.end(),
                                       [&](const Term& x) { return x.arrows == term.arrows; });
                if (it == out.terms.end())
                    out.terms.push_back({c, term.arrows});
                else
                    it->coefficient = F.add(it->coefficient, c);
            }
            out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(),
                                           [](const Term& x) { return x.coefficient == 0; }),
                            out.terms.end());
            if (out.terms.empty())
                continue;
            for (const auto& term : out.terms) {
                int len = static_cast<int>(term.arrows.size());
                min_len = any ? std::min(min_len, len) : len;
                max_len = any ? std::max(max_len, len) : len;
                any = true;
            }
            if (out.terms.size() == 1)
                monomials_.push_back(out.terms[0].arrows);
            cleaned.push_back(std::move(out));
        }
        alg_.relations_ = std::move(cleaned);
        max_length_ = alg_.nil_bound_ + (any ? max_len - min_len : 0);
    }

    bool ends_with_monomial(const std::vector<int>& arrows) const
    {
        for (const auto& m : monomials_) {
            if (m.size() > arrows.size())
                continue;
            if (std::equal(m.rbegin(), m.rend(), arrows.rbegin()))
                return true;
        }
        return false;
    }

    void enumerate_paths()
    {
        std::vector<EnumPath> frontier;
        for (int v = 0; v < q().vertex_count; ++v)
            frontier.push_back({Path{v, v, {}}, {}});
        std::vector<EnumPath> all = frontier;
        for (int len = 1; len <= max_length_ && !frontier.empty(); ++len) {
            std::vector<EnumPath> next;
            for (const auto& p : frontier)
                for (int a = 0; a < alg_.arrow_count(); ++a) {
                    if (q().arrows[a].source != p.path.target)
                        continue;
                    EnumPath e{p.path, {}};
                    e.path.arrows.push_back(a);
                    e.path.target = q().arrows[a].target;
                    if (ends_with_monomial(e.path.arrows))
                        continue;
                    next.push_back(std::move(e));
                    if (static_cast<long>(all.size() + next.size()) > limits_.max_paths)
                        throw budget_error("algebra_core", "path enumeration exceeded " +
                                                               std::to_string(limits_.max_paths) + " paths");
                }
            all.insert(all.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        for (auto& p : all)
            p.key = path_key(q(), p.path.source, p.path.arrows);
        std::sort(all.begin(), all.end(), [](const EnumPath& a, const EnumPath& b) { return a.key < b.key; });
        paths_ = std::move(all);
        for (size_t i = 0; i < paths_.size(); ++i)
            index_[paths_[i].key] = static_cast<int>(i);
        alg_.enumerated_paths_ = static_cast<long>(paths_.size());
    }

    int lookup(int source, const std::vector<int>& arrows) const
    {
        auto it = index_.find(path_key(q(), source, arrows));
        return it == index_.end() ? -1 : it->second;
    }

    void insert(Row row)
    {
        const Field& F = alg_.field_;
        while (!row.empty()) {
            auto lead = std::prev(row.end());
            auto piv = pivots_.find(lead->first);
            if (piv == pivots_.end()) {
                Scalar inv = F.inverse(lead->second);
                for (auto& [k, v] : row)
                    v = F.mul(v, inv);
                pivots_.emplace(lead->first, std::move(row));
                return;
            }
            Scalar c = lead->second;
            for (const auto& [k, v] : piv->second) {
                Scalar nv = F.sub(row[k], F.mul(c, v));
                if (nv == 0)
                    row.erase(k);
                else
                    row[k] = nv;
            }
        }
    }

    bool reduces_to_zero(Row row) const
    {
        const Field& F = alg_.field_;
        while (!row.empty()) {
            auto lead = std::prev(row.end());
            auto piv = pivots_.find(lead->first);
            if (piv == pivots_.end())
                return false;
            Scalar c = lead->second;
            for (const auto& [k, v] : piv->second) {
                Scalar nv = F.sub(row[k], F.mul(c, v));
                if (nv == 0)
                    row.erase(k);
                else
                    row[k] = nv;
            }
        }
        return true;
    }

    void build_generators()
    {
        std::vector<std::vector<int>> ending_at(q().vertex_count), starting_at(q().vertex_count);
        for (size_t i = 0; i < paths_.size(); ++i) {
            ending_at[paths_[i].path.target].push_back(static_cast<int>(i));
            starting_at[paths_[i].path.source].push_back(static_cast<int>(i));
        }
        long generated = 0;
        for (const auto& rel : alg_.relations_) {
            if (rel.terms.size() == 1)
                continue;
            int s = q().arrows[rel.terms[0].arrows.front()].source;
            int t = q().arrows[rel.terms[0].arrows.back()].target;
            int rel_max = 0;
            for (const auto& term : rel.terms)
                rel_max = std::max(rel_max, static_cast<int>(term.arrows.size()));
            for (int ui : ending_at[s]) {
                const Path& u = paths_[ui].path;
                if (u.length() + rel_max > max_length_)
                    continue;
                for (int wi : starting_at[t]) {
                    const Path& w = paths_[wi].path;
                    if (u.length() + w.length() + rel_max > max_length_)
                        continue;
                    Row row;
                    for (const auto& term : rel.terms) {
                        std::vector<int> full = u.arrows;
                        full.insert(full.end(), term.arrows.begin(), term.arrows.end());
                        full.insert(full.end(), w.arrows.begin(), w.arrows.end());
                        int idx = lookup(u.source, full);
                        if (idx < 0)
                            continue;
                        Scalar nv = alg_.field_.add(row[idx], term.coefficient);
                        if (nv == 0)
                            row.erase(idx);
                        else
                            row[idx] = nv;
                    }
                    if (++generated > limits_.max_generators)
                        throw budget_error("algebra_core", "ideal generator count exceeded " +
                                                               std::to_string(limits_.max_generators));
                    insert(std::move(row));
                }
            }
        }
    }

    void certify_and_extend()
    {
        const int N = alg_.nil_bound_;
        for (size_t i = 0; i < paths_.size(); ++i) {
            if (paths_[i].path.length() != N)
                continue;
            if (!reduces_to_zero(Row{{static_cast<int>(i), Scalar(1)}}))
                throw Error(ErrorKind::Parse, "algebra_core",
                            "unbounded path algebra: path " + alg_.path_string(paths_[i].path) +
                                " of length " + std::to_string(N) + " does not lie in the ideal (nil bound " +
                                std::to_string(N) + ")");
        }
        for (size_t i = 0; i < paths_.size(); ++i)
            if (paths_[i].path.length() >= N)
                insert(Row{{static_cast<int>(i), Scalar(1)}});
    }

    void assemble_basis()
    {
        const Field& F = alg_.field_;
        const int n = q().vertex_count;
        std::vector<Element> nf(paths_.size());
        alg_.blocks_.assign(n, std::vector<std::vector<int>>(n));
        alg_.trivial_.assign(n, -1);
        for (size_t i = 0; i < paths_.size(); ++i) {
            const Path& p = paths_[i].path;
            if (p.length() >= alg_.nil_bound_)
                break;
            auto piv = pivots_.find(static_cast<int>(i));
            Element e;
            if (piv == pivots_.end()) {
                int b = static_cast<int>(alg_.basis_.size());
                alg_.basis_.push_back(p);
                alg_.basis_index_[paths_[i].key] = b;
                alg_.block_position_.push_back(static_cast<int>(alg_.blocks_[p.source][p.target].size()));
                alg_.blocks_[p.source][p.target].push_back(b);
                if (p.length() == 0)
                    alg_.trivial_[p.source] = b;
                e[b] = 1;
            } else {
                for (const auto& [k, v] : piv->second) {
                    if (k == static_cast<int>(i))
                        continue;
                    for (const auto& [bk, bv] : nf[k]) {
                        Scalar nv = F.sub(e[bk], F.mul(v, bv));
                        if (nv == 0)
                            e.erase(bk);
                        else
                            e[bk] = nv;
                    }
                }
            }
            nf[i] = e;
            alg_.normal_forms_[paths_[i].key] = std::move(e);
        }
        for (int v = 0; v < n; ++v)
            if (alg_.trivial_[v] < 0)
                throw inconsistency("algebra_core", "trivial path e" + std::to_string(v + 1) + " vanishes");
    }
};

AlgebraPtr Algebra::build(Quiver quiver, std::vector<Relation> relations, Field field, std::optional<int> nil_bound,
                          const AlgebraLimits& limits)
{
    if (quiver.vertex_count <= 0)
        throw Error(ErrorKind::Parse, "algebra_core", "vertex count must be positive");
    std::set<std::string> labels;
    for (const auto& a : quiver.arrows) {
        if (!labels.insert(a.label).second)
            throw Error(ErrorKind::Parse, "algebra_core", "duplicate arrow label '" + a.label + "'");
        if (a.source < 0 || a.source >= quiver.vertex_count || a.target < 0 || a.target >= quiver.vertex_count)
            throw Error(ErrorKind::Parse, "algebra_core", "arrow '" + a.label + "' has a vertex out of range");
    }
    std::shared_ptr<Algebra> alg(new Algebra());
    alg->quiver_ = std::move(quiver);
    alg->relations_ = std::move(relations);
    alg->field_ = field;
    alg->declared_bound_ = nil_bound.has_value();
    alg->nil_bound_ = nil_bound.value_or(alg->arrow_count() * alg->vertex_count() + 1);
    if (alg->nil_bound_ <= 0)
        throw Error(ErrorKind::Parse, "algebra_core", "nil bound must be positive");
    AlgebraBuilder(*alg, limits).run();
    return alg;
}

const std::vector<int>& Algebra::basis_between(int source, int target) const
{
    return blocks_[source][target];
}

Element Algebra::reduce(int source, const std::vector<int>& arrows) const
{
    int cur = source;
    for (int a : arrows) {
        if (quiver_.arrows[a].source != cur)
            throw inconsistency("algebra_core", "reduce called on a non-composable path");
        cur = quiver_.arrows[a].target;
    }
    if (static_cast<int>(arrows.size()) >= nil_bound_)
        return {};
    auto it = normal_forms_.find(path_key(quiver_, source, arrows));
    if (it == normal_forms_.end())
        return {};
    return it->second;
}

Element Algebra::multiply(int basis_left, int basis_right) const
{
    const Path& l = basis_[basis_left];
    const Path& r = basis_[basis_right];
    if (l.target != r.source)
        return {};
    std::vector<int> arrows = l.arrows;
    arrows.insert(arrows.end(), r.arrows.begin(), r.arrows.end());
    return reduce(l.source, arrows);
}

Element Algebra::multiply(const Element& left, const Element& right) const
{
    Element out;
    for (const auto& [a, ca] : left)
        for (const auto& [b, cb] : right)
            for (const auto& [k, v] : multiply(a, b)) {
                Scalar nv = field_.add(out[k], field_.mul(field_.mul(ca, cb), v));
                if (nv == 0)
                    out.erase(k);
                else
                    out[k] = nv;
            }
    return out;
}

Matrix Algebra::symmetrizer() const
{
    // dim End(S(i)) = dim e_i A e_i / e_i rad A e_i, i.e. the number of
    // length-zero basis paths at i.
    int n = vertex_count();
    Matrix d(n, n);
    for (int i = 0; i < n; ++i) {
        int count = 0;
        for (int b : blocks_[i][i])
            if (basis_[b].length() == 0)
                ++count;
        d(i, i) = count;
    }
    return d;
}

std::string Algebra::path_string(const Path& p) const
{
    if (p.arrows.empty())
        return "e" + std::to_string(p.source + 1);
    std::string s;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i)
            s += "*";
        s += quiver_.arrows[p.arrows[i]].label;
    }
    return s;
}

std::string Algebra::element_string(const Element& e) const
{
    if (e.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [b, c] : e) {
        if (!first)
            s += " + ";
        first = false;
        if (c != 1)
            s += c.get_str() + "*";
        s += path_string(basis_[b]);
    }
    return s;
}

std::string Algebra::serialize() const
{
    std::ostringstream os;
    os << "field " << field_.name() << "\n";
    os << "vertices " << vertex_count() << "\n";
    for (const auto& a : quiver_.arrows)
        os << "arrow " << a.label << " " << a.source + 1 << " " << a.target + 1 << "\n";
    for (const auto& r : relations_) {
        os << "relation";
        bool first = true;
        for (const auto& t : r.terms) {
            Scalar c = t.coefficient;
            std::string sign = first ? "" : "+ ";
            if (c < 0) {
                sign = first ? "-" : "- ";
                c = -c;
            }
            os << " " << sign;
            if (c != 1)
                os << c.get_str() << "*";
            for (size_t i = 0; i < t.arrows.size(); ++i)
                os << (i ? "*" : "") << quiver_.arrows[t.arrows[i]].label;
            first = false;
        }
        os << "\n";
    }
    os << "nilbound " << nil_bound_ << "\n";
    return os.str();
}

AlgebraPtr Algebra::opposite() const
{
    Quiver q = quiver_;
    for (auto& a : q.arrows)
        std::swap(a.source, a.target);
    std::vector<Relation> rels = relations_;
    for (auto& r : rels)
        for (auto& t : r.terms)
            std::reverse(t.arrows.begin(), t.arrows.end());
    return build(q, rels, field_, declared_bound_ ? std::optional<int>(nil_bound_) : std::nullopt);
}

AlgebraPtr Algebra::over_field(const Field& field) const
{
    return build(quiver_, relations_, field, declared_bound_ ? std::optional<int>(nil_bound_) : std::nullopt);
}

bool Algebra::structurally_equal(const Algebra& other) const
{
    if (!(quiver_ == other.quiver_) || field_ != other.field_ || nil_bound_ != other.nil_bound_)
        return false;
    if (relations_.size() != other.relations_.size())
        return false;
    for (size_t i = 0; i < relations_.size(); ++i) {
        const auto& a = relations_[i].terms;
        const auto& b = other.relations_[i].terms;
        if (a.size() != b.size())
            return false;
        for (size_t k = 0; k < a.size(); ++k)
            if (a[k].arrows != b[k].arrows || a[k].coefficient != b[k].coefficient)
                return false;
    }
    return basis_.size() == other.basis_.size();
}

bool Algebra::relation_vanishes(const Relation& r) const
{
    Element sum;
    for (const auto& t : r.terms) {
        int src = quiver_.arrows[t.arrows.front()].source;
        for (const auto& [k, v] : reduce(src, t.arrows)) {
            Scalar nv = field_.add(sum[k], field_.mul(t.coefficient, v));
            if (nv == 0)
                sum.erase(k);
            else
                sum[k] = nv;
        }
    }
    return sum.empty();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Cursor {
    const std::string& text;
    size_t pos;
    int line;

    int column() const { return static_cast<int>(pos) + 1; }
    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done()
    {
        skip_ws();
        return pos >= text.size();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("algebra_core", line, column(), msg); }

    std::string word()
    {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        return text.substr(start, pos - start);
    }

    std::string identifier()
    {
        skip_ws();
        size_t start = pos;
        if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            fail("expected an identifier");
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '\''))
            ++pos;
        return text.substr(start, pos - start);
    }

    long integer()
    {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            fail("expected an integer");
        try {
            return std::stol(text.substr(start, pos - start));
        } catch (const std::exception&) {
            fail("integer out of range");
        }
    }

    Scalar rational()
    {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            fail("expected a number");
        std::string num = text.substr(start, pos - start);
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            size_t ds = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (ds == pos)
                fail("expected a denominator");
            mpz_class d(text.substr(ds, pos - ds));
            if (d == 0)
                fail("zero denominator");
            Scalar q(mpz_class(num), d);
            q.canonicalize();
            return q;
        }
        return Scalar(mpz_class(num));
    }
};

Relation parse_relation(Cursor& c, const Quiver& q)
{
    Relation rel;
    bool first = true;
    while (!c.done()) {
        Scalar sign = 1;
        c.skip_ws();
        if (c.text[c.pos] == '+' || c.text[c.pos] == '-') {
            sign = c.text[c.pos] == '-' ? -1 : 1;
            ++c.pos;
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        first = false;
        c.skip_ws();
        Term term{sign, {}};
        if (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) {
            term.coefficient *= c.rational();
            c.skip_ws();
            if (c.pos >= c.text.size() || c.text[c.pos] != '*')
                c.fail("expected '*' after coefficient");
            ++c.pos;
        }
        while (true) {
            c.skip_ws();
            int col = c.column();
            std::string label = c.identifier();
            int a = q.arrow_index(label);
            if (a < 0)
                throw ParseError("algebra_core", c.line, col, "unknown arrow '" + label + "'");
            term.arrows.push_back(a);
            c.skip_ws();
            if (c.pos < c.text.size() && c.text[c.pos] == '*') {
                ++c.pos;
                continue;
            }
            break;
        }
        if (term.coefficient == 0)
            c.fail("zero coefficient");
        if (term.arrows.size() < 2)
            c.fail("relation term of length 1 is not admissible");
        rel.terms.push_back(std::move(term));
    }
    if (rel.terms.empty())
        c.fail("empty relation");
    return rel;
}

}  // namespace

AlgebraPtr parse_algebra(const std::string& text, const AlgebraLimits& limits)
{
    Quiver quiver;
    std::vector<Relation> relations;
    std::optional<Field> field;
    std::optional<int> nil_bound;
    bool have_vertices = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        Cursor c{line, 0, line_no};
        if (c.done())
            continue;
        int kw_col = c.column();
        std::string kw = c.word();
        if (kw == "field") {
            if (field)
                throw ParseError("algebra_core", line_no, kw_col, "field declared twice");
            int col = (c.skip_ws(), c.column());
            std::string f = c.word();
            if (f == "q") {
                field = Field::rationals();
            } else if (f.size() > 1 && f[0] == 'f' &&
                       std::all_of(f.begin() + 1, f.end(), [](char ch) { return std::isdigit(ch); })) {
                long p = std::stol(f.substr(1));
                if (!is_prime_number(p))
                    throw ParseError("algebra_core", line_no, col, "field order " + f.substr(1) + " is not prime");
                field = Field::prime(p);
            } else {
                throw ParseError("algebra_core", line_no, col, "expected 'q' or 'f<p>'");
            }
        } else if (kw == "vertices") {
            if (have_vertices)
                throw ParseError("algebra_core", line_no, kw_col, "vertices declared twice");
            int col = (c.skip_ws(), c.column());
            long n = c.integer();
            if (n <= 0)
                throw ParseError("algebra_core", line_no, col, "vertex count must be positive");
            quiver.vertex_count = static_cast<int>(n);
            have_vertices = true;
        } else if (kw == "arrow") {
            if (!have_vertices)
                throw ParseError("algebra_core", line_no, kw_col, "'vertices' must precede arrows");
            int col = (c.skip_ws(), c.column());
            std::string label = c.identifier();
            if (quiver.arrow_index(label) >= 0)
                throw ParseError("algebra_core", line_no, col, "duplicate arrow label '" + label + "'");
            int scol = (c.skip_ws(), c.column());
            long s = c.integer();
            int tcol = (c.skip_ws(), c.column());
            long t = c.integer();
            if (s < 1 || s > quiver.vertex_count)
                throw ParseError("algebra_core", line_no, scol, "source vertex out of range");
            if (t < 1 || t > quiver.vertex_count)
                throw ParseError("algebra_core", line_no, tcol, "target vertex out of range");
            quiver.arrows.push_back({label, static_cast<int>(s - 1), static_cast<int>(t - 1)});
        } else if (kw == "relation") {
            relations.push_back(parse_relation(c, quiver));
            continue;
        } else if (kw == "nilbound") {
            int col = (c.skip_ws(), c.column());
            long nb = c.integer();
            if (nb <= 0)
                throw ParseError("algebra_core", line_no, col, "nil bound must be positive");
            nil_bound = static_cast<int>(nb);
        } else {
            throw ParseError("algebra_core", line_no, kw_col, "unknown keyword '" + kw + "'");
        }
        if (!c.done())
            c.fail("unexpected trailing input");
    }
    if (!have_vertices)
        throw ParseError("algebra_core", line_no + 1, 1, "missing 'vertices' declaration");
    return Algebra::build(std::move(quiver), std::move(relations), field.value_or(Field::prime(2)), nil_bound,
                          limits);
}

AlgebraPtr load_algebra(const std::string& path, const AlgebraLimits& limits)
{
    std::ifstream f(path);
    if (!f)
        throw usage_error("algebra_core", "cannot open algebra file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_algebra(ss.str(), limits);
}

}  // namespace taufan
