#include "taufan/matrix.hpp"

#include "taufan/error.hpp"

#include <sstream>

namespace taufan {

Matrix Matrix::identity(int n)
{
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, int cols)
{
    int c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    Matrix m(static_cast<int>(rows.size()), c);
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows[r].size()) != c)
            throw Error(ErrorKind::Inconsistency, "algebra_core", "ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m(r, j) = rows[r][j];
    }
    return m;
}

Matrix Matrix::from_int_rows(const std::vector<IntVec>& rows, int cols)
{
    std::vector<std::vector<Scalar>> q;
    for (const auto& r : rows)
        q.emplace_back(r.begin(), r.end());
    return from_rows(q, cols);
}

Matrix Matrix::column(const QVec& v)
{
    Matrix m(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i)
        m(static_cast<int>(i), 0) = v[i];
    return m;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

QVec Matrix::column_vector(int c) const
{
    QVec v(rows_);
    for (int r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

QVec Matrix::row_vector(int r) const
{
    QVec v(cols_);
    for (int c = 0; c < cols_; ++c)
        v[c] = (*this)(r, c);
    return v;
}

Matrix Matrix::columns(const std::vector<int>& idx) const
{
    Matrix m(rows_, static_cast<int>(idx.size()));
    for (int r = 0; r < rows_; ++r)
        for (size_t j = 0; j < idx.size(); ++j)
            m(r, static_cast<int>(j)) = (*this)(r, idx[j]);
    return m;
}

Matrix Matrix::rows_subset(const std::vector<int>& idx) const
{
    Matrix m(static_cast<int>(idx.size()), cols_);
    for (size_t i = 0; i < idx.size(); ++i)
        for (int c = 0; c < cols_; ++c)
            m(static_cast<int>(i), c) = (*this)(idx[i], c);
    return m;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        if (r)
            os << ",";
        os << "[";
        for (int c = 0; c < cols_; ++c) {
            if (c)
                os << ",";
            os << (*this)(r, c).get_str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace linalg {

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::Inconsistency, "algebra_core", "matrix product shape mismatch");
    Matrix out(a.rows(), b.cols());
    Scalar acc;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            acc = 0;
            for (int k = 0; k < a.cols(); ++k) {
                const Scalar& x = a(i, k);
                if (x == 0)
                    continue;
                const Scalar& y = b(k, j);
                if (y != 0)
                    acc += x * y;
            }
            out(i, j) = F.normalize(acc);
        }
    return out;
}

Matrix add(const Field& F, const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::Inconsistency, "algebra_core", "matrix sum shape mismatch");
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out(i, j) = F.normalize(a(i, j) + b(i, j));
    return out;
}

Matrix subtract(const Field& F, const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::Inconsistency, "algebra_core", "matrix difference shape mismatch");
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out(i, j) = F.normalize(a(i, j) - b(i, j));
    return out;
}

Matrix scale(const Field& F, const Matrix& a, const Scalar& s)
{
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out(i, j) = F.normalize(a(i, j) * s);
    return out;
}

Matrix normalized(const Field& F, const Matrix& a)
{
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out(i, j) = F.normalize(a(i, j));
    return out;
}

QVec apply(const Field& F, const Matrix& a, const QVec& v)
{
    QVec out(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        Scalar acc = 0;
        for (int k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0 && v[k] != 0)
                acc += a(i, k) * v[k];
        out[i] = F.normalize(acc);
    }
    return out;
}

Echelon rref(const Field& F, Matrix m)
{
    Echelon e;
    int row = 0;
    Scalar factor;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != row)
            for (int c = 0; c < m.cols(); ++c)
                std::swap(m(pivot, c), m(row, c));
        Scalar inv = F.inverse(m(row, col));
        for (int c = col; c < m.cols(); ++c)
            if (m(row, c) != 0)
                m(row, c) = F.normalize(m(row, c) * inv);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            factor = m(r, col);
            for (int c = col; c < m.cols(); ++c)
                if (m(row, c) != 0)
                    m(r, c) = F.normalize(m(r, c) - factor * m(row, c));
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.reduced = std::move(m);
    return e;
}

int rank(const Field& F, const Matrix& m)
{
    if (m.empty())
        return 0;
    return static_cast<int>(rref(F, m).pivots.size());
}

Matrix nullspace(const Field& F, const Matrix& m)
{
    int n = m.cols();
    if (m.rows() == 0)
        return Matrix::identity(n);
    Echelon e = rref(F, m);
    std::vector<int> is_pivot(n, -1);
    for (size_t i = 0; i < e.pivots.size(); ++i)
        is_pivot[e.pivots[i]] = static_cast<int>(i);
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (is_pivot[c] < 0)
            free_cols.push_back(c);
    Matrix basis(n, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int f = free_cols[k];
        basis(f, static_cast<int>(k)) = 1;
        for (size_t i = 0; i < e.pivots.size(); ++i)
            if (e.reduced(static_cast<int>(i), f) != 0)
                basis(e.pivots[i], static_cast<int>(k)) = F.neg(e.reduced(static_cast<int>(i), f));
    }
    return basis;
}

Matrix column_basis(const Field& F, const Matrix& m)
{
    if (m.cols() == 0)
        return Matrix(m.rows(), 0);
    Echelon e = rref(F, m.transpose());
    Matrix out(m.rows(), static_cast<int>(e.pivots.size()));
    for (size_t i = 0; i < e.pivots.size(); ++i)
        for (int r = 0; r < m.rows(); ++r)
            out(r, static_cast<int>(i)) = e.reduced(static_cast<int>(i), r);
    return out;
}

Matrix complement_basis(const Field& F, const Matrix& basis, int ambient)
{
    std::vector<int> pivot_rows;
    if (basis.cols() > 0)
        pivot_rows = rref(F, basis.transpose()).pivots;
    std::vector<bool> used(ambient, false);
    for (int p : pivot_rows)
        used[p] = true;
    std::vector<int> free_rows;
    for (int r = 0; r < ambient; ++r)
        if (!used[r])
            free_rows.push_back(r);
    Matrix out(ambient, static_cast<int>(free_rows.size()));
    for (size_t k = 0; k < free_rows.size(); ++k)
        out(free_rows[k], static_cast<int>(k)) = 1;
    return out;
}

std::optional<Matrix> solve(const Field& F, const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw Error(ErrorKind::Inconsistency, "algebra_core", "solve shape mismatch");
    int n = a.cols();
    Matrix aug = hstack({a, b}, a.rows());
    Echelon e = rref(F, aug);
    for (int p : e.pivots)
        if (p >= n)
            return std::nullopt;
    Matrix x(n, b.cols());
    for (size_t i = 0; i < e.pivots.size(); ++i)
        for (int c = 0; c < b.cols(); ++c)
            x(e.pivots[i], c) = e.reduced(static_cast<int>(i), n + c);
    return x;
}

std::optional<Matrix> inverse(const Field& F, const Matrix& a)
{
    if (a.rows() != a.cols())
        return std::nullopt;
    if (rank(F, a) != a.rows())
        return std::nullopt;
    return solve(F, a, Matrix::identity(a.rows()));
}

Scalar determinant(const Field& F, Matrix m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorKind::Inconsistency, "algebra_core", "determinant of a non-square matrix");
    int n = m.rows();
    Scalar det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return 0;
        if (pivot != col) {
            for (int c = 0; c < n; ++c)
                std::swap(m(pivot, c), m(col, c));
            det = F.neg(det);
        }
        det = F.mul(det, m(col, col));
        Scalar inv = F.inverse(m(col, col));
        for (int r = col + 1; r < n; ++r) {
            if (m(r, col) == 0)
                continue;
            Scalar f = F.mul(m(r, col), inv);
            for (int c = col; c < n; ++c)
                m(r, c) = F.normalize(m(r, c) - f * m(col, c));
        }
    }
    return det;
}

bool invertible(const Field& F, const Matrix& a)
{
    return a.rows() == a.cols() && rank(F, a) == a.rows();
}

bool contains_columns(const Field& F, const Matrix& space, const Matrix& vectors)
{
    if (vectors.cols() == 0)
        return true;
    int r = rank(F, space);
    return rank(F, hstack({space, vectors}, space.rows())) == r;
}

Matrix hstack(const std::vector<Matrix>& blocks, int rows)
{
    int r = rows;
    int c = 0;
    for (const auto& b : blocks) {
        if (r < 0)
            r = b.rows();
        else if (b.rows() != r && b.cols() > 0)
            throw Error(ErrorKind::Inconsistency, "algebra_core", "hstack row mismatch");
        c += b.cols();
    }
    if (r < 0)
        r = 0;
    Matrix out(r, c);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j)
                out(i, off + j) = b(i, j);
        off += b.cols();
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& blocks, int cols)
{
    int c = cols;
    int r = 0;
    for (const auto& b : blocks) {
        if (c < 0)
            c = b.cols();
        else if (b.cols() != c && b.rows() > 0)
            throw Error(ErrorKind::Inconsistency, "algebra_core", "vstack column mismatch");
        r += b.rows();
    }
    if (c < 0)
        c = 0;
    Matrix out(r, c);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j)
                out(off + i, j) = b(i, j);
        off += b.rows();
    }
    return out;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks)
{
    int r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix out(r, c);
    int ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j)
                out(ro + i, co + j) = b(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

Matrix power(const Field& F, const Matrix& a, int k)
{
    Matrix result = Matrix::identity(a.rows());
    Matrix base = a;
    while (k > 0) {
        if (k & 1)
            result = multiply(F, result, base);
        k >>= 1;
        if (k)
            base = multiply(F, base, base);
    }
    return result;
}

}  // namespace linalg
}  // namespace taufan
