#pragma once

#include "taufan/field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace taufan {

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, int cols = -1);
    static Matrix from_int_rows(const std::vector<IntVec>& rows, int cols = -1);
    static Matrix column(const QVec& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    Matrix transpose() const;
    QVec column_vector(int c) const;
    QVec row_vector(int r) const;
    Matrix columns(const std::vector<int>& idx) const;
    Matrix rows_subset(const std::vector<int>& idx) const;

    bool operator==(const Matrix& other) const
    {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

namespace linalg {

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b);
Matrix add(const Field& F, const Matrix& a, const Matrix& b);
Matrix subtract(const Field& F, const Matrix& a, const Matrix& b);
Matrix scale(const Field& F, const Matrix& a, const Scalar& s);
Matrix normalized(const Field& F, const Matrix& a);
QVec apply(const Field& F, const Matrix& a, const QVec& v);

struct Echelon {
    Matrix reduced;
    std::vector<int> pivots;
};

Echelon rref(const Field& F, Matrix m);
int rank(const Field& F, const Matrix& m);
Matrix nullspace(const Field& F, const Matrix& m);
Matrix column_basis(const Field& F, const Matrix& m);
Matrix complement_basis(const Field& F, const Matrix& basis, int ambient);
std::optional<Matrix> solve(const Field& F, const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Field& F, const Matrix& a);
Scalar determinant(const Field& F, Matrix m);
bool invertible(const Field& F, const Matrix& a);
bool contains_columns(const Field& F, const Matrix& space, const Matrix& vectors);

Matrix hstack(const std::vector<Matrix>& blocks, int rows = -1);
Matrix vstack(const std::vector<Matrix>& blocks, int cols = -1);
Matrix block_diagonal(const std::vector<Matrix>& blocks);
Matrix power(const Field& F, const Matrix& a, int k);

}  // namespace linalg
}  // namespace taufan
