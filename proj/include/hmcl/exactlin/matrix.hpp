#pragma once

#include "hmcl/exactlin/field.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace hmcl {

struct Entry {
    std::uint32_t col;
    Scalar value;
};

using SparseRow = std::vector<Entry>;

// Exact matrix over a Field with dense semantics (every (r, c) has a value)
// but row-wise sparse storage: each row keeps its nonzero entries sorted by
// column. All stored values are canonical and nonzero.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix zero(Field field, std::size_t rows, std::size_t cols) { return Matrix(field, rows, cols); }
    static Matrix identity(Field field, std::size_t n);
    // Integer literals, reduced into the field.
    static Matrix from_rows(Field field, const std::vector<std::vector<long>>& rows);
    static Matrix from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(Field field, const std::vector<Vector>& columns, std::size_t rows);
    static Matrix diagonal_block(const Matrix& a, const Matrix& b);
    static Matrix kronecker(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    static Matrix hstack(const Matrix& left, const Matrix& right);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;

    Scalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& v);
    void add_to(std::size_t r, std::size_t c, const Scalar& v);

    const SparseRow& row(std::size_t r) const { return data_[r]; }
    Vector row_vector(std::size_t r) const;
    Vector column_vector(std::size_t c) const;
    // Replaces row r; entries must be sorted by column, canonical and nonzero.
    void set_row(std::size_t r, SparseRow entries);

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Scalar& s) const;
    Vector apply(const Vector& v) const;

    Matrix select_rows(const std::vector<std::size_t>& indices) const;
    Matrix select_cols(const std::vector<std::size_t>& indices) const;

    bool is_zero() const;
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    void check_index(std::size_t r, std::size_t c) const;

    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseRow> data_;
};

// Accumulates (row, col, value) contributions and assembles a Matrix.
// Contributions to the same position are summed.
class MatrixBuilder {
public:
    MatrixBuilder(Field field, std::size_t rows, std::size_t cols);
    void add(std::size_t r, std::size_t c, const Scalar& v);
    Matrix build() &&;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> pending_;
};

// Reduced row-echelon form: rows are a basis of the row space with leading
// ones at `pivots` (ascending) and zeros in every other pivot column.
struct EchelonForm {
    Matrix rows;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

EchelonForm row_echelon(const Matrix& m);
std::size_t rank(const Matrix& m);

// Returns x with m x = b, or nullopt when b is outside the column space.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
// Returns X with m X = rhs, or nullopt when some column is not solvable.
std::optional<Matrix> solve_many(const Matrix& m, const Matrix& rhs);

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);

} // namespace hmcl
