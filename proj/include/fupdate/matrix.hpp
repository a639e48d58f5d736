#pragma once

#include "fupdate/gf.hpp"

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace fupdate {

/// Column/row vector of element indices; the field is carried by context.
using Vector = std::vector<Elem>;

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows,
                            std::size_t cols_if_empty = 0);
    static Matrix identity(FieldPtr field, std::size_t n);
    /// 1 x n matrix holding `v`.
    static Matrix row_vector(FieldPtr field, std::span<const Elem> v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Elem>& entries() const noexcept { return data_; }

    Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    Vector column(std::size_t c) const;
    std::vector<std::vector<Elem>> to_rows() const;

    bool is_zero() const noexcept;
    Matrix transpose() const;
    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix select_columns(std::span<const std::size_t> cols) const;
    Matrix select_rows(std::span<const std::size_t> rows) const;

    /// Matrix-vector product; throws DimensionMismatch.
    Vector apply(std::span<const Elem> v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);
Matrix scale(const Matrix& m, Elem s);
Matrix power(const Matrix& m, std::uint64_t e);

struct RowEchelon {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots; // 0-based pivot columns, increasing
};

/// Reduced row echelon form; pivot = first nonzero column, smallest row index.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Rows span {v : m v = 0}; one row per RREF free column, in index order,
/// with a 1 in that free column.
Matrix kernel_basis(const Matrix& m);

/// Basis of the dual of the row space of `g` (rows need not be independent).
Matrix orthogonal_complement(const Matrix& g);

/// Basis of rowspace(g1) ∩ rowspace(g2), computed as the dual of the sum of
/// the two duals.
Matrix code_intersection(const Matrix& g1, const Matrix& g2);

/// Nonzero rows of the RREF: canonical basis of the row space.
Matrix row_space_basis(const Matrix& m);
bool row_space_contains(const Matrix& m, std::span<const Elem> v);
bool same_row_space(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);

/// Throws Singular or DimensionMismatch.
Matrix inverse(const Matrix& m);

/// X with X * a = b, if one exists.
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);

// Vector helpers over field f.
Vector vec_add(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vector vec_sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vector vec_scale(const Field& f, std::span<const Elem> a, Elem s);
std::size_t hamming_weight(std::span<const Elem> v) noexcept;
bool is_zero_vector(std::span<const Elem> v) noexcept;

/// Order used for every "first" choice: weight, then support (lexicographic
/// on the sorted index tuple), then nonzero coefficients (lexicographic).
bool canonical_less(std::span<const Elem> a, std::span<const Elem> b) noexcept;

struct VectorHash {
    std::size_t operator()(const Vector& v) const noexcept;
};

} // namespace fupdate
