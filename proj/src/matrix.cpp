#include "fupdate/matrix.hpp"

#include "fupdate/error.hpp"

#include <algorithm>

namespace fupdate {

namespace {

void require_same(const Matrix& a, const Matrix& b, const char* what) {
    if (!same_field(a.field(), b.field())) {
        throw SpecMismatch(std::string(what) + ": operands over " + a.field()->describe() +
                           " and " + b.field()->describe());
    }
}

} // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw InvalidParams("matrix without a field");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (!field_) throw InvalidParams("matrix without a field");
    if (data_.size() != rows * cols) {
        throw DimensionMismatch("matrix entry count does not match its shape");
    }
    for (Elem e : data_) {
        if (!field_->contains(e)) throw InvalidParams("matrix entry outside the field");
    }
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows,
                         std::size_t cols_if_empty) {
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    std::vector<Elem> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw DimensionMismatch("ragged matrix rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return {std::move(field), rows.size(), cols, std::move(data)};
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::row_vector(FieldPtr field, std::span<const Elem> v) {
    return {std::move(field), 1, v.size(), Vector(v.begin(), v.end())};
}

Vector Matrix::column(std::size_t c) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
    std::vector<std::vector<Elem>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("submatrix out of range");
    Matrix s(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) s(r, c) = (*this)(r0 + r, c0 + c);
    return s;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
    Matrix s(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= cols_) throw DimensionMismatch("column index out of range");
            s(r, j) = (*this)(r, cols[j]);
        }
    return s;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
    Matrix s(field_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= rows_) throw DimensionMismatch("row index out of range");
        std::copy(row(rows[i]).begin(), row(rows[i]).end(), s.data_.begin() + i * cols_);
    }
    return s;
}

Vector Matrix::apply(std::span<const Elem> v) const {
    if (v.size() != cols_) {
        throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                                " against matrix with " + std::to_string(cols_) + " columns");
    }
    const Field& f = *field_;
    Vector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        Elem acc = 0;
        const auto rr = row(r);
        for (std::size_t c = 0; c < cols_; ++c) {
            if (rr[c] != 0 && v[c] != 0) acc = f.add(acc, f.mul(rr[c], v[c]));
        }
        out[r] = acc;
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same(a, b, "multiply");
    if (a.cols_ != b.rows_) throw DimensionMismatch("inner dimensions differ");
    const Field& f = *a.field_;
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Elem aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Elem bkj = b(k, j);
                if (bkj != 0) out(i, j) = f.add(out(i, j), f.mul(aik, bkj));
            }
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same(a, b, "add");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("shapes differ");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] = a.field_->add(a.data_[i], b.data_[i]);
    }
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same(a, b, "subtract");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("shapes differ");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] = a.field_->sub(a.data_[i], b.data_[i]);
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
           same_field(a.field_, b.field_);
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
    require_same(top, bottom, "vstack");
    if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack: column counts differ");
    auto data = top.entries();
    data.insert(data.end(), bottom.entries().begin(), bottom.entries().end());
    return {top.field(), top.rows() + bottom.rows(), top.cols(), std::move(data)};
}

Matrix hstack(const Matrix& left, const Matrix& right) {
    require_same(left, right, "hstack");
    if (left.rows() != right.rows()) throw DimensionMismatch("hstack: row counts differ");
    Matrix out(left.field(), left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
        for (std::size_t c = 0; c < right.cols(); ++c) out(r, left.cols() + c) = right(r, c);
    }
    return out;
}

Matrix scale(const Matrix& m, Elem s) {
    Matrix out = m;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m.field()->mul(m(r, c), s);
    return out;
}

Matrix power(const Matrix& m, std::uint64_t e) {
    if (m.rows() != m.cols()) throw DimensionMismatch("power of a non-square matrix");
    Matrix result = Matrix::identity(m.field(), m.rows());
    Matrix base = m;
    while (e != 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

RowEchelon rref(const Matrix& m) {
    const Field& f = *m.field();
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
        std::size_t piv = lead;
        while (piv < r.rows() && r(piv, c) == 0) ++piv;
        if (piv == r.rows()) continue;
        if (piv != lead) {
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(piv, j), r(lead, j));
        }
        const Elem inv = f.inv(r(lead, c));
        for (std::size_t j = c; j < r.cols(); ++j) r(lead, j) = f.mul(r(lead, j), inv);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r(i, c) == 0) continue;
            const Elem factor = r(i, c);
            for (std::size_t j = c; j < r.cols(); ++j) {
                if (r(lead, j) != 0) r(i, j) = f.sub(r(i, j), f.mul(factor, r(lead, j)));
            }
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    const auto ech = rref(m);
    const Field& f = *m.field();
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : ech.pivots) is_pivot[p] = true;
    Matrix out(m.field(), n - ech.rank, n);
    std::size_t row = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        out(row, free) = 1;
        for (std::size_t i = 0; i < ech.rank; ++i) {
            out(row, ech.pivots[i]) = f.neg(ech.reduced(i, free));
        }
        ++row;
    }
    return out;
}

Matrix orthogonal_complement(const Matrix& g) { return kernel_basis(g); }

Matrix code_intersection(const Matrix& g1, const Matrix& g2) {
    require_same(g1, g2, "code_intersection");
    if (g1.cols() != g2.cols()) throw DimensionMismatch("code_intersection: lengths differ");
    return kernel_basis(vstack(kernel_basis(g1), kernel_basis(g2)));
}

Matrix row_space_basis(const Matrix& m) {
    auto ech = rref(m);
    return ech.reduced.submatrix(0, 0, ech.rank, m.cols());
}

bool row_space_contains(const Matrix& m, std::span<const Elem> v) {
    return rank(vstack(m, Matrix::row_vector(m.field(), v))) == rank(m);
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    return a.cols() == b.cols() && row_space_basis(a) == row_space_basis(b);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    require_same(a, b, "kron");
    const Field& f = *a.field();
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Elem aij = a(i, j);
            if (aij == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = f.mul(aij, b(k, l));
                }
        }
    return out;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const auto ech = rref(hstack(m, Matrix::identity(m.field(), n)));
    if (ech.rank < n || (n > 0 && ech.pivots[n - 1] >= n)) throw Singular();
    return ech.reduced.submatrix(0, n, n, n);
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
    require_same(a, b, "solve_left");
    if (a.cols() != b.cols()) throw DimensionMismatch("solve_left: column counts differ");
    // X a = b  <=>  a^T X^T = b^T; reduce [a^T | b^T].
    const Matrix at = a.transpose();
    const Matrix bt = b.transpose();
    const auto ech = rref(hstack(at, bt));
    const std::size_t k = a.rows();
    for (std::size_t p : ech.pivots) {
        if (p >= k) return std::nullopt;
    }
    Matrix xt(a.field(), k, b.rows());
    for (std::size_t i = 0; i < ech.rank; ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) xt(ech.pivots[i], j) = ech.reduced(i, k + j);
    }
    return xt.transpose();
}

Vector vec_add(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Vector vec_sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
    return out;
}

Vector vec_scale(const Field& f, std::span<const Elem> a, Elem s) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], s);
    return out;
}

std::size_t hamming_weight(std::span<const Elem> v) noexcept {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

bool is_zero_vector(std::span<const Elem> v) noexcept {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

bool canonical_less(std::span<const Elem> a, std::span<const Elem> b) noexcept {
    const auto wa = hamming_weight(a);
    const auto wb = hamming_weight(b);
    if (wa != wb) return wa < wb;
    // Supports: compare sorted index tuples lexicographically.
    std::size_t i = 0, j = 0;
    while (true) {
        while (i < a.size() && a[i] == 0) ++i;
        while (j < b.size() && b[j] == 0) ++j;
        if (i >= a.size() || j >= b.size()) break;
        if (i != j) return i < j;
        ++i;
        ++j;
    }
    // Same support: compare coefficients along it.
    for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
        if (a[k] != b[k]) return a[k] < b[k];
    }
    return a.size() < b.size();
}

std::size_t VectorHash::operator()(const Vector& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Elem e : v) {
        h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace fupdate
