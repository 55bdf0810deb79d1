#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "guni/cyclotomic.hpp"
#include "guni/errors.hpp"

namespace guni {

// Dense matrix over Q(zeta_N).  All entries are kept at one common
// cyclotomic order so comparisons and elimination never re-promote.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0), order_(1) {}

    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), order_(1), entries_(size_t(rows) * cols, CycNum(0)) {}

    Matrix(int rows, int cols, std::vector<CycNum> entries)
        : rows_(rows), cols_(cols), order_(1), entries_(std::move(entries)) {
        if ((size_t)rows_ * cols_ != entries_.size())
            raise(ErrorCode::DimensionMismatch, "entry count does not match shape");
        unify_order();
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = CycNum(1);
        return m;
    }

    static Matrix diagonal(std::vector<CycNum> diag) {
        Matrix m((int)diag.size(), (int)diag.size());
        for (int i = 0; i < (int)diag.size(); ++i) m.at(i, i) = std::move(diag[i]);
        m.unify_order();
        return m;
    }

    // Permutation matrix sending basis vector e_i to e_{perm[i]}.
    static Matrix permutation(const std::vector<int>& perm) {
        Matrix m((int)perm.size(), (int)perm.size());
        for (int i = 0; i < (int)perm.size(); ++i) m.at(perm[i], i) = CycNum(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long order() const { return order_; }

    const CycNum& at(int r, int c) const { return entries_[size_t(r) * cols_ + c]; }
    CycNum& at(int r, int c) { return entries_[size_t(r) * cols_ + c]; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    bool is_scalar() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (i != j && !at(i, j).is_zero()) return false;
        for (int i = 1; i < rows_; ++i)
            if (at(i, i) != at(0, 0)) return false;
        return true;
    }

    Matrix promoted(long m) const {
        Matrix out = *this;
        for (auto& e : out.entries_) e = e.promoted(m);
        out.order_ = m;
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) raise(ErrorCode::DimensionMismatch, "matrix product shape");
        long l = std::lcm(a.order_, b.order_);
        const Matrix& x = a.order_ == l ? a : a.promoted(l);
        const Matrix& y0 = b.order_ == l ? b : b.promoted(l);
        Matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const CycNum& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (y0.at(k, j).is_zero()) continue;
                    out.at(i, j) += xik * y0.at(k, j);
                }
            }
        out.unify_order();
        return out;
    }

    friend Matrix operator*(const CycNum& c, const Matrix& m) {
        Matrix out = m;
        for (auto& e : out.entries_) e = c * e;
        out.unify_order();
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            raise(ErrorCode::DimensionMismatch, "matrix difference shape");
        Matrix out = a;
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
        out.unify_order();
        return out;
    }

    std::vector<CycNum> apply(const std::vector<CycNum>& v) const {
        if ((int)v.size() != cols_) raise(ErrorCode::DimensionMismatch, "matrix-vector shape");
        std::vector<CycNum> out(rows_, CycNum(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
        return out;
    }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        out.order_ = order_;
        return out;
    }

    Matrix pow(long e) const {
        Matrix result = identity(rows_);
        Matrix base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    // Reduced row echelon form: unit pivots, zeros above and below.
    // Canonical for a given row space, hence usable as a data key.
    Matrix rref() const {
        Matrix m = *this;
        int pivot_row = 0;
        for (int col = 0; col < m.cols_ && pivot_row < m.rows_; ++col) {
            int sel = -1;
            for (int r = pivot_row; r < m.rows_; ++r)
                if (!m.at(r, col).is_zero()) { sel = r; break; }
            if (sel < 0) continue;
            if (sel != pivot_row)
                for (int c = 0; c < m.cols_; ++c) std::swap(m.at(sel, c), m.at(pivot_row, c));
            CycNum inv = m.at(pivot_row, col).inverse();
            for (int c = col; c < m.cols_; ++c) m.at(pivot_row, c) = inv * m.at(pivot_row, c);
            for (int r = 0; r < m.rows_; ++r) {
                if (r == pivot_row || m.at(r, col).is_zero()) continue;
                CycNum f = m.at(r, col);
                for (int c = col; c < m.cols_; ++c)
                    m.at(r, c) = m.at(r, c) - f * m.at(pivot_row, c);
            }
            ++pivot_row;
        }
        return m;
    }

    int rank() const {
        Matrix r = rref();
        int rank = 0;
        for (int i = 0; i < r.rows_; ++i) {
            bool nonzero = false;
            for (int j = 0; j < r.cols_; ++j)
                if (!r.at(i, j).is_zero()) { nonzero = true; break; }
            if (nonzero) ++rank;
        }
        return rank;
    }

    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    Matrix inverse() const {
        if (rows_ != cols_) raise(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
        Matrix aug(rows_, 2 * cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = CycNum(1);
        }
        aug.unify_order();
        Matrix r = aug.rref();
        for (int i = 0; i < rows_; ++i)
            if (!r.at(i, i).is_one())
                raise(ErrorCode::SingularGenerator, "matrix is singular");
        Matrix out(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(i, j) = r.at(i, cols_ + j);
        out.unify_order();
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.entries_.size(); ++i)
            if (a.entries_[i] != b.entries_[i]) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // Lexicographic total order on shape then entries (at a common field).
    static int compare(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_ ? -1 : 1;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_ ? -1 : 1;
        for (size_t i = 0; i < a.entries_.size(); ++i) {
            int c = CycNum::compare(a.entries_[i], b.entries_[i]);
            if (c != 0) return c;
        }
        return 0;
    }
    friend bool operator<(const Matrix& a, const Matrix& b) { return compare(a, b) < 0; }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += "[";
            for (int j = 0; j < cols_; ++j) {
                if (j) s += " ";
                s += at(i, j).str();
            }
            s += "]\n";
        }
        return s;
    }

    void unify_order() {
        long l = 1;
        for (const auto& e : entries_) l = std::lcm(l, e.order());
        check_order_cap(l);
        for (auto& e : entries_)
            if (e.order() != l) e = e.promoted(l);
        order_ = l;
    }

  private:
    int rows_, cols_;
    long order_;
    std::vector<CycNum> entries_;
};

// Linear subspace of a coordinate vector space, stored as a reduced
// row-echelon basis so that equal subspaces have equal representations.
class Subspace {
  public:
    Subspace() : ambient_(0) {}

    static Subspace zero(int ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = Matrix(0, ambient);
        return s;
    }

    static Subspace full(int ambient) { return from_rows(Matrix::identity(ambient)); }

    static Subspace span_of(const std::vector<std::vector<CycNum>>& vectors, int ambient) {
        Matrix m((int)vectors.size(), ambient);
        for (int i = 0; i < (int)vectors.size(); ++i) {
            if ((int)vectors[i].size() != ambient)
                raise(ErrorCode::AmbientMismatch, "vector length differs from ambient dimension");
            for (int j = 0; j < ambient; ++j) m.at(i, j) = vectors[i][j];
        }
        m.unify_order();
        return from_rows(m);
    }

    // Canonicalizes an arbitrary spanning matrix.
    static Subspace from_rows(const Matrix& m) {
        Matrix r = m.rref();
        int rank = 0;
        for (int i = 0; i < r.rows(); ++i) {
            bool nonzero = false;
            for (int j = 0; j < r.cols(); ++j)
                if (!r.at(i, j).is_zero()) { nonzero = true; break; }
            if (nonzero) ++rank;
        }
        Matrix basis(rank, r.cols());
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < r.cols(); ++j) basis.at(i, j) = r.at(i, j);
        basis.unify_order();
        Subspace s;
        s.ambient_ = r.cols();
        s.basis_ = std::move(basis);
        return s;
    }

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    // Projective dimension of the associated linear subvariety.
    int proj_dim() const { return dim() - 1; }
    const Matrix& basis() const { return basis_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    std::vector<CycNum> basis_row(int i) const {
        std::vector<CycNum> v(ambient_);
        for (int j = 0; j < ambient_; ++j) v[j] = basis_.at(i, j);
        return v;
    }

    bool contains_vector(const std::vector<CycNum>& v) const {
        Matrix m(dim() + 1, ambient_);
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < ambient_; ++j) m.at(i, j) = basis_.at(i, j);
        for (int j = 0; j < ambient_; ++j) m.at(dim(), j) = v[j];
        m.unify_order();
        return m.rank() == dim();
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) raise(ErrorCode::AmbientMismatch, "subspace containment");
        if (other.dim() > dim()) return false;
        Matrix m(dim() + other.dim(), ambient_);
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < ambient_; ++j) m.at(i, j) = basis_.at(i, j);
        for (int i = 0; i < other.dim(); ++i)
            for (int j = 0; j < ambient_; ++j) m.at(dim() + i, j) = other.basis_.at(i, j);
        m.unify_order();
        return m.rank() == dim();
    }

    // Image under an invertible matrix, as the span of g * basis rows.
    Subspace apply(const Matrix& g) const {
        if (g.cols() != ambient_) raise(ErrorCode::AmbientMismatch, "subspace image");
        return from_rows(basis_ * g.transposed());
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return Matrix::compare(a.basis_, b.basis_) < 0;
    }

  private:
    int ambient_;
    Matrix basis_;
};

// Kernel of m as a canonical subspace of the column space.
inline Subspace kernel(const Matrix& m) {
    Matrix r = m.rref();
    int n = m.cols();
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < r.rows(); ++i) {
        int lead = -1;
        for (int j = 0; j < n; ++j)
            if (!r.at(i, j).is_zero()) { lead = j; break; }
        if (lead < 0) break;
        pivot_col.push_back(lead);
        is_pivot[lead] = true;
    }
    std::vector<std::vector<CycNum>> basis;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<CycNum> v(n, CycNum(0));
        v[j] = CycNum(1);
        for (int i = 0; i < (int)pivot_col.size(); ++i) v[pivot_col[i]] = -r.at(i, j);
        basis.push_back(std::move(v));
    }
    return Subspace::span_of(basis, n);
}

// Intersection via the Zassenhaus block trick: row reduce [A A; B 0] and
// read the intersection from rows whose left half vanished.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        raise(ErrorCode::AmbientMismatch, "intersecting subspaces of different ambient spaces");
    int n = a.ambient();
    if (a.is_full()) return b;
    if (b.is_full()) return a;
    if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
    Matrix block(a.dim() + b.dim(), 2 * n);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < n; ++j) {
            block.at(i, j) = a.basis().at(i, j);
            block.at(i, n + j) = a.basis().at(i, j);
        }
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < n; ++j) block.at(a.dim() + i, j) = b.basis().at(i, j);
    block.unify_order();
    Matrix r = block.rref();
    std::vector<std::vector<CycNum>> rows;
    for (int i = 0; i < r.rows(); ++i) {
        bool left_zero = true;
        for (int j = 0; j < n; ++j)
            if (!r.at(i, j).is_zero()) { left_zero = false; break; }
        if (!left_zero) continue;
        std::vector<CycNum> v(n);
        bool nonzero = false;
        for (int j = 0; j < n; ++j) {
            v[j] = r.at(i, n + j);
            nonzero = nonzero || !v[j].is_zero();
        }
        if (nonzero) rows.push_back(std::move(v));
    }
    return Subspace::span_of(rows, n);
}

} // namespace guni
