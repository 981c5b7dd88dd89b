#pragma once

/// Dense exact linear algebra over a Field.
///
/// Conventions used throughout the engine:
///  - vectors are coordinate columns, Vec = std::vector<Scalar>;
///  - an r x c Matrix represents a linear map k^c -> k^r, columns are the
///    images of basis vectors, composition is matrix product;
///  - tensor coordinates are row-major: the basis vector e_i (x) e_j of
///    k^m (x) k^n has flat index i*n + j;
///  - subspaces are stored as the canonical reduced row echelon basis of
///    their span, so two subspaces are equal iff their basis matrices are.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phk/error.hpp"
#include "phk/scalar.hpp"

namespace phk {

using Vec = std::vector<Scalar>;

inline Vec vec_zero(std::size_t n, const Field& f) { return Vec(n, f.zero()); }

inline Vec basis_vec(std::size_t n, std::size_t i, const Field& f) {
    Vec v = vec_zero(n, f);
    v.at(i) = f.one();
    return v;
}

inline bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vec_add: length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vec_sub: length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

inline Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

/// r += c * x, skipping work when c = 0.
inline void vec_axpy(Vec& r, const Scalar& c, const Vec& x) {
    if (c.is_zero()) return;
    if (r.size() != x.size()) throw DimensionError("vec_axpy: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) r[i] += c * x[i];
}

/// Kronecker product of coordinate vectors, row-major flat index.
inline Vec tensor_vec(const Vec& a, const Vec& b) {
    Vec r;
    r.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) r.push_back(x * y);
    return r;
}

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const Field& f)
        : rows_(rows), cols_(cols), field_(f), e_(rows * cols, f.zero()) {}

    static Matrix identity(std::size_t n, const Field& f) {
        Matrix m(n, n, f);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, const Field& f) {
        Matrix m(rows.size(), cols, f);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionError("from_rows: ragged input");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows, const Field& f) {
        Matrix m(rows, cols.size(), f);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw DimensionError("from_cols: ragged input");
            for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) {
        if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
        return e_[i * cols_ + j];
    }
    const Scalar& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
        return e_[i * cols_ + j];
    }

    Vec row(std::size_t i) const {
        Vec v;
        v.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
        return v;
    }

    Vec col(std::size_t j) const {
        Vec v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
        return v;
    }

    void set_col(std::size_t j, const Vec& v) {
        if (v.size() != rows_) throw DimensionError("set_col: length mismatch");
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw DimensionError("apply: expected length " +
                                                    std::to_string(cols_));
        Vec r = vec_zero(rows_, field_);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const Scalar& m = at(i, j);
                if (!m.is_zero()) r[i] += m * v[j];
            }
        }
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        check_field(o);
        if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
        Matrix r(rows_, o.cols_, field_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& a = at(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Scalar& b = o.at(k, j);
                    if (!b.is_zero()) r.at(i, j) += a * b;
                }
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        check_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    Matrix scaled(const Scalar& c) const {
        Matrix r = *this;
        for (auto& x : r.e_) x *= c;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, field_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] != o.e_[i]) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i == 0 ? "[" : " ";
            for (std::size_t j = 0; j < cols_; ++j)
                s += at(i, j).to_string() + (j + 1 < cols_ ? " " : "");
            s += i + 1 < rows_ ? "\n" : "]";
        }
        return s;
    }

private:
    void check_field(const Matrix& o) const {
        if (field_ != o.field_)
            throw FieldMismatchError("matrix field mismatch: " + field_.to_string() +
                                     " vs " + o.field_.to_string());
    }
    void check_shape(const Matrix& o) const {
        check_field(o);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionError("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> e_;
};

/// Kronecker product consistent with the row-major tensor index:
/// (A (x) B)[(i,k),(j,l)] = A[i][j] * B[k][l].
inline Matrix kron(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatchError("kron: field mismatch");
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& x = a.at(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Scalar& y = b.at(k, l);
                    if (!y.is_zero())
                        r.at(i * b.rows() + k, j * b.cols() + l) = x * y;
                }
        }
    return r;
}

class Subspace;

/// Incrementally maintained canonical reduced row echelon basis of a span.
/// Rows are kept sorted by pivot column, pivots are 1, and every pivot
/// column is zero in all other rows, so the row list is the unique
/// canonical basis of the span at every moment.
class SpanBuilder {
public:
    SpanBuilder(std::size_t ambient, const Field& f) : ambient_(ambient), field_(f) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const Field& field() const { return field_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residual of v after eliminating all pivot coordinates.
    Vec reduce(Vec v) const {
        if (v.size() != ambient_) throw DimensionError("reduce: length mismatch");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Scalar& c = v[pivots_[r]];
            if (c.is_zero()) continue;
            const Scalar minus_c = -c;
            vec_axpy(v, minus_c, rows_[r]);
            v[pivots_[r]] = field_.zero();
        }
        return v;
    }

    /// Adds v to the span. Returns true when the dimension grew.
    bool add(Vec v) {
        v = reduce(std::move(v));
        std::size_t lead = ambient_;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!v[j].is_zero()) { lead = j; break; }
        if (lead == ambient_) return false;
        const Scalar inv = v[lead].inverse();
        for (auto& x : v) x *= inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Scalar& c = rows_[r][lead];
            if (c.is_zero()) continue;
            const Scalar minus_c = -c;
            vec_axpy(rows_[r], minus_c, v);
            rows_[r][lead] = field_.zero();
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, lead);
        return true;
    }

    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    Subspace to_subspace() const;

private:
    std::size_t ambient_;
    Field field_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

struct RrefResult {
    Matrix mat;                       // rank x cols, canonical form, no zero rows
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per row, strictly increasing
};

inline RrefResult rref(const Matrix& m) {
    SpanBuilder sb(m.cols(), m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) sb.add(m.row(i));
    RrefResult r{Matrix::from_rows(sb.rows(), m.cols(), m.field()), sb.dim(), sb.pivots()};
    return r;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// A linear subspace of k^ambient in canonical form. Equality of subspaces
/// is literal equality of the stored basis matrices.
class Subspace {
public:
    static Subspace zero(std::size_t ambient, const Field& f) {
        return Subspace(ambient, f, Matrix(0, ambient, f), {});
    }

    static Subspace full(std::size_t ambient, const Field& f) {
        std::vector<std::size_t> piv(ambient);
        for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
        return Subspace(ambient, f, Matrix::identity(ambient, f), std::move(piv));
    }

    static Subspace span_of(const std::vector<Vec>& gens, std::size_t ambient, const Field& f) {
        SpanBuilder sb(ambient, f);
        for (const auto& g : gens) sb.add(g);
        return sb.to_subspace();
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Field& field() const { return field_; }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const {
        if (v.size() != ambient_) throw DimensionError("contains: length mismatch");
        Vec r = v;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            const Scalar& c = r[pivots_[i]];
            if (c.is_zero()) continue;
            const Scalar minus_c = -c;
            for (std::size_t j = 0; j < ambient_; ++j) {
                const Scalar& b = basis_.at(i, j);
                if (!b.is_zero()) r[j] += minus_c * b;
            }
        }
        return vec_is_zero(r);
    }

    bool contains(const Subspace& o) const {
        if (o.ambient_ != ambient_) throw DimensionError("contains: ambient mismatch");
        for (std::size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_vector(i))) return false;
        return true;
    }

    /// Coordinates of v in the canonical basis, or nullopt when v is not a
    /// member. With an echelon basis the candidate coordinates can be read
    /// off the pivot columns and then verified exactly.
    std::optional<Vec> coords_of(const Vec& v) const {
        if (v.size() != ambient_) throw DimensionError("coords_of: length mismatch");
        Vec c;
        c.reserve(dim());
        for (std::size_t i = 0; i < dim(); ++i) c.push_back(v[pivots_[i]]);
        Vec rebuilt = vec_zero(ambient_, field_);
        for (std::size_t i = 0; i < dim(); ++i)
            vec_axpy(rebuilt, c[i], basis_.row(i));
        if (!vec_eq(rebuilt, v)) return std::nullopt;
        return c;
    }

    /// Linear combination of basis vectors with the given coordinates.
    Vec from_coords(const Vec& c) const {
        if (c.size() != dim()) throw DimensionError("from_coords: length mismatch");
        Vec v = vec_zero(ambient_, field_);
        for (std::size_t i = 0; i < dim(); ++i) vec_axpy(v, c[i], basis_.row(i));
        return v;
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && field_ == o.field_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    friend class SpanBuilder;

    Subspace(std::size_t ambient, const Field& f, Matrix basis, std::vector<std::size_t> piv)
        : ambient_(ambient), field_(f), basis_(std::move(basis)), pivots_(std::move(piv)) {}

    std::size_t ambient_;
    Field field_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

inline Subspace SpanBuilder::to_subspace() const {
    return Subspace(ambient_, field_,
                    Matrix::from_rows(rows_, ambient_, field_), pivots_);
}

/// Canonical basis of the solution space of m x = 0.
inline Subspace kernel_basis(const Matrix& m) {
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> gens;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v = vec_zero(m.cols(), m.field());
        v[f] = m.field().one();
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = -r.mat.at(i, f);
        gens.push_back(std::move(v));
    }
    return Subspace::span_of(gens, m.cols(), m.field());
}

/// One exact solution of m x = b, or nullopt when the system is inconsistent.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw DimensionError("solve: rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1, m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    const RrefResult r = rref(aug);
    Vec x = vec_zero(m.cols(), m.field());
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (r.pivots[i] == m.cols()) return std::nullopt;  // row 0 = 1
        x[r.pivots[i]] = r.mat.at(i, m.cols());
    }
    return x;
}

/// Canonical basis of the column space.
inline Subspace image_basis(const Matrix& m) {
    SpanBuilder sb(m.rows(), m.field());
    for (std::size_t j = 0; j < m.cols(); ++j) sb.add(m.col(j));
    return sb.to_subspace();
}

/// Exact inverse of a square matrix, or nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse: matrix not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n, m.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = m.field().one();
    }
    const RrefResult r = rref(aug);
    if (r.rank < n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (r.pivots[i] != i) return std::nullopt;
    Matrix inv(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

} // namespace phk
