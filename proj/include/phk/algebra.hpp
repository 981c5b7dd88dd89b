#pragma once

/// Finite dimensional unital algebras presented by structure constants,
/// together with the constructions the engine needs downstream: axiom
/// verification, tensor and opposite algebras, corner subalgebras at a left
/// identity idempotent, spaces of module maps, and balanced (relative)
/// tensor products presented as explicit quotients.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phk/error.hpp"
#include "phk/matrix.hpp"
#include "phk/report.hpp"
#include "phk/scalar.hpp"

namespace phk {

/// Unital associative algebra over `field` with a distinguished basis
/// e_0..e_{n-1}: products are stored as c[i][j][k] with
/// e_i * e_j = sum_k c[i][j][k] e_k, plus the unit's coordinate vector.
/// Construction does not validate the axioms; run check_algebra for that.
class FinDimAlgebra {
public:
    FinDimAlgebra(std::size_t dim, const Field& f)
        : dim_(dim), field_(f), c_(dim * dim * dim, f.zero()), unit_(vec_zero(dim, f)) {}

    std::size_t dim() const { return dim_; }
    const Field& field() const { return field_; }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_.at((i * dim_ + j) * dim_ + k);
    }
    Scalar& c(std::size_t i, std::size_t j, std::size_t k) {
        return c_.at((i * dim_ + j) * dim_ + k);
    }

    void set_product(std::size_t i, std::size_t j, const Vec& v) {
        if (v.size() != dim_) throw DimensionError("set_product: length mismatch");
        for (std::size_t k = 0; k < dim_; ++k) c(i, j, k) = v[k];
    }

    Vec basis_product(std::size_t i, std::size_t j) const {
        Vec v;
        v.reserve(dim_);
        for (std::size_t k = 0; k < dim_; ++k) v.push_back(c(i, j, k));
        return v;
    }

    const Vec& unit() const { return unit_; }
    void set_unit(const Vec& u) {
        if (u.size() != dim_) throw DimensionError("set_unit: length mismatch");
        unit_ = u;
    }

    /// Bilinear extension of the basis products.
    Vec mul(const Vec& a, const Vec& b) const {
        if (a.size() != dim_ || b.size() != dim_)
            throw DimensionError("mul: operand length mismatch");
        Vec r = vec_zero(dim_, field_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (b[j].is_zero()) continue;
                const Scalar ab = a[i] * b[j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    const Scalar& s = c(i, j, k);
                    if (!s.is_zero()) r[k] += ab * s;
                }
            }
        }
        return r;
    }

    Matrix left_mult_matrix(const Vec& a) const {
        Matrix m(dim_, dim_, field_);
        for (std::size_t j = 0; j < dim_; ++j)
            m.set_col(j, mul(a, basis_vec(dim_, j, field_)));
        return m;
    }

    Matrix right_mult_matrix(const Vec& a) const {
        Matrix m(dim_, dim_, field_);
        for (std::size_t j = 0; j < dim_; ++j)
            m.set_col(j, mul(basis_vec(dim_, j, field_), a));
        return m;
    }

    /// The multiplication seen as a linear map A (x) A -> A (n x n^2).
    Matrix mult_map() const {
        Matrix m(dim_, dim_ * dim_, field_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                m.set_col(i * dim_ + j, basis_product(i, j));
        return m;
    }

    bool operator==(const FinDimAlgebra& o) const {
        if (dim_ != o.dim_ || field_ != o.field_) return false;
        if (!vec_eq(unit_, o.unit_)) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }

private:
    std::size_t dim_;
    Field field_;
    std::vector<Scalar> c_;
    Vec unit_;
};

/// Associativity on every basis triple and the two-sided unit axiom on every
/// basis element. All failures are listed, none aborts the sweep.
inline Report check_algebra(const FinDimAlgebra& a, const std::string& subject = "algebra") {
    Report rep;
    rep.subject = subject;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ij = a.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                const Vec lhs = a.mul(ij, basis_vec(n, k, a.field()));
                const Vec rhs = a.mul(basis_vec(n, i, a.field()), a.basis_product(j, k));
                rep.require(vec_eq(lhs, rhs), "associativity", {i, j, k});
            }
        }
    for (std::size_t i = 0; i < n; ++i) {
        const Vec e = basis_vec(n, i, a.field());
        rep.require(vec_eq(a.mul(a.unit(), e), e), "left-unit", {i});
        rep.require(vec_eq(a.mul(e, a.unit()), e), "right-unit", {i});
    }
    return rep;
}

/// Componentwise product on A (x) B with the row-major tensor basis.
inline FinDimAlgebra tensor_algebra(const FinDimAlgebra& a, const FinDimAlgebra& b) {
    if (a.field() != b.field()) throw FieldMismatchError("tensor_algebra: field mismatch");
    const std::size_t na = a.dim(), nb = b.dim();
    FinDimAlgebra t(na * nb, a.field());
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    for (std::size_t p = 0; p < na; ++p) {
                        const Scalar& ca = a.c(i, k, p);
                        if (ca.is_zero()) continue;
                        for (std::size_t q = 0; q < nb; ++q) {
                            const Scalar& cb = b.c(j, l, q);
                            if (!cb.is_zero())
                                t.c(i * nb + j, k * nb + l, p * nb + q) = ca * cb;
                        }
                    }
    t.set_unit(tensor_vec(a.unit(), b.unit()));
    return t;
}

inline FinDimAlgebra opposite(const FinDimAlgebra& a) {
    FinDimAlgebra o(a.dim(), a.field());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            o.set_product(i, j, a.basis_product(j, i));
    o.set_unit(a.unit());
    return o;
}

/// The corner of `parent` at an idempotent p that is a left identity of the
/// whole algebra: the right image parent * p with the induced product, for
/// which p is a genuine two-sided unit.
struct CornerAlgebra {
    FinDimAlgebra alg;   // corner in its own basis
    Subspace space;      // corner basis vectors inside the parent
    Vec idempotent;      // p in parent coordinates
    Vec unit_coords;     // p in corner coordinates

    Vec to_parent(const Vec& corner_coords) const { return space.from_coords(corner_coords); }

    Vec to_corner(const Vec& parent_vec) const {
        auto c = space.coords_of(parent_vec);
        if (!c) throw StructuralError("vector is not inside the corner");
        return *c;
    }

    bool in_corner(const Vec& parent_vec) const { return space.contains(parent_vec); }
};

inline CornerAlgebra corner(const FinDimAlgebra& parent, const Vec& p) {
    const std::size_t n = parent.dim();
    if (p.size() != n) throw DimensionError("corner: idempotent length mismatch");
    if (!vec_eq(parent.mul(p, p), p))
        throw StructuralError("corner: p is not idempotent");
    for (std::size_t i = 0; i < n; ++i) {
        const Vec e = basis_vec(n, i, parent.field());
        if (!vec_eq(parent.mul(p, e), e))
            throw StructuralError("corner: p is not a left identity (fails on basis " +
                                  std::to_string(i) + ")");
    }
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(parent.mul(basis_vec(n, i, parent.field()), p));
    Subspace space = Subspace::span_of(gens, n, parent.field());

    const std::size_t d = space.dim();
    FinDimAlgebra alg(d, parent.field());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vec prod = parent.mul(space.basis_vector(i), space.basis_vector(j));
            auto coords = space.coords_of(prod);
            if (!coords)
                throw StructuralError("corner: product left the corner at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
            alg.set_product(i, j, *coords);
        }
    auto unit_coords = space.coords_of(p);
    if (!unit_coords) throw StructuralError("corner: p is not inside the corner");
    alg.set_unit(*unit_coords);

    // p must act as a two-sided unit on the corner itself.
    for (std::size_t i = 0; i < d; ++i) {
        const Vec e = basis_vec(d, i, parent.field());
        if (!vec_eq(alg.mul(alg.unit(), e), e) || !vec_eq(alg.mul(e, alg.unit()), e))
            throw StructuralError("corner: p is not a two-sided unit of the corner");
    }
    return CornerAlgebra{std::move(alg), std::move(space), p, std::move(*unit_coords)};
}

/// Basis of the space of linear maps F: k^src -> k^dst intertwining two
/// matrix families: F * src_ops[k] = dst_ops[k] * F for every k. This is the
/// common shape of "module maps over a subalgebra": the operators are the
/// (right or left) actions of the subalgebra basis on source and target.
struct HomSpace {
    std::size_t src_dim = 0, dst_dim = 0;
    std::vector<Matrix> basis;
    std::size_t dim() const { return basis.size(); }
};

inline HomSpace commuting_maps(const std::vector<Matrix>& src_ops,
                               const std::vector<Matrix>& dst_ops,
                               std::size_t src_dim, std::size_t dst_dim,
                               const Field& field) {
    if (src_ops.size() != dst_ops.size())
        throw DimensionError("commuting_maps: operator count mismatch");
    const std::size_t unknowns = src_dim * dst_dim;  // F[i][j], flat i*src_dim + j
    Matrix cond(src_ops.size() * unknowns, unknowns, field);
    std::size_t row = 0;
    for (std::size_t k = 0; k < src_ops.size(); ++k) {
        const Matrix& a = src_ops[k];
        const Matrix& b = dst_ops[k];
        if (a.rows() != src_dim || a.cols() != src_dim ||
            b.rows() != dst_dim || b.cols() != dst_dim)
            throw DimensionError("commuting_maps: operator shape mismatch");
        for (std::size_t i = 0; i < dst_dim; ++i)
            for (std::size_t j = 0; j < src_dim; ++j) {
                // entry (i,j) of F*a - b*F
                for (std::size_t l = 0; l < src_dim; ++l)
                    cond.at(row, i * src_dim + l) += a.at(l, j);
                for (std::size_t l = 0; l < dst_dim; ++l)
                    cond.at(row, l * src_dim + j) -= b.at(i, l);
                ++row;
            }
    }
    Subspace ker = kernel_basis(cond);
    HomSpace hs;
    hs.src_dim = src_dim;
    hs.dst_dim = dst_dim;
    for (std::size_t v = 0; v < ker.dim(); ++v) {
        const Vec flat = ker.basis_vector(v);
        Matrix f(dst_dim, src_dim, field);
        for (std::size_t i = 0; i < dst_dim; ++i)
            for (std::size_t j = 0; j < src_dim; ++j) f.at(i, j) = flat[i * src_dim + j];
        hs.basis.push_back(std::move(f));
    }
    return hs;
}

namespace detail {

/// Right multiplication operators of a subalgebra basis acting on the whole
/// algebra. R must be closed under multiplication for the induced operators
/// on R itself (see below) to exist; this version acts on all of A.
inline std::vector<Matrix> right_ops_on_algebra(const FinDimAlgebra& a, const Subspace& r) {
    std::vector<Matrix> ops;
    for (std::size_t k = 0; k < r.dim(); ++k)
        ops.push_back(a.right_mult_matrix(r.basis_vector(k)));
    return ops;
}

/// Right multiplication of the subalgebra on itself, in R's coordinates.
/// Throws when R is not multiplicatively closed.
inline std::vector<Matrix> right_ops_on_subalgebra(const FinDimAlgebra& a, const Subspace& r) {
    std::vector<Matrix> ops;
    for (std::size_t k = 0; k < r.dim(); ++k) {
        Matrix m(r.dim(), r.dim(), a.field());
        for (std::size_t j = 0; j < r.dim(); ++j) {
            const Vec prod = a.mul(r.basis_vector(j), r.basis_vector(k));
            auto coords = r.coords_of(prod);
            if (!coords)
                throw StructuralError("subalgebra is not closed under multiplication");
            m.set_col(j, *coords);
        }
        ops.push_back(std::move(m));
    }
    return ops;
}

} // namespace detail

/// End(A) as right modules over the subalgebra R: all linear self-maps of A
/// commuting with right multiplication by every element of R.
inline HomSpace end_over(const FinDimAlgebra& a, const Subspace& r) {
    const auto ops = detail::right_ops_on_algebra(a, r);
    return commuting_maps(ops, ops, a.dim(), a.dim(), a.field());
}

/// Hom(A, R) as right R-modules; maps are dim(R) x dim(A) matrices with the
/// target written in R's own coordinates.
inline HomSpace hom_into_subalgebra(const FinDimAlgebra& a, const Subspace& r) {
    return commuting_maps(detail::right_ops_on_algebra(a, r),
                          detail::right_ops_on_subalgebra(a, r),
                          a.dim(), r.dim(), a.field());
}

/// Balanced tensor product L (x)_R N presented as an explicit quotient of
/// the full tensor space: the relation span is generated by
/// (l . x) (x) n - l (x) (x . n) over basis elements, and the quotient gets
/// the non-pivot coordinates as its canonical basis, together with a
/// projection (reduce, then read free coordinates) and a section.
class RelativeTensor {
public:
    static RelativeTensor make(std::size_t ldim, std::size_t rdim,
                               const std::vector<Matrix>& right_act_left,
                               const std::vector<Matrix>& left_act_right,
                               const Field& field) {
        if (right_act_left.size() != left_act_right.size())
            throw DimensionError("relative tensor: action count mismatch");
        RelativeTensor t(ldim, rdim, field);
        const std::size_t full = ldim * rdim;
        for (std::size_t k = 0; k < right_act_left.size(); ++k) {
            const Matrix& rho = right_act_left[k];
            const Matrix& lam = left_act_right[k];
            if (rho.rows() != ldim || rho.cols() != ldim ||
                lam.rows() != rdim || lam.cols() != rdim)
                throw DimensionError("relative tensor: action shape mismatch");
            for (std::size_t i = 0; i < ldim; ++i) {
                const Vec li = rho.col(i);
                for (std::size_t j = 0; j < rdim; ++j) {
                    Vec rel = vec_zero(full, field);
                    for (std::size_t a = 0; a < ldim; ++a)
                        if (!li[a].is_zero()) rel[a * rdim + j] += li[a];
                    const Vec rj = lam.col(j);
                    for (std::size_t b = 0; b < rdim; ++b)
                        if (!rj[b].is_zero()) rel[i * rdim + b] -= rj[b];
                    if (!vec_is_zero(rel)) t.relations_.add(std::move(rel));
                }
            }
        }
        t.finish();
        return t;
    }

    std::size_t left_dim() const { return ldim_; }
    std::size_t right_dim() const { return rdim_; }
    std::size_t full_dim() const { return ldim_ * rdim_; }
    std::size_t dim() const { return free_.size(); }
    std::size_t relation_dim() const { return relations_.dim(); }
    const Field& field() const { return field_; }
    const SpanBuilder& relations() const { return relations_; }

    /// Quotient coordinates of an ambient tensor-space vector.
    Vec project(const Vec& full) const {
        const Vec red = relations_.reduce(full);
        Vec q;
        q.reserve(free_.size());
        for (std::size_t idx : free_) q.push_back(red[idx]);
        return q;
    }

    /// Canonical ambient representative of a quotient vector.
    Vec lift(const Vec& q) const {
        if (q.size() != free_.size()) throw DimensionError("lift: length mismatch");
        Vec v = vec_zero(full_dim(), field_);
        for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = q[i];
        return v;
    }

    /// Class of the elementary tensor e_i (x) e_j.
    Vec class_of(std::size_t i, std::size_t j) const {
        Vec v = vec_zero(full_dim(), field_);
        v.at(i * rdim_ + j) = field_.one();
        return project(v);
    }

    /// Descend an ambient-defined linear map (target_rows x full_dim) to the
    /// quotient. Verifies the map kills every relation generator and throws
    /// otherwise: maps that fail to descend signal an engine bug upstream.
    Matrix descend(const Matrix& ambient_map, const std::string& what) const {
        if (ambient_map.cols() != full_dim())
            throw DimensionError("descend: column count mismatch");
        for (std::size_t r = 0; r < relations_.dim(); ++r)
            if (!vec_is_zero(ambient_map.apply(relations_.rows()[r])))
                throw TheoremViolationError(what + " does not descend to the balanced tensor");
        Matrix q(ambient_map.rows(), dim(), field_);
        for (std::size_t j = 0; j < dim(); ++j) {
            Vec amb = vec_zero(full_dim(), field_);
            amb[free_[j]] = field_.one();
            q.set_col(j, ambient_map.apply(amb));
        }
        return q;
    }

private:
    RelativeTensor(std::size_t l, std::size_t r, const Field& f)
        : ldim_(l), rdim_(r), field_(f), relations_(l * r, f) {}

    void finish() {
        std::vector<bool> is_pivot(full_dim(), false);
        for (std::size_t p : relations_.pivots()) is_pivot[p] = true;
        for (std::size_t i = 0; i < full_dim(); ++i)
            if (!is_pivot[i]) free_.push_back(i);
    }

    std::size_t ldim_, rdim_;
    Field field_;
    SpanBuilder relations_;
    std::vector<std::size_t> free_;
};

/// A (x)_R A for a subalgebra R of A, both factors with the regular actions.
inline RelativeTensor tensor_over(const FinDimAlgebra& a, const Subspace& r) {
    std::vector<Matrix> right_acts, left_acts;
    for (std::size_t k = 0; k < r.dim(); ++k) {
        right_acts.push_back(a.right_mult_matrix(r.basis_vector(k)));
        left_acts.push_back(a.left_mult_matrix(r.basis_vector(k)));
    }
    return RelativeTensor::make(a.dim(), a.dim(), right_acts, left_acts, a.field());
}

} // namespace phk
