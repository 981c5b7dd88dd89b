#pragma once

/// Finite dimensional Hopf algebras by structure constants: the underlying
/// algebra plus matrices for comultiplication (n^2 x n, row-major tensor
/// coordinates), counit (1 x n) and antipode (n x n, columns are images of
/// basis vectors). Verification, duals, integrals and the map
/// theta: f -> f(t_1) t_2 built from a normalized integral pair.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phk/algebra.hpp"
#include "phk/error.hpp"
#include "phk/groups.hpp"
#include "phk/matrix.hpp"
#include "phk/report.hpp"
#include "phk/scalar.hpp"

namespace phk {

enum class Side { left, right };

class HopfAlgebra {
public:
    HopfAlgebra(FinDimAlgebra alg, Matrix comul, Matrix counit, Matrix antipode)
        : alg_(std::move(alg)), delta_(std::move(comul)), eps_(std::move(counit)),
          s_(std::move(antipode)) {
        const std::size_t n = alg_.dim();
        if (delta_.rows() != n * n || delta_.cols() != n)
            throw DimensionError("comultiplication must be n^2 x n");
        if (eps_.rows() != 1 || eps_.cols() != n)
            throw DimensionError("counit must be 1 x n");
        if (s_.rows() != n || s_.cols() != n)
            throw DimensionError("antipode must be n x n");
        if (delta_.field() != alg_.field() || eps_.field() != alg_.field() ||
            s_.field() != alg_.field())
            throw FieldMismatchError("hopf data field mismatch");
    }

    std::size_t dim() const { return alg_.dim(); }
    const Field& field() const { return alg_.field(); }
    const FinDimAlgebra& algebra() const { return alg_; }
    const Matrix& comul() const { return delta_; }
    const Matrix& counit_map() const { return eps_; }
    const Matrix& antipode() const { return s_; }

    Vec comul_of(const Vec& h) const { return delta_.apply(h); }
    Scalar counit_of(const Vec& h) const { return eps_.apply(h)[0]; }
    Vec antipode_of(const Vec& h) const { return s_.apply(h); }

    /// Inverse antipode, computed on first use. Singularity is a structural
    /// defect of the input (finite dimensional Hopf antipodes are bijective).
    const Matrix& antipode_inv() const {
        if (!s_inv_) {
            auto inv = inverse(s_);
            if (!inv) throw StructuralError("antipode is not invertible");
            s_inv_ = std::move(*inv);
        }
        return *s_inv_;
    }

    Vec antipode_inv_of(const Vec& h) const { return antipode_inv().apply(h); }

    bool operator==(const HopfAlgebra& o) const {
        return alg_ == o.alg_ && delta_ == o.delta_ && eps_ == o.eps_ && s_ == o.s_;
    }

private:
    FinDimAlgebra alg_;
    Matrix delta_;
    Matrix eps_;
    Matrix s_;
    mutable std::optional<Matrix> s_inv_;
};

/// Full axiom sweep: underlying algebra, coassociativity, counit laws,
/// multiplicativity of comultiplication and counit, both antipode
/// convolution identities, and antipode invertibility.
inline Report check_hopf(const HopfAlgebra& h, const std::string& subject = "hopf") {
    Report rep = check_algebra(h.algebra(), subject);
    const std::size_t n = h.dim();
    const Field& f = h.field();
    const Matrix id = Matrix::identity(n, f);

    const Matrix coassoc_l = kron(h.comul(), id) * h.comul();
    const Matrix coassoc_r = kron(id, h.comul()) * h.comul();
    for (std::size_t j = 0; j < n; ++j)
        rep.require(vec_eq(coassoc_l.col(j), coassoc_r.col(j)), "coassociativity", {j});

    const Matrix cl = kron(h.counit_map(), id) * h.comul();
    const Matrix cr = kron(id, h.counit_map()) * h.comul();
    for (std::size_t j = 0; j < n; ++j) {
        rep.require(vec_eq(cl.col(j), basis_vec(n, j, f)), "counit-left", {j});
        rep.require(vec_eq(cr.col(j), basis_vec(n, j, f)), "counit-right", {j});
    }

    const FinDimAlgebra hh = tensor_algebra(h.algebra(), h.algebra());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec lhs = h.comul_of(h.algebra().basis_product(i, j));
            const Vec rhs = hh.mul(h.comul().col(i), h.comul().col(j));
            rep.require(vec_eq(lhs, rhs), "comul-multiplicative", {i, j});
            rep.require(h.counit_of(h.algebra().basis_product(i, j)) ==
                            h.counit_of(basis_vec(n, i, f)) * h.counit_of(basis_vec(n, j, f)),
                        "counit-multiplicative", {i, j});
        }
    rep.require(vec_eq(h.comul_of(h.algebra().unit()),
                       tensor_vec(h.algebra().unit(), h.algebra().unit())),
                "comul-unital");
    rep.require(h.counit_of(h.algebra().unit()) == f.one(), "counit-unital");

    for (std::size_t j = 0; j < n; ++j) {
        const Vec d = h.comul().col(j);
        Vec conv_l = vec_zero(n, f), conv_r = vec_zero(n, f);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const Scalar& c = d[p * n + q];
                if (c.is_zero()) continue;
                vec_axpy(conv_l, c,
                         h.algebra().mul(h.antipode().col(p), basis_vec(n, q, f)));
                vec_axpy(conv_r, c,
                         h.algebra().mul(basis_vec(n, p, f), h.antipode().col(q)));
            }
        const Vec expect = vec_scale(h.counit_of(basis_vec(n, j, f)), h.algebra().unit());
        rep.require(vec_eq(conv_l, expect), "antipode-left-convolution", {j});
        rep.require(vec_eq(conv_r, expect), "antipode-right-convolution", {j});
    }

    rep.require(inverse(h.antipode()).has_value(), "antipode-invertible");
    return rep;
}

/// Dual Hopf algebra on the dual basis: product is convolution (transpose
/// of comultiplication), unit is the counit, comultiplication is the
/// transpose of multiplication, counit is evaluation at 1, antipode is the
/// transpose of the antipode.
inline HopfAlgebra dual_hopf(const HopfAlgebra& h) {
    const std::size_t n = h.dim();
    const Field& f = h.field();

    FinDimAlgebra alg(n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                alg.c(i, j, k) = h.comul().at(i * n + j, k);
    alg.set_unit(h.counit_map().row(0));

    Matrix delta(n * n, n, f);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                delta.at(i * n + j, k) = h.algebra().c(i, j, k);

    Matrix eps(1, n, f);
    for (std::size_t k = 0; k < n; ++k) eps.at(0, k) = h.algebra().unit()[k];

    return HopfAlgebra(std::move(alg), std::move(delta), std::move(eps),
                       h.antipode().transpose());
}

/// Space of one-sided integrals in H: left means h.t = eps(h) t for all h.
inline Subspace integral_space(const HopfAlgebra& h, Side side) {
    const std::size_t n = h.dim();
    const Field& f = h.field();
    Matrix cond(n * n, n, f);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec e = basis_vec(n, i, f);
        Matrix op = side == Side::left ? h.algebra().left_mult_matrix(e)
                                       : h.algebra().right_mult_matrix(e);
        const Scalar ei = h.counit_of(e);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                cond.at(i * n + r, c) = op.at(r, c);
                if (r == c) cond.at(i * n + r, c) -= ei;
            }
    }
    return kernel_basis(cond);
}

/// A left integral t of H and a right integral T of the dual, scaled so
/// that T(t) = 1, plus sidedness flags. One-dimensionality of both integral
/// spaces and T(t) != 0 are structural requirements.
struct IntegralPair {
    Vec t;        // in H coordinates
    Vec T;        // in dual-basis coordinates, i.e. T = sum T_i e^i
    bool t_also_right = false;
    bool T_also_left = false;

    Scalar eval_T(const Vec& h) const {
        Scalar s = h.empty() ? Scalar() : h[0].field().zero();
        for (std::size_t i = 0; i < h.size(); ++i) s += T[i] * h[i];
        return s;
    }
};

inline IntegralPair normalized_pair(const HopfAlgebra& h) {
    const Subspace il = integral_space(h, Side::left);
    if (il.dim() != 1)
        throw StructuralError("left integral space has dimension " +
                              std::to_string(il.dim()) + ", expected 1");
    const HopfAlgebra dual = dual_hopf(h);
    const Subspace ir_dual = integral_space(dual, Side::right);
    if (ir_dual.dim() != 1)
        throw StructuralError("right integral space of the dual has dimension " +
                              std::to_string(ir_dual.dim()) + ", expected 1");
    IntegralPair pair;
    pair.t = il.basis_vector(0);
    pair.T = ir_dual.basis_vector(0);
    Scalar val = h.field().zero();
    for (std::size_t i = 0; i < h.dim(); ++i) val += pair.T[i] * pair.t[i];
    if (val.is_zero())
        throw StructuralError("the integral pairing T(t) vanishes");
    const Scalar inv = val.inverse();
    for (auto& x : pair.T) x *= inv;
    pair.t_also_right = integral_space(h, Side::right).contains(pair.t);
    pair.T_also_left = integral_space(dual, Side::left).contains(pair.T);
    return pair;
}

/// The five compatibilities between t, T, the antipode and the
/// comultiplication, swept over every basis element h:
///   (1) T(h1) h2 = T(h) 1        (T is a right integral of the dual)
///   (2) h1 T(h2) = T(h) 1        (checked when T is also a left integral)
///   (3) T(S(h) t1) t2 = h
///   (4) t1 (x) h t2 = S(h) t1 (x) t2
///   (5) S'(t1) (x) h t2 = S'(t1) h (x) t2   with S' the inverse antipode
inline Report check_integral_identities(const HopfAlgebra& h, const IntegralPair& pair) {
    Report rep;
    rep.subject = "integral identities";
    const std::size_t n = h.dim();
    const Field& f = h.field();
    const Vec dt = h.comul_of(pair.t);

    for (std::size_t j = 0; j < n; ++j) {
        const Vec e = basis_vec(n, j, f);
        const Vec d = h.comul().col(j);
        const Vec expect = vec_scale(pair.eval_T(e), h.algebra().unit());

        Vec lhs1 = vec_zero(n, f), lhs2 = vec_zero(n, f);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const Scalar& c = d[p * n + q];
                if (c.is_zero()) continue;
                lhs1[q] += c * pair.T[p];
                lhs2[p] += c * pair.T[q];
            }
        rep.require(vec_eq(lhs1, expect), "T-right-averaging", {j});
        if (pair.T_also_left)
            rep.require(vec_eq(lhs2, expect), "T-left-averaging", {j});

        // (3): sum over Delta(t) = t1 (x) t2 of T(S(h) t1) t2
        Vec lhs3 = vec_zero(n, f);
        const Vec sh = h.antipode().col(j);
        for (std::size_t p = 0; p < n; ++p) {
            Vec col_sum = vec_zero(n, f);  // sum_q Delta(t)[p,q] e_q, weighted below
            for (std::size_t q = 0; q < n; ++q) {
                const Scalar& c = dt[p * n + q];
                if (!c.is_zero()) col_sum[q] += c;
            }
            if (vec_is_zero(col_sum)) continue;
            const Scalar w = pair.eval_T(h.algebra().mul(sh, basis_vec(n, p, f)));
            vec_axpy(lhs3, w, col_sum);
        }
        rep.require(vec_eq(lhs3, e), "hit-by-T-recovers-h", {j});

        // (4) and (5) live in H (x) H
        Vec lhs4 = vec_zero(n * n, f), rhs4 = vec_zero(n * n, f);
        Vec lhs5 = vec_zero(n * n, f), rhs5 = vec_zero(n * n, f);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const Scalar& c = dt[p * n + q];
                if (c.is_zero()) continue;
                const Vec ep = basis_vec(n, p, f);
                const Vec eq = basis_vec(n, q, f);
                const Vec heq = h.algebra().mul(e, eq);
                vec_axpy(lhs4, c, tensor_vec(ep, heq));
                vec_axpy(rhs4, c, tensor_vec(h.algebra().mul(sh, ep), eq));
                const Vec sip = h.antipode_inv_of(ep);
                vec_axpy(lhs5, c, tensor_vec(sip, heq));
                vec_axpy(rhs5, c, tensor_vec(h.algebra().mul(sip, e), eq));
            }
        rep.require(vec_eq(lhs4, rhs4), "antipode-shift", {j});
        rep.require(vec_eq(lhs5, rhs5), "inverse-antipode-shift", {j});
    }
    return rep;
}

/// theta: dual -> H, f -> f(t1) t2. Column i is the image of the dual basis
/// vector e^i. Bijectivity is a structural requirement downstream; callers
/// decide whether to throw or report.
inline Matrix theta_map(const HopfAlgebra& h, const IntegralPair& pair) {
    const std::size_t n = h.dim();
    const Field& f = h.field();
    const Vec dt = h.comul_of(pair.t);
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t q = 0; q < n; ++q) m.at(q, i) = dt[i * n + q];
    return m;
}

/// Group algebra Hopf structure: grouplike basis, S(g) = g^{-1}.
inline HopfAlgebra group_hopf(const GroupTable& table, const Field& f) {
    const std::size_t e = validate_group_table(table);
    const std::size_t n = table.size();
    FinDimAlgebra alg = group_algebra(table, f);
    Matrix delta(n * n, n, f);
    Matrix eps(1, n, f);
    Matrix s(n, n, f);
    for (std::size_t j = 0; j < n; ++j) {
        delta.at(j * n + j, j) = f.one();
        eps.at(0, j) = f.one();
        s.at(group_inverse(table, e, j), j) = f.one();
    }
    return HopfAlgebra(std::move(alg), std::move(delta), std::move(eps), std::move(s));
}

} // namespace phk
