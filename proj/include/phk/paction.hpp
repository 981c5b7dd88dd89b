#pragma once

/// Partial actions of a Hopf algebra H on an algebra A, given by the linear
/// map H (x) A -> A on basis elements. Axiom checking, invariant
/// subalgebras, the induced partial coaction by the dual, its axioms and
/// coinvariants, and construction from classical partial group actions.
///
/// Axioms, quantified over basis elements (extended bilinearly):
///   PA1  h.(ab) = (h1.a)(h2.b)
///   PA2  1.a = a
///   PA3  h.(k.a) = (h1.1)((h2 k).a)
///   PA4  h.(k.a) = ((h1 k).a)(h2.1)     (the symmetric variant)
/// An action satisfying PA1-PA3 is valid; PA4 in addition makes it
/// symmetric, which is the hypothesis of everything downstream.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "phk/algebra.hpp"
#include "phk/error.hpp"
#include "phk/groups.hpp"
#include "phk/hopf.hpp"
#include "phk/matrix.hpp"
#include "phk/report.hpp"
#include "phk/scalar.hpp"

namespace phk {

class PartialAction {
public:
    PartialAction(HopfAlgebra h, FinDimAlgebra a, Matrix act)
        : h_(std::move(h)), a_(std::move(a)), act_(std::move(act)) {
        if (h_.field() != a_.field() || act_.field() != a_.field())
            throw FieldMismatchError("partial action field mismatch");
        if (act_.rows() != a_.dim() || act_.cols() != h_.dim() * a_.dim())
            throw DimensionError("action matrix must be dim(A) x dim(H)*dim(A)");
    }

    const HopfAlgebra& hopf() const { return h_; }
    const FinDimAlgebra& alg() const { return a_; }
    const Matrix& action_matrix() const { return act_; }
    const Field& field() const { return a_.field(); }

    /// e_h . a for a basis element of H and a vector of A.
    Vec act_basis(std::size_t h_idx, const Vec& a) const {
        const std::size_t na = a_.dim();
        Vec r = vec_zero(na, field());
        for (std::size_t j = 0; j < na; ++j) {
            if (a[j].is_zero()) continue;
            for (std::size_t i = 0; i < na; ++i) {
                const Scalar& m = act_.at(i, h_idx * na + j);
                if (!m.is_zero()) r[i] += m * a[j];
            }
        }
        return r;
    }

    /// Fully bilinear h . a.
    Vec act(const Vec& h, const Vec& a) const {
        Vec r = vec_zero(a_.dim(), field());
        for (std::size_t i = 0; i < h_.dim(); ++i)
            if (!h[i].is_zero()) vec_axpy(r, h[i], act_basis(i, a));
        return r;
    }

    /// The operator a -> e_h . a as a dim(A) x dim(A) matrix.
    Matrix act_op(std::size_t h_idx) const {
        const std::size_t na = a_.dim();
        Matrix m(na, na, field());
        for (std::size_t j = 0; j < na; ++j)
            m.set_col(j, act_basis(h_idx, basis_vec(na, j, field())));
        return m;
    }

    Vec act_on_unit(std::size_t h_idx) const { return act_basis(h_idx, a_.unit()); }

    bool pa_checked() const { return pa_checked_; }
    bool symmetric_checked() const { return symmetric_checked_; }
    void mark_pa_checked() { pa_checked_ = true; }
    void mark_symmetric_checked() { symmetric_checked_ = true; }

private:
    HopfAlgebra h_;
    FinDimAlgebra a_;
    Matrix act_;
    bool pa_checked_ = false;
    bool symmetric_checked_ = false;
};

/// PA1 + PA2 + PA3 on all basis tuples; marks the action on success.
inline Report check_pa(PartialAction& pa) {
    Report rep;
    rep.subject = "partial action axioms";
    const std::size_t nh = pa.hopf().dim(), na = pa.alg().dim();
    const Field& f = pa.field();
    const FinDimAlgebra& A = pa.alg();
    const FinDimAlgebra& H = pa.hopf().algebra();

    for (std::size_t a = 0; a < na; ++a) {
        const Vec ea = basis_vec(na, a, f);
        rep.require(vec_eq(pa.act(pa.hopf().algebra().unit(), ea), ea), "PA2", {a});
    }

    for (std::size_t h = 0; h < nh; ++h) {
        const Vec dh = pa.hopf().comul().col(h);
        for (std::size_t a = 0; a < na; ++a) {
            const Vec ea = basis_vec(na, a, f);
            for (std::size_t b = 0; b < na; ++b) {
                const Vec eb = basis_vec(na, b, f);
                const Vec lhs = pa.act_basis(h, A.basis_product(a, b));
                Vec rhs = vec_zero(na, f);
                for (std::size_t p = 0; p < nh; ++p)
                    for (std::size_t q = 0; q < nh; ++q) {
                        const Scalar& c = dh[p * nh + q];
                        if (c.is_zero()) continue;
                        vec_axpy(rhs, c, A.mul(pa.act_basis(p, ea), pa.act_basis(q, eb)));
                    }
                rep.require(vec_eq(lhs, rhs), "PA1", {h, a, b});
            }
        }
    }

    for (std::size_t h = 0; h < nh; ++h) {
        const Vec dh = pa.hopf().comul().col(h);
        for (std::size_t k = 0; k < nh; ++k)
            for (std::size_t a = 0; a < na; ++a) {
                const Vec ea = basis_vec(na, a, f);
                const Vec lhs = pa.act_basis(h, pa.act_basis(k, ea));
                Vec rhs = vec_zero(na, f);
                for (std::size_t p = 0; p < nh; ++p)
                    for (std::size_t q = 0; q < nh; ++q) {
                        const Scalar& c = dh[p * nh + q];
                        if (c.is_zero()) continue;
                        const Vec inner = pa.act(H.basis_product(q, k), ea);
                        vec_axpy(rhs, c, A.mul(pa.act_on_unit(p), inner));
                    }
                rep.require(vec_eq(lhs, rhs), "PA3", {h, k, a});
            }
    }

    if (rep.ok()) pa.mark_pa_checked();
    return rep;
}

/// PA4 on all triples; marks the action symmetric on success. Callable on
/// its own so that a PA4 violation can be located even when other axioms
/// are broken too.
inline Report check_symmetric(PartialAction& pa) {
    Report rep;
    rep.subject = "symmetry axiom";
    const std::size_t nh = pa.hopf().dim(), na = pa.alg().dim();
    const Field& f = pa.field();
    const FinDimAlgebra& A = pa.alg();
    const FinDimAlgebra& H = pa.hopf().algebra();

    for (std::size_t h = 0; h < nh; ++h) {
        const Vec dh = pa.hopf().comul().col(h);
        for (std::size_t k = 0; k < nh; ++k) {
            for (std::size_t a = 0; a < na; ++a) {
                const Vec ea = basis_vec(na, a, f);
                const Vec lhs = pa.act_basis(h, pa.act_basis(k, ea));
                Vec rhs = vec_zero(na, f);
                for (std::size_t p = 0; p < nh; ++p)
                    for (std::size_t q = 0; q < nh; ++q) {
                        const Scalar& c = dh[p * nh + q];
                        if (c.is_zero()) continue;
                        const Vec inner = pa.act(H.basis_product(p, k), ea);
                        vec_axpy(rhs, c, A.mul(inner, pa.act_on_unit(q)));
                    }
                rep.require(vec_eq(lhs, rhs), "PA4", {h, k, a});
            }
        }
    }

    if (rep.ok() && pa.pa_checked()) pa.mark_symmetric_checked();
    return rep;
}

/// Invariant subalgebra. Left means { a : h.a = a (h.1) for all h }, right
/// uses (h.1) a. The result provably contains 1 and is multiplicatively
/// closed; both facts are re-verified numerically.
inline Subspace invariants(const PartialAction& pa, Side side) {
    if (!pa.pa_checked())
        throw PreconditionError("invariants: action has not passed the axiom check");
    const std::size_t nh = pa.hopf().dim(), na = pa.alg().dim();
    Matrix cond(nh * na, na, pa.field());
    for (std::size_t h = 0; h < nh; ++h) {
        const Vec h1 = pa.act_on_unit(h);
        const Matrix mult = side == Side::left ? pa.alg().right_mult_matrix(h1)
                                               : pa.alg().left_mult_matrix(h1);
        const Matrix diff = pa.act_op(h) - mult;
        for (std::size_t r = 0; r < na; ++r)
            for (std::size_t c = 0; c < na; ++c) cond.at(h * na + r, c) = diff.at(r, c);
    }
    Subspace inv = kernel_basis(cond);
    if (!inv.contains(pa.alg().unit()))
        throw TheoremViolationError("invariants do not contain the unit");
    for (std::size_t i = 0; i < inv.dim(); ++i)
        for (std::size_t j = 0; j < inv.dim(); ++j)
            if (!inv.contains(pa.alg().mul(inv.basis_vector(i), inv.basis_vector(j))))
                throw TheoremViolationError("invariants are not closed under multiplication");
    return inv;
}

/// Partial coaction of a Hopf algebra K on A: the map rho: A -> A (x) K.
class PartialCoaction {
public:
    PartialCoaction(FinDimAlgebra a, HopfAlgebra k, Matrix rho)
        : a_(std::move(a)), k_(std::move(k)), rho_(std::move(rho)) {
        if (rho_.rows() != a_.dim() * k_.dim() || rho_.cols() != a_.dim())
            throw DimensionError("coaction matrix must be dim(A)*dim(K) x dim(A)");
        if (a_.field() != k_.field() || rho_.field() != a_.field())
            throw FieldMismatchError("coaction field mismatch");
    }

    const FinDimAlgebra& alg() const { return a_; }
    const HopfAlgebra& coacting() const { return k_; }
    const Matrix& rho() const { return rho_; }
    const Field& field() const { return a_.field(); }

    Vec rho_of(const Vec& a) const { return rho_.apply(a); }
    Vec rho_of_unit() const { return rho_.apply(a_.unit()); }

private:
    FinDimAlgebra a_;
    HopfAlgebra k_;
    Matrix rho_;
};

namespace detail {

/// Componentwise product on A (x) K (x) K without materializing the full
/// structure-constant tensor; both operands iterated sparsely.
inline Vec mul_triple(const FinDimAlgebra& a, const HopfAlgebra& k,
                      const Vec& x, const Vec& y) {
    const std::size_t na = a.dim(), nk = k.dim();
    const std::size_t full = na * nk * nk;
    if (x.size() != full || y.size() != full)
        throw DimensionError("mul_triple: operand length mismatch");
    Vec r = vec_zero(full, a.field());
    for (std::size_t i = 0; i < full; ++i) {
        if (x[i].is_zero()) continue;
        const std::size_t ia = i / (nk * nk), ik1 = (i / nk) % nk, ik2 = i % nk;
        for (std::size_t j = 0; j < full; ++j) {
            if (y[j].is_zero()) continue;
            const std::size_t ja = j / (nk * nk), jk1 = (j / nk) % nk, jk2 = j % nk;
            const Scalar xy = x[i] * y[j];
            for (std::size_t pa_ = 0; pa_ < na; ++pa_) {
                const Scalar& ca = a.c(ia, ja, pa_);
                if (ca.is_zero()) continue;
                for (std::size_t p1 = 0; p1 < nk; ++p1) {
                    const Scalar& c1 = k.algebra().c(ik1, jk1, p1);
                    if (c1.is_zero()) continue;
                    for (std::size_t p2 = 0; p2 < nk; ++p2) {
                        const Scalar& c2 = k.algebra().c(ik2, jk2, p2);
                        if (!c2.is_zero())
                            r[(pa_ * nk + p1) * nk + p2] += xy * ca * c1 * c2;
                    }
                }
            }
        }
    }
    return r;
}

} // namespace detail

/// The coaction axioms. PCA2 is the coassociation law relative to rho(1)
/// acting from the left, which is what left partial actions induce; PCA4
/// is its right-sided variant and holds exactly in the symmetric case.
inline Report check_pca(const PartialCoaction& co, bool include_symmetric) {
    Report rep;
    rep.subject = "partial coaction axioms";
    const FinDimAlgebra& A = co.alg();
    const HopfAlgebra& K = co.coacting();
    const std::size_t na = A.dim(), nk = K.dim();
    const Field& f = co.field();
    const FinDimAlgebra t = tensor_algebra(A, K.algebra());
    const Vec rho1 = co.rho_of_unit();

    // PCA1: multiplicativity in A (x) K
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const Vec lhs = co.rho_of(A.basis_product(i, j));
            const Vec rhs = t.mul(co.rho().col(i), co.rho().col(j));
            rep.require(vec_eq(lhs, rhs), "PCA1", {i, j});
        }

    // rho(1) (x) 1_K inside A (x) K (x) K, shared by PCA2 and PCA4
    const std::size_t full = na * nk * nk;
    Vec rho1_ext = vec_zero(full, f);
    for (std::size_t i = 0; i < na * nk; ++i) {
        if (rho1[i].is_zero()) continue;
        const std::size_t ia = i / nk, ik = i % nk;
        for (std::size_t u = 0; u < nk; ++u) {
            const Scalar& c = K.algebra().unit()[u];
            if (!c.is_zero()) rho1_ext[(ia * nk + ik) * nk + u] += rho1[i] * c;
        }
    }

    for (std::size_t a = 0; a < na; ++a) {
        const Vec w = co.rho().col(a);

        // (rho (x) id) rho(a)
        Vec lhs = vec_zero(full, f);
        for (std::size_t i = 0; i < na * nk; ++i) {
            if (w[i].is_zero()) continue;
            const std::size_t ib = i / nk, ik = i % nk;
            const Vec rb = co.rho().col(ib);
            for (std::size_t j = 0; j < na * nk; ++j)
                if (!rb[j].is_zero())
                    lhs[j * nk + ik] += w[i] * rb[j];
        }

        // (id (x) Delta_K) rho(a)
        Vec mid = vec_zero(full, f);
        for (std::size_t i = 0; i < na * nk; ++i) {
            if (w[i].is_zero()) continue;
            const std::size_t ib = i / nk, ik = i % nk;
            const Vec dk = K.comul().col(ik);
            for (std::size_t pq = 0; pq < nk * nk; ++pq)
                if (!dk[pq].is_zero())
                    mid[ib * nk * nk + pq] += w[i] * dk[pq];
        }

        const Vec rhs2 = detail::mul_triple(A, K, rho1_ext, mid);
        rep.require(vec_eq(lhs, rhs2), "PCA2", {a});

        // PCA3: (id (x) eps) rho(a) = a
        Vec back = vec_zero(na, f);
        for (std::size_t i = 0; i < na * nk; ++i) {
            if (w[i].is_zero()) continue;
            back[i / nk] += w[i] * K.counit_map().at(0, i % nk);
        }
        rep.require(vec_eq(back, basis_vec(na, a, f)), "PCA3", {a});

        if (include_symmetric) {
            const Vec rhs4 = detail::mul_triple(A, K, mid, rho1_ext);
            rep.require(vec_eq(lhs, rhs4), "PCA4", {a});
        }
    }
    return rep;
}

/// The coaction induced by a checked partial action through the dual basis:
/// rho(a) = sum_i (e_i . a) (x) e^i. The compatibility h.a = a0 a1(h) and
/// the coaction axioms are verified on the way out; failures are theorem
/// violations because they cannot happen for a checked action.
inline PartialCoaction induced_coaction(const PartialAction& pa) {
    if (!pa.pa_checked())
        throw PreconditionError("induced_coaction: action has not passed the axiom check");
    const std::size_t nh = pa.hopf().dim(), na = pa.alg().dim();
    const Field& f = pa.field();
    Matrix rho(na * nh, na, f);
    for (std::size_t a = 0; a < na; ++a) {
        const Vec ea = basis_vec(na, a, f);
        for (std::size_t i = 0; i < nh; ++i) {
            const Vec img = pa.act_basis(i, ea);
            for (std::size_t b = 0; b < na; ++b)
                if (!img[b].is_zero()) rho.at(b * nh + i, a) = img[b];
        }
    }
    PartialCoaction co(pa.alg(), dual_hopf(pa.hopf()), std::move(rho));

    // compatibility: (id (x) eval_h) rho(a) = h.a on basis pairs
    for (std::size_t h = 0; h < nh; ++h)
        for (std::size_t a = 0; a < na; ++a) {
            const Vec w = co.rho().col(a);
            Vec picked = vec_zero(na, f);
            for (std::size_t b = 0; b < na; ++b) picked[b] = w[b * nh + h];
            if (!vec_eq(picked, pa.act_basis(h, basis_vec(na, a, f))))
                throw TheoremViolationError("induced coaction incompatible with the action");
        }

    Report axioms = check_pca(co, pa.symmetric_checked());
    if (!axioms.ok())
        throw TheoremViolationError("induced coaction fails its axioms: " + axioms.summary());
    return co;
}

/// Coinvariants: left means { a : rho(a) = a . rho(1) } with a multiplied
/// into the first leg from the left; right uses rho(1) . a.
inline Subspace coinvariants(const PartialCoaction& co, Side side) {
    const std::size_t na = co.alg().dim(), nk = co.coacting().dim();
    const Field& f = co.field();
    const Vec rho1 = co.rho_of_unit();
    Matrix cond(na * nk, na, f);
    for (std::size_t a = 0; a < na; ++a) {
        const Vec ea = basis_vec(na, a, f);
        const Matrix mult = side == Side::left ? co.alg().left_mult_matrix(ea)
                                               : co.alg().right_mult_matrix(ea);
        // a moved into the first tensor leg
        Vec moved = vec_zero(na * nk, f);
        for (std::size_t i = 0; i < na * nk; ++i) {
            if (rho1[i].is_zero()) continue;
            const std::size_t ib = i / nk, ik = i % nk;
            const Vec prod = mult.col(ib);
            for (std::size_t b = 0; b < na; ++b)
                if (!prod[b].is_zero()) moved[b * nk + ik] += rho1[i] * prod[b];
        }
        const Vec diff = vec_sub(co.rho().col(a), moved);
        for (std::size_t r = 0; r < na * nk; ++r) cond.at(r, a) = diff[r];
    }
    return kernel_basis(cond);
}

/// Data of a classical partial group action: ideals D_g = A 1_g cut out by
/// central idempotents and isomorphisms alpha_g: D_{g^-1} -> D_g, given as
/// matrices on all of A whose restriction to the ideal is the map.
struct GroupPartialActionData {
    GroupTable table;
    FinDimAlgebra algebra;
    std::vector<Vec> idempotents;
    std::vector<Matrix> isos;
};

/// Validates the classical axioms and produces the checked, symmetric
/// partial action of the group algebra: g.a = alpha_g(a 1_{g^-1}).
inline PartialAction from_group_partial_action(const GroupPartialActionData& d) {
    const std::size_t e = validate_group_table(d.table);
    const std::size_t m = d.table.size();
    const FinDimAlgebra& A = d.algebra;
    const std::size_t na = A.dim();
    const Field& f = A.field();
    if (d.idempotents.size() != m || d.isos.size() != m)
        throw StructuralError("group action data: need one idempotent and one map per element");
    for (std::size_t g = 0; g < m; ++g)
        if (d.isos[g].rows() != na || d.isos[g].cols() != na || d.isos[g].field() != f)
            throw StructuralError("alpha_g matrix has wrong shape or field at g=" +
                                  std::to_string(g));

    Report alg_ok = check_algebra(A, "coefficient algebra");
    if (!alg_ok.ok())
        throw StructuralError("group action data: " + alg_ok.summary());

    for (std::size_t g = 0; g < m; ++g) {
        const Vec& u = d.idempotents[g];
        if (u.size() != na) throw StructuralError("idempotent has wrong length");
        if (!vec_eq(A.mul(u, u), u))
            throw StructuralError("1_g is not idempotent at g=" + std::to_string(g));
        for (std::size_t i = 0; i < na; ++i) {
            const Vec ei = basis_vec(na, i, f);
            if (!vec_eq(A.mul(u, ei), A.mul(ei, u)))
                throw StructuralError("1_g is not central at g=" + std::to_string(g));
        }
    }
    if (!vec_eq(d.idempotents[e], A.unit()))
        throw StructuralError("1_e must be the unit of A");
    for (std::size_t i = 0; i < na; ++i) {
        const Vec ei = basis_vec(na, i, f);
        if (!vec_eq(d.isos[e].apply(ei), ei))
            throw StructuralError("alpha_e must restrict to the identity");
    }

    auto inv = [&](std::size_t g) { return group_inverse(d.table, e, g); };
    auto dom = [&](std::size_t g, const Vec& x) { return A.mul(x, d.idempotents[inv(g)]); };
    auto alpha = [&](std::size_t g, const Vec& x) { return d.isos[g].apply(dom(g, x)); };

    for (std::size_t g = 0; g < m; ++g) {
        const Vec& tgt = d.idempotents[g];
        if (!vec_eq(alpha(g, A.unit()), tgt))
            throw StructuralError("alpha_g(1_{g^-1}) != 1_g at g=" + std::to_string(g));
        std::vector<Vec> dom_gens, img_gens, tgt_gens;
        for (std::size_t i = 0; i < na; ++i) {
            const Vec x = dom(g, basis_vec(na, i, f));
            const Vec y = d.isos[g].apply(x);
            if (!vec_eq(A.mul(y, tgt), y))
                throw StructuralError("alpha_g image leaves D_g at g=" + std::to_string(g));
            dom_gens.push_back(x);
            img_gens.push_back(y);
            tgt_gens.push_back(A.mul(basis_vec(na, i, f), tgt));
        }
        const std::size_t dim_dom = Subspace::span_of(dom_gens, na, f).dim();
        const std::size_t dim_img = Subspace::span_of(img_gens, na, f).dim();
        const std::size_t dim_tgt = Subspace::span_of(tgt_gens, na, f).dim();
        if (dim_img != dim_dom || dim_img != dim_tgt)
            throw StructuralError("alpha_g is not bijective between its ideals at g=" +
                                  std::to_string(g));
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j) {
                const Vec x = dom(g, basis_vec(na, i, f));
                const Vec y = dom(g, basis_vec(na, j, f));
                if (!vec_eq(d.isos[g].apply(A.mul(x, y)),
                            A.mul(d.isos[g].apply(x), d.isos[g].apply(y))))
                    throw StructuralError("alpha_g is not multiplicative at g=" +
                                          std::to_string(g));
            }
    }

    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t h = 0; h < m; ++h) {
            const std::size_t gh = d.table[g][h];
            // domain compatibility: alpha_g(1_{g^-1} 1_h) = 1_g 1_{gh}
            if (!vec_eq(alpha(g, d.idempotents[h]),
                        A.mul(d.idempotents[g], d.idempotents[gh])))
                throw StructuralError("ideal compatibility fails at (" + std::to_string(g) +
                                      "," + std::to_string(h) + ")");
            for (std::size_t i = 0; i < na; ++i) {
                const Vec x = basis_vec(na, i, f);
                const Vec lhs = alpha(g, alpha(h, x));
                const Vec rhs = A.mul(alpha(gh, x), d.idempotents[g]);
                if (!vec_eq(lhs, rhs))
                    throw StructuralError("composition rule fails at (" + std::to_string(g) +
                                          "," + std::to_string(h) + ") on basis " +
                                          std::to_string(i));
            }
        }

    HopfAlgebra hopf = group_hopf(d.table, f);
    Matrix act(na, m * na, f);
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t a = 0; a < na; ++a)
            act.set_col(g * na + a, alpha(g, basis_vec(na, a, f)));
    PartialAction pa(std::move(hopf), A, std::move(act));

    Report r1 = check_pa(pa);
    if (!r1.ok())
        throw StructuralError("derived action fails the axioms: " + r1.summary());
    Report r2 = check_symmetric(pa);
    if (!r2.ok())
        throw StructuralError("derived action is not symmetric: " + r2.summary());
    return pa;
}

} // namespace phk
