#pragma once

/// The smash product A # H of a checked partial action, its unital corner
/// A #_ H = (A # H)(1 # 1), the fixed part under the diagonal conditions,
/// and the Frobenius data (phi, e) built from a normalized integral pair.
///
/// Basis convention: a # h has flat index a_idx * dim(H) + h_idx.
/// The product is (a # h)(b # g) = a (h1 . b) # h2 g; the element 1 # 1 is
/// always a left identity and is two-sided exactly for global actions.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "phk/algebra.hpp"
#include "phk/error.hpp"
#include "phk/hopf.hpp"
#include "phk/matrix.hpp"
#include "phk/paction.hpp"
#include "phk/report.hpp"
#include "phk/scalar.hpp"

namespace phk {

struct SmashProduct {
    PartialAction action;
    FinDimAlgebra alg;
    bool unit_two_sided;

    std::size_t na() const { return action.alg().dim(); }
    std::size_t nh() const { return action.hopf().dim(); }
    std::size_t index(std::size_t a, std::size_t h) const { return a * nh() + h; }

    /// a # 1_H as an ambient vector.
    Vec embed_a(const Vec& a) const {
        return tensor_vec(a, action.hopf().algebra().unit());
    }

    /// 1_A # h as an ambient vector.
    Vec embed_h(const Vec& h) const {
        return tensor_vec(action.alg().unit(), h);
    }
};

/// Builds A # H and proves it associative with 1 # 1 a left identity. Those
/// two facts follow from the axioms, so failure is a theorem violation.
inline SmashProduct smash(const PartialAction& pa) {
    if (!pa.pa_checked())
        throw PreconditionError("smash: action has not passed the axiom check");
    const std::size_t na = pa.alg().dim(), nh = pa.hopf().dim();
    const std::size_t n = na * nh;
    const Field& f = pa.field();
    const FinDimAlgebra& A = pa.alg();
    const FinDimAlgebra& H = pa.hopf().algebra();

    FinDimAlgebra s(n, f);
    for (std::size_t i = 0; i < na; ++i) {
        const Vec ei = basis_vec(na, i, f);
        for (std::size_t h = 0; h < nh; ++h) {
            const Vec dh = pa.hopf().comul().col(h);
            for (std::size_t j = 0; j < na; ++j) {
                const Vec ej = basis_vec(na, j, f);
                for (std::size_t g = 0; g < nh; ++g) {
                    Vec prod = vec_zero(n, f);
                    for (std::size_t p = 0; p < nh; ++p)
                        for (std::size_t q = 0; q < nh; ++q) {
                            const Scalar& c = dh[p * nh + q];
                            if (c.is_zero()) continue;
                            const Vec left = A.mul(ei, pa.act_basis(p, ej));
                            const Vec right = H.basis_product(q, g);
                            for (std::size_t x = 0; x < na; ++x) {
                                if (left[x].is_zero()) continue;
                                for (std::size_t y = 0; y < nh; ++y)
                                    if (!right[y].is_zero())
                                        prod[x * nh + y] += c * left[x] * right[y];
                            }
                        }
                    s.set_product(i * nh + h, j * nh + g, std::move(prod));
                }
            }
        }
    }
    s.set_unit(tensor_vec(A.unit(), H.unit()));

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const Vec lhs = s.mul(s.basis_product(x, y), basis_vec(n, z, f));
                const Vec rhs = s.mul(basis_vec(n, x, f), s.basis_product(y, z));
                if (!vec_eq(lhs, rhs))
                    throw TheoremViolationError(
                        "smash product is not associative at (" + std::to_string(x) + "," +
                        std::to_string(y) + "," + std::to_string(z) + ")");
            }
    bool two_sided = true;
    for (std::size_t x = 0; x < n; ++x) {
        const Vec ex = basis_vec(n, x, f);
        if (!vec_eq(s.mul(s.unit(), ex), ex))
            throw TheoremViolationError("1 # 1 is not a left identity of the smash product");
        if (!vec_eq(s.mul(ex, s.unit()), ex)) two_sided = false;
    }
    return SmashProduct{pa, std::move(s), two_sided};
}

/// The unital corner (A # H)(1 # 1) together with the two canonical maps
/// into it: iota(a) = a # 1 and h -> (1 # h)(1 # 1), both in corner
/// coordinates.
struct PartialSmash {
    SmashProduct ambient;
    CornerAlgebra corner;
    Matrix iota;      // dim(corner) x dim(A)
    Matrix one_sharp; // dim(corner) x dim(H)

    const Field& field() const { return ambient.action.field(); }
    std::size_t dim() const { return corner.alg.dim(); }

    Vec iota_of(const Vec& a) const { return iota.apply(a); }
    Vec one_sharp_of(const Vec& h) const { return one_sharp.apply(h); }
    Vec mul(const Vec& x, const Vec& y) const { return corner.alg.mul(x, y); }
    Vec unit() const { return corner.alg.unit(); }
};

inline PartialSmash partial_smash(const SmashProduct& s) {
    const std::size_t na = s.na(), nh = s.nh();
    const Field& f = s.alg.field();
    CornerAlgebra c = corner(s.alg, s.alg.unit());

    Matrix iota(c.alg.dim(), na, f);
    for (std::size_t j = 0; j < na; ++j)
        iota.set_col(j, c.to_corner(s.embed_a(basis_vec(na, j, f))));
    Matrix one_sharp(c.alg.dim(), nh, f);
    for (std::size_t h = 0; h < nh; ++h) {
        const Vec amb = s.alg.mul(s.embed_h(basis_vec(nh, h, f)), s.alg.unit());
        one_sharp.set_col(h, c.to_corner(amb));
    }

    // iota is a unital algebra embedding; failure would be a theorem violation
    if (!vec_eq(iota.apply(s.action.alg().unit()), c.alg.unit()))
        throw TheoremViolationError("iota does not send 1 to the corner unit");
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const Vec lhs = iota.apply(s.action.alg().basis_product(i, j));
            const Vec rhs = c.alg.mul(iota.col(i), iota.col(j));
            if (!vec_eq(lhs, rhs))
                throw TheoremViolationError("iota is not multiplicative at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    if (rank(iota) != na)
        throw TheoremViolationError("iota is not injective");

    return PartialSmash{s, std::move(c), std::move(iota), std::move(one_sharp)};
}

/// Fixed part of the corner: elements x with (1 # h) x = ((h.1) # 1) x for
/// every h, the products taken in the ambient smash. Also reports the
/// dimension of the same condition applied to the whole ambient algebra.
/// For symmetric actions the fixed part equals (1 #_ t)(A #_ 1) for a left
/// integral t; that equality is verified here.
struct FixedPart {
    Subspace in_corner;
    std::size_t ambient_dim;
};

inline FixedPart fixed_part(const PartialSmash& ps, const IntegralPair& pair) {
    const SmashProduct& s = ps.ambient;
    const std::size_t n = s.alg.dim(), nh = s.nh(), nc = ps.dim();
    const Field& f = ps.field();

    std::vector<Matrix> diffs;
    for (std::size_t h = 0; h < nh; ++h) {
        const Vec lh = s.embed_h(basis_vec(nh, h, f));
        const Vec rh = s.embed_a(s.action.act_on_unit(h));
        diffs.push_back(s.alg.left_mult_matrix(lh) - s.alg.left_mult_matrix(rh));
    }

    Matrix amb_cond(nh * n, n, f);
    for (std::size_t h = 0; h < nh; ++h)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t ccol = 0; ccol < n; ++ccol)
                amb_cond.at(h * n + r, ccol) = diffs[h].at(r, ccol);
    const std::size_t ambient_dim = kernel_basis(amb_cond).dim();

    Matrix embed(n, nc, f);
    for (std::size_t j = 0; j < nc; ++j)
        embed.set_col(j, ps.corner.to_parent(basis_vec(nc, j, f)));
    Matrix cond(nh * n, nc, f);
    for (std::size_t h = 0; h < nh; ++h) {
        const Matrix block = diffs[h] * embed;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t ccol = 0; ccol < nc; ++ccol)
                cond.at(h * n + r, ccol) = block.at(r, ccol);
    }
    Subspace fixed = kernel_basis(cond);

    if (s.action.symmetric_checked()) {
        const Vec one_t = ps.one_sharp_of(pair.t);
        std::vector<Vec> gens;
        for (std::size_t j = 0; j < s.na(); ++j)
            gens.push_back(ps.mul(one_t, ps.iota.col(j)));
        Subspace generated = Subspace::span_of(gens, nc, f);
        if (!(generated == fixed))
            throw TheoremViolationError(
                "fixed part of the corner is not generated by (1 #_ t)(A #_ 1): " +
                std::to_string(generated.dim()) + " vs " + std::to_string(fixed.dim()));
    }
    return FixedPart{std::move(fixed), ambient_dim};
}

/// Frobenius data of the corner over A: the map phi(a #_ h) = a T(h) and
/// the element e = (1 #_ t1) (x)_A (1 #_ S(t2)), stored in reduced
/// coordinates of corner (x)_A corner. The side of the antipode is tied to
/// the side of T: T is a right integral of the dual, and contracting e
/// against phi then reduces to the averaging identities that hold for
/// right integrals. (The mirrored element t2 (x) S^{-1}(t1) pairs with a
/// LEFT integral of the dual instead; with a right T it contracts to a
/// grouplike, not to 1, as the four-dimensional small Hopf algebra shows.)
struct FrobeniusSystem {
    Matrix phi; // dim(A) x dim(corner)
    RelativeTensor tensor;
    Vec e_reduced;
};

inline FrobeniusSystem frobenius_system(const PartialSmash& ps, const IntegralPair& pair,
                                        bool enforce_symmetry = true) {
    const SmashProduct& s = ps.ambient;
    if (!s.action.pa_checked())
        throw PreconditionError("frobenius_system: action has not passed the axiom check");
    if (enforce_symmetry && !s.action.symmetric_checked())
        throw PreconditionError("frobenius_system: action is not checked symmetric");
    const std::size_t na = s.na(), nh = s.nh(), nc = ps.dim();
    const Field& f = ps.field();

    Matrix phi(na, nc, f);
    for (std::size_t j = 0; j < nc; ++j) {
        const Vec amb = ps.corner.to_parent(basis_vec(nc, j, f));
        Vec col = vec_zero(na, f);
        for (std::size_t x = 0; x < na * nh; ++x) {
            if (amb[x].is_zero()) continue;
            const Scalar w = amb[x] * pair.T[x % nh];
            if (!w.is_zero()) col[x / nh] += w;
        }
        phi.set_col(j, col);
    }

    std::vector<Matrix> right_on_left, left_on_right;
    for (std::size_t k = 0; k < na; ++k) {
        right_on_left.push_back(ps.corner.alg.right_mult_matrix(ps.iota.col(k)));
        left_on_right.push_back(ps.corner.alg.left_mult_matrix(ps.iota.col(k)));
    }
    RelativeTensor tensor =
        RelativeTensor::make(nc, nc, right_on_left, left_on_right, f);

    const Vec dt = ps.ambient.action.hopf().comul().apply(pair.t);
    const Matrix& anti = ps.ambient.action.hopf().antipode();
    Vec e_full = vec_zero(nc * nc, f);
    for (std::size_t p = 0; p < nh; ++p)
        for (std::size_t q = 0; q < nh; ++q) {
            const Scalar& c = dt[p * nh + q];
            if (c.is_zero()) continue;
            const Vec leg1 = ps.one_sharp.col(p);
            const Vec leg2 = ps.one_sharp_of(anti.col(q));
            for (std::size_t x = 0; x < nc; ++x) {
                if (leg1[x].is_zero()) continue;
                for (std::size_t y = 0; y < nc; ++y)
                    if (!leg2[y].is_zero()) e_full[x * nc + y] += c * leg1[x] * leg2[y];
            }
        }
    Vec e_reduced = tensor.project(e_full);

    return FrobeniusSystem{std::move(phi), std::move(tensor), std::move(e_reduced)};
}

namespace detail {

/// Multiplies the chosen leg of a full tensor vector on corner (x) corner
/// by a fixed corner element.
inline Vec leg_mul(const PartialSmash& ps, const Vec& full, const Vec& by, bool left_leg,
                   bool from_left) {
    const std::size_t nc = ps.dim();
    Vec out = vec_zero(nc * nc, ps.field());
    for (std::size_t x = 0; x < nc; ++x)
        for (std::size_t y = 0; y < nc; ++y) {
            const Scalar& c = full[x * nc + y];
            if (c.is_zero()) continue;
            const Vec base = basis_vec(nc, left_leg ? x : y, ps.field());
            const Vec prod = from_left ? ps.mul(by, base) : ps.mul(base, by);
            for (std::size_t z = 0; z < nc; ++z) {
                if (prod[z].is_zero()) continue;
                if (left_leg)
                    out[z * nc + y] += c * prod[z];
                else
                    out[x * nc + z] += c * prod[z];
            }
        }
    return out;
}

} // namespace detail

/// The Frobenius identities: e commutes with every corner element in
/// corner (x)_A corner, phi is an A-bimodule map, and contracting e with
/// phi on either leg gives back 1 #_ 1.
inline Report verify_frobenius(const PartialSmash& ps, const FrobeniusSystem& fro) {
    Report rep;
    rep.subject = "frobenius system";
    const std::size_t na = ps.ambient.na(), nc = ps.dim();
    const Field& f = ps.field();
    const Vec e_full = fro.tensor.lift(fro.e_reduced);

    for (std::size_t sidx = 0; sidx < nc; ++sidx) {
        const Vec es = basis_vec(nc, sidx, f);
        const Vec se = fro.tensor.project(detail::leg_mul(ps, e_full, es, true, true));
        const Vec se2 = fro.tensor.project(detail::leg_mul(ps, e_full, es, false, false));
        rep.require(vec_eq(se, se2), "e-centrality", {sidx});
    }

    for (std::size_t k = 0; k < na; ++k) {
        const Vec ik = ps.iota.col(k);
        const Vec ek = basis_vec(na, k, f);
        for (std::size_t j = 0; j < nc; ++j) {
            const Vec ej = basis_vec(nc, j, f);
            rep.require(vec_eq(fro.phi.apply(ps.mul(ik, ej)),
                               ps.ambient.action.alg().mul(ek, fro.phi.col(j))),
                        "phi-left-module", {k, j});
            rep.require(vec_eq(fro.phi.apply(ps.mul(ej, ik)),
                               ps.ambient.action.alg().mul(fro.phi.col(j), ek)),
                        "phi-right-module", {k, j});
        }
    }

    Vec left_contract = vec_zero(nc, f), right_contract = vec_zero(nc, f);
    for (std::size_t x = 0; x < nc; ++x)
        for (std::size_t y = 0; y < nc; ++y) {
            const Scalar& c = e_full[x * nc + y];
            if (c.is_zero()) continue;
            vec_axpy(left_contract, c,
                     ps.mul(ps.iota_of(fro.phi.col(x)), basis_vec(nc, y, f)));
            vec_axpy(right_contract, c,
                     ps.mul(basis_vec(nc, x, f), ps.iota_of(fro.phi.col(y))));
        }
    rep.require(vec_eq(left_contract, ps.unit()), "phi-counit-left");
    rep.require(vec_eq(right_contract, ps.unit()), "phi-counit-right");
    return rep;
}

/// The mutually inverse maps alpha(a) = (1 #_ t) iota(a) and beta = phi
/// between A and the fixed part.
struct AlphaBeta {
    Matrix alpha; // dim(corner) x dim(A)
    Matrix beta;  // dim(A) x dim(corner)
};

inline AlphaBeta alpha_beta(const PartialSmash& ps, const IntegralPair& pair,
                            const FrobeniusSystem& fro) {
    const std::size_t na = ps.ambient.na();
    Matrix alpha(ps.dim(), na, ps.field());
    const Vec one_t = ps.one_sharp_of(pair.t);
    for (std::size_t j = 0; j < na; ++j)
        alpha.set_col(j, ps.mul(one_t, ps.iota.col(j)));
    return AlphaBeta{std::move(alpha), fro.phi};
}

/// beta alpha = id on A, alpha beta = id on the fixed part, the image of
/// alpha is exactly the fixed part, and alpha is left-linear over the
/// invariants.
inline Report check_alpha_beta(const PartialSmash& ps, const AlphaBeta& ab,
                               const FixedPart& fp, const Subspace& inv) {
    Report rep;
    rep.subject = "projection pair";
    const std::size_t na = ps.ambient.na();
    const Field& f = ps.field();

    const Matrix composite = ab.beta * ab.alpha;
    rep.require(composite == Matrix::identity(na, f), "beta-alpha-identity");

    for (std::size_t j = 0; j < fp.in_corner.dim(); ++j) {
        const Vec xi = fp.in_corner.basis_vector(j);
        rep.require(vec_eq(ab.alpha.apply(ab.beta.apply(xi)), xi), "alpha-beta-on-fixed",
                    {j});
    }

    std::vector<Vec> cols;
    for (std::size_t j = 0; j < na; ++j) cols.push_back(ab.alpha.col(j));
    rep.require(Subspace::span_of(cols, ps.dim(), f) == fp.in_corner, "alpha-image-is-fixed");

    for (std::size_t l = 0; l < inv.dim(); ++l) {
        const Vec lam = inv.basis_vector(l);
        const Vec ilam = ps.iota_of(lam);
        for (std::size_t j = 0; j < na; ++j) {
            const Vec lhs = ab.alpha.apply(
                ps.ambient.action.alg().mul(lam, basis_vec(na, j, f)));
            const Vec rhs = ps.mul(ilam, ab.alpha.col(j));
            rep.require(vec_eq(lhs, rhs), "alpha-invariant-linear", {l, j});
        }
    }
    return rep;
}

} // namespace phk
