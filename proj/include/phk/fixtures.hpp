#pragma once

/// Canonical small algebras used across tests, demos and the bundled
/// example files. Action fixtures are added further down once the partial
/// action machinery is available.

#include <cstddef>

#include "phk/algebra.hpp"
#include "phk/groups.hpp"
#include "phk/hopf.hpp"
#include "phk/paction.hpp"

namespace phk {

/// k x k x ... x k (m factors) with componentwise product.
inline FinDimAlgebra product_field_algebra(std::size_t m, const Field& f) {
    FinDimAlgebra a(m, f);
    for (std::size_t i = 0; i < m; ++i) a.c(i, i, i) = f.one();
    Vec u(m, f.one());
    a.set_unit(u);
    return a;
}

/// Upper triangular 2x2 matrices, basis (e11, e12, e22). The smallest
/// noncommutative unital algebra the engine needs.
inline FinDimAlgebra upper_triangular2(const Field& f) {
    FinDimAlgebra a(3, f);
    // e11*e11 = e11, e11*e12 = e12, e12*e22 = e12, e22*e22 = e22; rest zero
    a.c(0, 0, 0) = f.one();
    a.c(0, 1, 1) = f.one();
    a.c(1, 2, 1) = f.one();
    a.c(2, 2, 2) = f.one();
    Vec u = vec_zero(3, f);
    u[0] = f.one();
    u[2] = f.one();
    a.set_unit(u);
    return a;
}

/// Sweedler's 4-dimensional Hopf algebra, basis (1, g, x, gx) with
/// g^2 = 1, x^2 = 0, x g = -g x, Delta(g) = g (x) g,
/// Delta(x) = x (x) g + 1 (x) x. Not unimodular and its antipode has order
/// 4, which makes it the canonical stress case for sidedness handling and
/// the inverse antipode. Needs characteristic != 2.
inline HopfAlgebra sweedler_hopf(const Field& f) {
    if (!f.is_rational() && f.modulus() == 2)
        throw StructuralError("this structure degenerates in characteristic 2");
    FinDimAlgebra a(4, f);
    const Scalar one = f.one(), neg = f.from_long(-1);
    // rows of the table below: products with basis order (1, g, x, gx)
    a.c(0, 0, 0) = one; a.c(0, 1, 1) = one; a.c(0, 2, 2) = one; a.c(0, 3, 3) = one;
    a.c(1, 0, 1) = one; a.c(1, 1, 0) = one; a.c(1, 2, 3) = one; a.c(1, 3, 2) = one;
    a.c(2, 0, 2) = one; a.c(2, 1, 3) = neg;                      // x*g = -gx
    a.c(3, 0, 3) = one; a.c(3, 1, 2) = neg;                      // gx*g = -x
    a.set_unit(basis_vec(4, 0, f));

    Matrix delta(16, 4, f);
    delta.at(0 * 4 + 0, 0) = one;                    // 1 -> 1 (x) 1
    delta.at(1 * 4 + 1, 1) = one;                    // g -> g (x) g
    delta.at(2 * 4 + 1, 2) = one;                    // x -> x (x) g + 1 (x) x
    delta.at(0 * 4 + 2, 2) = one;
    delta.at(3 * 4 + 0, 3) = one;                    // gx -> gx (x) 1 + g (x) gx
    delta.at(1 * 4 + 3, 3) = one;

    Matrix eps(1, 4, f);
    eps.at(0, 0) = one; eps.at(0, 1) = one;

    Matrix s(4, 4, f);
    s.at(0, 0) = one;      // S(1) = 1
    s.at(1, 1) = one;      // S(g) = g
    s.at(3, 2) = one;      // S(x) = gx
    s.at(2, 3) = neg;      // S(gx) = -x
    return HopfAlgebra(std::move(a), std::move(delta), std::move(eps), std::move(s));
}

/// C2 acting globally on k x k by swapping the factors.
inline GroupPartialActionData fixture_e1_data(const Field& f) {
    FinDimAlgebra a = product_field_algebra(2, f);
    const Vec unit = a.unit();
    Matrix swap(2, 2, f);
    swap.at(0, 1) = f.one();
    swap.at(1, 0) = f.one();
    return GroupPartialActionData{cyclic_table(2), std::move(a),
                                  {unit, unit},
                                  {Matrix::identity(2, f), std::move(swap)}};
}

inline PartialAction fixture_e1(const Field& f) {
    return from_group_partial_action(fixture_e1_data(f));
}

/// C2 acting partially on k with the non-identity element supported on the
/// zero ideal: g.a = 0.
inline GroupPartialActionData fixture_e2_data(const Field& f) {
    FinDimAlgebra a = product_field_algebra(1, f);
    const Vec unit = a.unit();
    return GroupPartialActionData{cyclic_table(2), std::move(a),
                                  {unit, vec_zero(1, f)},
                                  {Matrix::identity(1, f), Matrix(1, 1, f)}};
}

inline PartialAction fixture_e2(const Field& f) {
    return from_group_partial_action(fixture_e2_data(f));
}

/// C2 acting partially on k x k: the non-identity element is the identity
/// of the ideal spanned by the first coordinate, so g.(a,b) = (a,0).
inline GroupPartialActionData fixture_e3_data(const Field& f) {
    FinDimAlgebra a = product_field_algebra(2, f);
    const Vec unit = a.unit();
    Vec u = vec_zero(2, f);
    u[0] = f.one();
    return GroupPartialActionData{cyclic_table(2), std::move(a),
                                  {unit, std::move(u)},
                                  {Matrix::identity(2, f), Matrix::identity(2, f)}};
}

inline PartialAction fixture_e3(const Field& f) {
    return from_group_partial_action(fixture_e3_data(f));
}

/// Left partial action of kC2 on upper triangular 2x2 matrices that fails
/// the symmetry axiom: g.a = e22 a, i.e. the lower-right corner of a. The
/// unit-image g.1 = e22 is an idempotent that is not central, which is
/// exactly what symmetry forbids. Returned unchecked.
inline PartialAction ut2_left_asymmetric(const Field& f) {
    HopfAlgebra h = group_hopf(cyclic_table(2), f);
    FinDimAlgebra a = upper_triangular2(f);
    Matrix act(3, 6, f);
    for (std::size_t j = 0; j < 3; ++j) act.at(j, j) = f.one();
    act.at(2, 3 + 2) = f.one(); // g.e22 = e22; g kills e11 and e12
    return PartialAction(std::move(h), std::move(a), std::move(act));
}

/// The C2 action on k x k from fixture_e3 with the g column on the second
/// basis vector overwritten to g.v = u. This breaks PA1 and PA4 while
/// keeping PA2. Returned unchecked.
inline PartialAction e3_pa4_broken(const Field& f) {
    HopfAlgebra h = group_hopf(cyclic_table(2), f);
    FinDimAlgebra a = product_field_algebra(2, f);
    Matrix act(2, 4, f);
    act.at(0, 0) = f.one();
    act.at(1, 1) = f.one();
    act.at(0, 2) = f.one(); // g.u = u
    act.at(0, 3) = f.one(); // g.v = u instead of 0
    return PartialAction(std::move(h), std::move(a), std::move(act));
}

/// The global action through the counit: h.a = eps(h) a. Always a checked
/// symmetric action; useful as the degenerate reference point.
inline PartialAction trivial_action(const HopfAlgebra& h, const FinDimAlgebra& a) {
    const std::size_t nh = h.dim(), na = a.dim();
    Matrix act(na, nh * na, a.field());
    for (std::size_t i = 0; i < nh; ++i) {
        const Scalar c = h.counit_map().at(0, i);
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < na; ++j) act.at(j, i * na + j) = c;
    }
    PartialAction pa(h, a, std::move(act));
    Report r1 = check_pa(pa);
    Report r2 = check_symmetric(pa);
    if (!r1.ok() || !r2.ok())
        throw TheoremViolationError("counit action failed its axioms");
    return pa;
}

} // namespace phk
