#include <catch2/catch_amalgamated.hpp>

#include "phk/algebra.hpp"
#include "phk/fixtures.hpp"
#include "phk/groups.hpp"

#include "oracle.hpp"

using namespace phk;

TEST_CASE("group algebra from a multiplication table passes the axioms") {
    Field q = Field::rationals();
    for (std::size_t n : {2u, 3u, 4u}) {
        FinDimAlgebra a = group_algebra(cyclic_table(n), q);
        Report r = check_algebra(a);
        INFO(r.summary());
        CHECK(r.ok());
    }
    Report s3 = check_algebra(group_algebra(symmetric_table(3), Field::prime(5)));
    CHECK(s3.ok());
}

TEST_CASE("a rigged product fails the unit axiom on a named element") {
    Field q = Field::rationals();
    FinDimAlgebra a(2, q);
    a.c(0, 0, 0) = q.one();  // e0*e0 = e0, everything else 0
    a.set_unit(basis_vec(2, 0, q));
    Report r = check_algebra(a);
    CHECK(!r.ok());
    bool found = false;
    for (const auto& f : r.failures)
        if (f.check == "left-unit" && f.indices == std::vector<std::size_t>{1}) found = true;
    CHECK(found);
}

TEST_CASE("associativity failures are located") {
    Field q = Field::rationals();
    FinDimAlgebra a = product_field_algebra(2, q);
    a.c(1, 1, 0) = q.one();  // perturb e1*e1
    Report r = check_algebra(a);
    CHECK(!r.ok());
    CHECK(r.failed("associativity"));
}

TEST_CASE("tensor algebra of k x k with a group algebra") {
    Field q = Field::rationals();
    FinDimAlgebra a = product_field_algebra(2, q);
    FinDimAlgebra h = group_algebra(cyclic_table(2), q);
    FinDimAlgebra t = tensor_algebra(a, h);
    CHECK(t.dim() == 4);
    CHECK(vec_eq(t.unit(), tensor_vec(a.unit(), h.unit())));
    CHECK(check_algebra(t).ok());
    // componentwise product on elementary tensors
    Vec x = tensor_vec(basis_vec(2, 0, q), basis_vec(2, 1, q));
    Vec y = tensor_vec(basis_vec(2, 0, q), basis_vec(2, 1, q));
    Vec expect = tensor_vec(basis_vec(2, 0, q), basis_vec(2, 0, q));
    CHECK(vec_eq(t.mul(x, y), expect));
}

TEST_CASE("opposite algebra: commutative fixed, triangular moved") {
    Field q = Field::rationals();
    FinDimAlgebra a = product_field_algebra(3, q);
    CHECK(opposite(a) == a);
    FinDimAlgebra u = upper_triangular2(q);
    CHECK(check_algebra(u).ok());
    FinDimAlgebra uop = opposite(u);
    CHECK(check_algebra(uop).ok());
    CHECK(!(uop == u));
    CHECK(opposite(uop) == u);
}

TEST_CASE("corner at a left-identity idempotent") {
    Field q = Field::rationals();
    // In k x k the unit is a left identity; corner at (1,0) is the first factor.
    FinDimAlgebra a = product_field_algebra(2, q);
    Vec p = {q.one(), q.zero()};
    // (1,0) is idempotent but not a left identity of k x k, so this must throw.
    CHECK_THROWS_AS(corner(a, p), StructuralError);
    CornerAlgebra full = corner(a, a.unit());
    CHECK(full.alg.dim() == 2);
    CHECK(check_algebra(full.alg).ok());

    // Non-idempotent rejected.
    Vec bad = {q.from_long(2), q.zero()};
    CHECK_THROWS_AS(corner(a, bad), StructuralError);
}

TEST_CASE("hom spaces over a subalgebra") {
    Field q = Field::rationals();
    FinDimAlgebra a = product_field_algebra(2, q);

    // Over R = A itself, right-module endomorphisms are left multiplications:
    // for k x k that space is 2 dimensional.
    Subspace whole = Subspace::full(2, q);
    HomSpace end_full = end_over(a, whole);
    CHECK(end_full.dim() == 2);

    // Over the diagonal line k.1 every linear map qualifies.
    Subspace diag = Subspace::span_of({a.unit()}, 2, q);
    HomSpace end_diag = end_over(a, diag);
    CHECK(end_diag.dim() == 4);

    // Maps into the subalgebra R = k.1 over R: all linear maps A -> R, dim 2.
    HomSpace into = hom_into_subalgebra(a, diag);
    CHECK(into.dim() == 2);
    for (const auto& f : into.basis) {
        CHECK(f.rows() == 1);
        CHECK(f.cols() == 2);
    }
}

TEST_CASE("module-map solutions actually intertwine") {
    Field f5 = Field::prime(5);
    FinDimAlgebra u = upper_triangular2(f5);
    Subspace whole = Subspace::full(3, f5);
    HomSpace end_u = end_over(u, whole);
    // End of the regular right module is left multiplication by the algebra.
    CHECK(end_u.dim() == 3);
    for (const auto& f : end_u.basis)
        for (std::size_t k = 0; k < 3; ++k) {
            Matrix rk = u.right_mult_matrix(basis_vec(3, k, f5));
            CHECK(f * rk == rk * f);
        }
}

TEST_CASE("balanced tensor over the scalars is the full tensor square") {
    Field q = Field::rationals();
    FinDimAlgebra a = product_field_algebra(2, q);
    Subspace scalars = Subspace::span_of({a.unit()}, 2, q);
    RelativeTensor t = tensor_over(a, scalars);
    CHECK(t.full_dim() == 4);
    CHECK(t.relation_dim() == 0);
    CHECK(t.dim() == 4);
}

TEST_CASE("balanced tensor of k x k over itself collapses to dimension 2") {
    Field q = Field::rationals();
    FinDimAlgebra a = product_field_algebra(2, q);
    Subspace whole = Subspace::full(2, q);
    RelativeTensor t = tensor_over(a, whole);
    CHECK(t.dim() == 2);
    // cross terms die: u (x) v = u.v (x) 1-part reasoning makes uv = 0
    Vec uv = vec_zero(4, q);
    uv[0 * 2 + 1] = q.one();  // u (x) v
    CHECK(vec_is_zero(t.project(uv)));
    // diagonal classes survive and are independent
    CHECK(!vec_is_zero(t.class_of(0, 0)));
    CHECK(!vec_is_zero(t.class_of(1, 1)));
    CHECK(!vec_eq(t.class_of(0, 0), t.class_of(1, 1)));
    // oracle cross-check of the relation rank
    std::vector<Vec> rel_rows = t.relations().rows();
    CHECK(oracle::naive_rank(rel_rows, q) == 2);
}

TEST_CASE("projection and section of a balanced tensor compose to identity") {
    Field q = Field::rationals();
    FinDimAlgebra a = product_field_algebra(3, q);
    Subspace diag = Subspace::span_of({a.unit()}, 3, q);
    Subspace whole = Subspace::full(3, q);
    for (const Subspace& r : {diag, whole}) {
        RelativeTensor t = tensor_over(a, r);
        for (std::size_t i = 0; i < t.dim(); ++i) {
            Vec qv = basis_vec(t.dim(), i, q);
            CHECK(vec_eq(t.project(t.lift(qv)), qv));
        }
        for (std::size_t r2 = 0; r2 < t.relations().dim(); ++r2)
            CHECK(vec_is_zero(t.project(t.relations().rows()[r2])));
    }
}

TEST_CASE("descend rejects unbalanced maps and accepts balanced ones") {
    Field q = Field::rationals();
    FinDimAlgebra a = product_field_algebra(2, q);
    Subspace whole = Subspace::full(2, q);
    RelativeTensor t = tensor_over(a, whole);
    // multiplication map a (x) b -> ab is balanced over A
    Matrix mult = a.mult_map();
    Matrix desc = t.descend(mult, "multiplication");
    CHECK(desc.rows() == 2);
    CHECK(desc.cols() == t.dim());
    // the map a (x) b -> a (first projection) is not balanced
    Matrix first(2, 4, q);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) first.at(i, i * 2 + j) = q.one();
    CHECK_THROWS_AS(t.descend(first, "first projection"), TheoremViolationError);
}
