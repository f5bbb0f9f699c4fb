#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hta/algebra.hpp"
#include "hta/errors.hpp"
#include "test_support.hpp"

using namespace hta;
using hta::testing::Rng;

namespace {

// Independent summation oracle for the trilinear extension: plain
// triple sum over all index combinations, no zero-skipping, written
// without reference to eval_ternary.
Vec ternary_sum_oracle(const TernaryTable& t, const Vec& z, const Vec& x, const Vec& y) {
    Vec acc(t.dim());
    for (size_t p = 0; p < t.dim(); ++p)
        for (size_t i = 0; i < t.dim(); ++i)
            for (size_t j = 0; j < t.dim(); ++j) {
                Rational coeff = z[p] * x[i] * y[j];
                for (size_t m = 0; m < t.dim(); ++m) acc[m] += coeff * t.at(p, i, j)[m];
            }
    return acc;
}

}  // namespace

TEST_CASE("make_algebra validates skew-symmetry") {
    Algebra zero = zero_algebra(2);
    CHECK(zero.dot.is_zero());
    CHECK(zero.star.is_zero());
    CHECK(zero.triple.is_zero());

    // u.v = u
    BinaryTable dot(2);
    dot.set_raw(0, 1, Vec{1, 0});
    dot.set_raw(1, 0, Vec{-1, 0});
    Algebra alg = make_algebra(2, dot, BinaryTable(2), TernaryTable(2));
    CHECK(eval_binary(alg.dot, Vec::basis(2, 0), Vec::basis(2, 1)) == Vec{1, 0});

    BinaryTable bad(2);
    bad.set_raw(0, 1, Vec{1, 0});
    bad.set_raw(1, 0, Vec{1, 0});
    CHECK_THROWS_AS(make_algebra(2, bad, BinaryTable(2), TernaryTable(2)), SkewViolation);

    BinaryTable diag(2);
    diag.set_raw(0, 0, Vec{1, 0});
    CHECK_THROWS_AS(make_algebra(2, diag, BinaryTable(2), TernaryTable(2)), SkewViolation);

    CHECK_THROWS_AS(make_algebra(3, BinaryTable(2), BinaryTable(3), TernaryTable(3)),
                    DimensionMismatch);
}

TEST_CASE("eval_binary basics") {
    BinaryTable t(2);
    t.set(0, 1, Vec{1, 1});  // u.v = u+v
    Vec u = Vec::basis(2, 0), v = Vec::basis(2, 1);
    CHECK(eval_binary(t, u, v) == Vec{1, 1});
    CHECK(eval_binary(t, v, u) == Vec{-1, -1});
    CHECK(eval_binary(t, u, u).is_zero());

    BinaryTable t2(2);
    t2.set(0, 1, Vec{1, 0});  // u.v = u
    CHECK(eval_binary(t2, Rational(2) * u, Rational(3) * v) == Vec{6, 0});
}

TEST_CASE("eval_binary is bilinear on random inputs") {
    Rng rng(7);
    BinaryTable t(2);
    t.set(0, 1, hta::testing::random_vec(rng, 2));
    for (int it = 0; it < 50; ++it) {
        Vec x = hta::testing::random_vec(rng, 2);
        Vec x2 = hta::testing::random_vec(rng, 2);
        Vec y = hta::testing::random_vec(rng, 2);
        Rational al = hta::testing::random_rational(rng);
        Rational be = hta::testing::random_rational(rng);
        Vec lhs = eval_binary(t, al * x + be * x2, y);
        Vec rhs = al * eval_binary(t, x, y) + be * eval_binary(t, x2, y);
        CHECK(lhs == rhs);
        CHECK(eval_binary(t, y, y).is_zero());
    }
}

TEST_CASE("eval_ternary basics and oracle") {
    // <v;u,v> = k u with k = 5
    TernaryTable t(2);
    t.set(1, 0, 1, Vec{5, 0});
    Vec u = Vec::basis(2, 0), v = Vec::basis(2, 1);
    CHECK(eval_ternary(t, v, u, v) == Vec{5, 0});
    CHECK(eval_ternary(t, v, u, u).is_zero());

    // type (I) shape with e=1, f=0, k=0, l=-1; evaluate at z=u+v.
    TernaryTable ti(2);
    ti.set(0, 0, 1, Vec{1, 0});
    ti.set(1, 0, 1, Vec{0, -1});
    Vec z = u + v;
    Vec got = eval_ternary(ti, z, u, v);
    CHECK(got == Vec{1, -1});
    CHECK(got == ternary_sum_oracle(ti, z, u, v));

    Rng rng(11);
    for (int it = 0; it < 50; ++it) {
        Vec a = hta::testing::random_vec(rng, 2);
        Vec b = hta::testing::random_vec(rng, 2);
        Vec c = hta::testing::random_vec(rng, 2);
        CHECK(eval_ternary(ti, a, b, c) == ternary_sum_oracle(ti, a, b, c));
        CHECK(eval_ternary(ti, a, b, b).is_zero());
    }
}

TEST_CASE("constants2d round-trips and examples") {
    CHECK(constants2d(zero_algebra(2)) == Constants2D{});

    // "ref3-example": u.v = u, u*v = v, <u;u,v> = 0, <v;u,v> = -u
    Constants2D ref3{1, 0, 0, 1, 0, 0, -1, 0};
    Algebra alg = from_constants2d(ref3);
    CHECK(constants2d(alg) == ref3);

    CHECK_THROWS_AS(constants2d(zero_algebra(3)), WrongDimension);

    Rng rng(3);
    for (int it = 0; it < 25; ++it) {
        Constants2D k8 = hta::testing::random_constants(rng);
        CHECK(constants2d(from_constants2d(k8)) == k8);
    }
}

TEST_CASE("change_basis identity and inverse round-trip") {
    Constants2D k8{1, 1, 1, 0, -1, 1, 1, -1};
    Algebra alg = from_constants2d(k8);
    CHECK(change_basis(alg, Mat::identity(2)) == alg);

    Rng rng(17);
    for (int it = 0; it < 25; ++it) {
        Mat P = hta::testing::random_invertible_mat2(rng);
        CHECK(change_basis(change_basis(alg, P), P.inverse()) == alg);
    }

    Mat singular{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(change_basis(alg, singular), SingularMatrix);
}

TEST_CASE("change_basis maps the A8 instance to the A11 form under the swap") {
    // A8 instance: a=1; c=1, d=0; e=f=0; k=1, l=0.
    Algebra a8 = from_constants2d(Constants2D{1, 0, 1, 0, 0, 0, 1, 0});
    Mat swap{{0, 1}, {1, 0}};
    Constants2D got = constants2d(change_basis(a8, swap));
    // Expected: dot (0,-1), star (0,-1), t1 (0,-1), t2 (0,0).
    CHECK(got == Constants2D{0, -1, 0, -1, 0, -1, 0, 0});
}

TEST_CASE("change_basis is a right action: P then Q equals P*Q") {
    Rng rng(23);
    for (int it = 0; it < 25; ++it) {
        Algebra alg = from_constants2d(hta::testing::random_constants(rng));
        Mat P = hta::testing::random_invertible_mat2(rng);
        Mat Q = hta::testing::random_invertible_mat2(rng);
        CHECK(change_basis(change_basis(alg, P), Q) == change_basis(alg, P * Q));
    }
}

TEST_CASE("2D shortcut agrees with the generic tensor transformation") {
    Rng rng(29);
    for (int it = 0; it < 100; ++it) {
        Constants2D k8 = hta::testing::random_constants(rng);
        Algebra alg = from_constants2d(k8);
        Mat P = hta::testing::random_invertible_mat2(rng);
        Algebra generic = change_basis(alg, P);
        Constants2D want = constants2d(generic);

        Vec dot_w = transform_product_vector(P, k8.dot_vec());
        Vec star_w = transform_product_vector(P, k8.star_vec());
        Mat T = transform_ternary_matrix(P, k8.t_matrix());
        CHECK(dot_w == want.dot_vec());
        CHECK(star_w == want.star_vec());
        CHECK(T == want.t_matrix());
    }
}

TEST_CASE("specialize zeroes the selected table") {
    Constants2D k8{1, 1, 1, 0, -1, 1, 1, -1};
    Algebra alg = from_constants2d(k8);

    Algebra no_star = specialize(alg, BinaryOp::Star);
    CHECK(no_star.star.is_zero());
    CHECK(no_star.dot == alg.dot);
    CHECK(no_star.triple == alg.triple);

    Algebra no_dot = specialize(alg, BinaryOp::Dot);
    CHECK(no_dot.dot.is_zero());
    CHECK(no_dot.star == alg.star);

    // dot already zero: unchanged
    Algebra type_v = from_constants2d(Constants2D{0, 0, 1, 0, 1, 2, 3, -1});
    CHECK(specialize(type_v, BinaryOp::Dot) == type_v);

    Algebra ternary_only = specialize(specialize(alg, BinaryOp::Dot), BinaryOp::Star);
    CHECK(ternary_only.dot.is_zero());
    CHECK(ternary_only.star.is_zero());
    CHECK(ternary_only.triple == alg.triple);
}

TEST_CASE("dimension 1 degenerates to the zero algebra") {
    Algebra a1 = zero_algebra(1);
    CHECK(a1.dot.is_zero());
    Algebra moved = change_basis(a1, Mat{{Rational(Int(3), Int(2))}});
    CHECK(moved == a1);
}
