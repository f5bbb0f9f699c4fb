#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hta/connection.hpp"
#include "hta/errors.hpp"
#include "test_support.hpp"

using namespace hta;
using hta::testing::Rng;

namespace {

// The worked 2-dimensional example: [X1,X2](e) = 2 X1 + X2,
// a(X1,X2)(e) = X1 + X2, and the four torsion-derivative values.
ConnectionData section2_data() {
    BinaryTable bracket(2), a(2);
    bracket.set(0, 1, Vec{2, 1});
    a.set(0, 1, Vec{1, 1});
    TernaryTable dT(2);
    dT.set(0, 0, 1, Vec{1, -1});
    dT.set(1, 0, 1, Vec{1, 0});
    return make_connection_data(2, bracket, a, dT);
}

ConnectionData zero_data(size_t dim) {
    return make_connection_data(dim, BinaryTable(dim), BinaryTable(dim), TernaryTable(dim));
}

// Independent oracle: expand (*) directly, [X_l, (C - a)(X_i, X_j)],
// with the product rule supplying dC = -dT and the bracket values at e.
//   r^m_(l,ij) = -dT[l][i][j]^m + sum_s (C^s_ij - a^s_ij) C^m_(l,s)
Vec oracle_r(const ConnectionData& data, size_t l, size_t i, size_t j) {
    Vec acc = -data.dT.at(l, i, j);
    for (size_t s = 0; s < data.dim; ++s) {
        Rational coeff = data.bracket.at(i, j)[s] - data.a_tensor.at(i, j)[s];
        acc.add_scaled(coeff, data.bracket.at(l, s));
    }
    return acc;
}

ConnectionData random_connection(Rng& rng) {
    BinaryTable bracket(2), a(2);
    bracket.set(0, 1, hta::testing::random_vec(rng, 2));
    a.set(0, 1, hta::testing::random_vec(rng, 2));
    TernaryTable dT(2);
    dT.set(0, 0, 1, hta::testing::random_vec(rng, 2));
    dT.set(1, 0, 1, hta::testing::random_vec(rng, 2));
    return make_connection_data(2, bracket, a, dT);
}

}  // namespace

TEST_CASE("torsion_at_e negates the bracket and stays skew") {
    ConnectionData data = section2_data();
    BinaryTable T = torsion_at_e(data);
    CHECK(T.at(0, 1) == Vec{-2, -1});
    CHECK(T.at(1, 0) == Vec{2, 1});
    T.validate("torsion");

    CHECK(torsion_at_e(zero_data(2)).is_zero());
}

TEST_CASE("ternary_from_connection reproduces the worked example") {
    ConnectionData data = section2_data();
    TernaryTable r = ternary_from_connection(data);
    CHECK(r.at(0, 0, 1) == Vec{-1, 1});   // <X1;X1,X2> = -X1 + X2
    CHECK(r.at(1, 0, 1) == Vec{-3, -1});  // literal reading of the torsion relation
    CHECK(ternary_from_connection(zero_data(2)).is_zero());
}

TEST_CASE("ternary_from_connection agrees with the direct bracket expansion") {
    Rng rng(71);
    for (int it = 0; it < 50; ++it) {
        ConnectionData data = random_connection(rng);
        TernaryTable r = ternary_from_connection(data);
        for (size_t l = 0; l < 2; ++l)
            for (size_t i = 0; i < 2; ++i)
                for (size_t j = 0; j < 2; ++j) CHECK(r.at(l, i, j) == oracle_r(data, l, i, j));
        r.validate("oracle-checked ternary");
    }
}

TEST_CASE("algebra_from_connection assembles dot, star and triple") {
    ConnectionData data = section2_data();
    Algebra alg = algebra_from_connection(data);
    Constants2D k8 = constants2d(alg);
    CHECK(k8.dot_vec() == Vec{1, 1});
    CHECK(k8.star_vec() == Vec{1, 0});
    CHECK(k8 == Constants2D{1, 1, 1, 0, -1, 1, -3, -1});

    CHECK(algebra_from_connection(zero_data(2)) == zero_algebra(2));
}

TEST_CASE("a ConnectionData reconstruction of the ref3 example is valid of type VI") {
    BinaryTable bracket(2), a(2);
    bracket.set(0, 1, Vec{1, 1});
    a.set(0, 1, Vec{1, 0});
    TernaryTable dT(2);
    dT.set(0, 0, 1, Vec{1, 1});
    dT.set(1, 0, 1, Vec{1, 0});
    ConnectionData data = make_connection_data(2, bracket, a, dT);

    Algebra alg = algebra_from_connection(data);
    CHECK(constants2d(alg) == Constants2D{1, 0, 0, 1, 0, 0, -1, 0});
    AuditReport report = audit_connection_example(data);
    CHECK(report.computed.valid);
    REQUIRE(report.computed.classification.has_value());
    CHECK(report.computed.classification->theorem_type == "VI");
}

TEST_CASE("audit of the worked example reports nonzero residuals for both readings") {
    ConnectionData data = section2_data();
    Algebra stated = from_constants2d(Constants2D{1, 1, 1, 0, -1, 1, 1, -1});
    AuditReport report = audit_connection_example(data, stated);

    CHECK(!report.computed.valid);
    CHECK(report.computed.J == Vec{-2, 0});
    bool r19_failed = false;
    for (const auto& cr : report.computed.reduced)
        if (cr.identity == IdentityId::R19 && !cr.passed) r19_failed = true;
    CHECK(r19_failed);

    REQUIRE(report.alternatives.size() == 3);
    const AuditSection& stated_section = report.alternatives.back();
    CHECK(stated_section.label == "stated algebra");
    CHECK(!stated_section.valid);
    CHECK(stated_section.J == Vec{-2, 0});
    bool stated_r19_failed = false;
    for (const auto& cr : stated_section.reduced)
        if (cr.identity == IdentityId::R19 && !cr.passed) stated_r19_failed = true;
    CHECK(stated_r19_failed);

    // no section may claim a classification for an invalid reading
    CHECK(!report.computed.classification.has_value());
}

TEST_CASE("audit of zero data classifies as type I") {
    AuditReport report = audit_connection_example(zero_data(2));
    CHECK(report.computed.valid);
    REQUIRE(report.computed.classification.has_value());
    CHECK(report.computed.classification->theorem_type == "I");
}

TEST_CASE("connection data validation") {
    BinaryTable bad(2);
    bad.set_raw(0, 1, Vec{1, 0});
    CHECK_THROWS_AS(make_connection_data(2, bad, BinaryTable(2), TernaryTable(2)), SkewViolation);
    CHECK_THROWS_AS(make_connection_data(3, BinaryTable(2), BinaryTable(3), TernaryTable(3)),
                    DimensionMismatch);
    CHECK_THROWS_AS(audit_connection_example(zero_data(3)), WrongDimension);
}
