#include "hspin/killing.hpp"
#include "hspin/spectra.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hspin;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("primitive pieces") {
    auto p1 = primitive_killing(4, 1);
    REQUIRE(p1.primitive_pieces.size() == 1);
    CHECK(p1.primitive_pieces[0].labels[0].weight == make_weight({q(1), q(1)}));
    CHECK(p1.primitive_pieces[0].dim == 10);

    auto p2 = primitive_killing(4, 2);
    REQUIRE(p2.primitive_pieces.size() == 2);
    CHECK(p2.primitive_pieces[0].dim == 35);
    CHECK(p2.primitive_pieces[1].dim == 14);
    CHECK(p2.primitive_pieces[1].labels[0].weight == make_weight({q(2), q(0)}));

    auto p0 = primitive_killing(7, 0);
    REQUIRE(p0.primitive_pieces.size() == 1);
    CHECK(p0.primitive_pieces[0].dim == 1);
    CHECK(kind_of([] { primitive_killing(4, -1); }) == ErrorKind::DegreeOutOfRange);
}

TEST_CASE("Killing tensor dimensions") {
    auto k2 = killing_space_dim(4, 2);
    CHECK(k2.total_dim == 50);
    CHECK(k2.graded_pieces.at(0) == 49);
    CHECK(k2.graded_pieces.at(1) == 1);
    CHECK(oracle::sym2_lambda2_dim(5) - oracle::lambda4_dim(5) == 50);
    CHECK(killing_space_dim(4, 1).total_dim == 10);

    // S^3: the (2,+-2) pair and (2,0), plus constants
    auto s3 = killing_space_dim(3, 2);
    CHECK(s3.total_dim == 20);
    REQUIRE(s3.primitive_pieces.size() == 2);
    CHECK(s3.primitive_pieces[0].labels.size() == 2);
    CHECK(s3.primitive_pieces[0].dim == 10);
    CHECK(s3.primitive_pieces[1].dim == 9);

    for (int n = 3; n <= 10; ++n) {
        CHECK(killing_space_dim(n, 1).total_dim == n * (n + 1) / 2);
        CHECK(Rational(killing_space_dim(n, 2).total_dim) == oracle::schur_22_dim(n + 1));
        CHECK(Rational(killing_space_dim(n, 2).total_dim) ==
              oracle::sym2_lambda2_dim(n + 1) - oracle::lambda4_dim(n + 1));
        for (int j = 0; j <= 5; ++j)
            CHECK(Rational(killing_space_dim(n, j).total_dim) == oracle::gl_two_row_dim(n + 1, j));
    }
}

TEST_CASE("Killing forms") {
    auto f2 = killing_forms(4, 2);
    CHECK(f2.killing.dim == 10);
    CHECK(f2.killing.labels[0].weight == make_weight({q(1), q(1)}));

    auto f0 = killing_forms(4, 0);
    CHECK(f0.killing.dim == 5);
    CHECK(f0.killing.labels[0].weight == make_weight({q(1), q(0)}));
    CHECK(f0.co_killing.dim == 1);

    CHECK(kind_of([] { killing_forms(4, 3); }) == ErrorKind::DegreeOutOfRange);
    CHECK(kind_of([] { killing_forms(7, 4); }) == ErrorKind::DegreeOutOfRange);

    for (int n = 3; n <= 10; ++n)
        for (int j = 0; j <= n / 2; ++j) {
            const auto f = killing_forms(n, j);
            CHECK(operator_ev(OperatorKind::CAdjC, f.killing.member) == 0);
            CHECK(operator_ev(OperatorKind::DDStar, f.killing.member) == 0);
            CHECK(operator_ev(OperatorKind::CAdjC, f.co_killing.member) == 0);
            CHECK(operator_ev(OperatorKind::DStarD, f.co_killing.member) == 0);
            // Killing j-forms on S^n have the dimension of Lambda^{j+1} R^{n+1}
            if (!(n % 2 == 0 && j == n / 2)) CHECK(Rational(f.killing.dim) == oracle::binom(n + 1, j + 1));
        }
}

TEST_CASE("component chains") {
    for (int n = 3; n <= 9; ++n)
        for (int j = 0; j <= 5; ++j) {
            const auto c = killing_chain_check(n, j);
            CHECK(c.checks > 0);
            CHECK(c.failures.empty());
        }
}
