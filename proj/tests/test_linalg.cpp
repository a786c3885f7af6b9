#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle/dense.hpp"
#include "support.hpp"
#include "weakore/linalg.hpp"

using namespace weakore;
using testing_support::Gen;
using testing_support::q;

TEST_CASE("scalars stay exact") {
    CHECK(q(1, 3) + q(1, 6) == q(1, 2));
    CHECK(q(2, 4).to_string() == "1/2");
    CHECK(q(-3, 6).to_string() == "-1/2");
    CHECK((q(7, 5) / q(7, 5)).is_one());
    CHECK_THROWS_AS(q(1, 0), ScalarError);
    CHECK_THROWS_AS(Scalar(0).inverse(), ScalarError);
}

TEST_CASE("prime field arithmetic") {
    const Field f5 = Field::prime(5);
    CHECK(f5.parse("3") * f5.parse("2") == f5.one());
    CHECK(f5.parse("-1").to_string() == "4");
    CHECK(f5.parse("1/2") == f5.parse("3"));
    CHECK(f5.from_int(3).inverse() == f5.from_int(2));
    // Integer literals act as constants in F_p.
    CHECK(f5.from_int(4) + Scalar(1) == f5.zero());
    CHECK_THROWS_AS(Field::prime(6), ScalarError);
    CHECK_THROWS_AS(f5.parse("2/5"), ScalarError);
}

TEST_CASE("vector canonical form") {
    const std::vector<std::string> labels{"a", "b", "c", "d"};
    Vector v(4, {{2, q(1)}, {0, q(3)}, {2, q(-1)}, {1, q(0)}});
    REQUIRE(v.nnz() == 1);
    CHECK(v[0] == q(3));
    CHECK(v[2].is_zero());
    CHECK(v.to_string(labels) == "3*a");
    Vector w = Vector::unit(4, 3, q(-1, 2));
    CHECK((v + w).to_string(labels) == "3*a - 1/2*d");
    CHECK((v - v).is_zero());
}

TEST_CASE("tensor index convention") {
    Vector a = Vector::unit(2, 1, q(2));
    Vector b = Vector::unit(3, 2, q(5));
    Vector t = tensor(a, b);
    CHECK(t.dim() == 6);
    CHECK(t[1 * 3 + 2] == q(10));
}

TEST_CASE("kernel, rank and solve on a fixed matrix") {
    // [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    Matrix m = Matrix::from_dense({{q(1), q(2), q(3)}, {q(2), q(4), q(6)}, {q(1), q(0), q(1)}});
    CHECK(rank(m) == 2);
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(m.apply(k[0]).is_zero());
    auto x = solve(m, Vector(3, {{0, q(6)}, {1, q(12)}, {2, q(2)}}));
    REQUIRE(x);
    CHECK(m.apply(*x) == Vector(3, {{0, q(6)}, {1, q(12)}, {2, q(2)}}));
    CHECK_FALSE(solve(m, Vector::unit(3, 1)));
    CHECK_FALSE(inverse(m));
}

TEST_CASE("inverse of a unimodular matrix") {
    Matrix m = Matrix::from_dense({{q(2), q(1)}, {q(1), q(1)}});
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(2));
    CHECK(*inv == Matrix::from_dense({{q(1), q(-1)}, {q(-1), q(2)}}));
}

TEST_CASE("property: rank agrees with dense elimination") {
    Gen gen(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + gen.index(7), c = 1 + gen.index(7);
        Matrix m = gen.matrix(r, c, 0.35);
        const std::size_t rk = rank(m);
        CHECK(rk == oracle::rank(oracle::to_dense(m)));
        auto k = kernel_basis(m);
        CHECK(k.size() == c - rk);
        for (const auto& v : k) CHECK(m.apply(v).is_zero());
        CHECK(image_basis(m).size() == rk);
        CHECK(rank(m.transpose()) == rk);
    }
}

TEST_CASE("property: kron mixed product and bilinearity") {
    Gen gen(12);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix a = gen.matrix(2, 3), b = gen.matrix(3, 2), c = gen.matrix(3, 2), d = gen.matrix(2, 2);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
        Vector x = gen.vector(3), y = gen.vector(2);
        CHECK(kron(a, d).apply(tensor(x, y)) == tensor(a.apply(x), d.apply(y)));
        Scalar s = gen.scalar();
        CHECK(tensor(s * x, y) == s * tensor(x, y));
    }
}

TEST_CASE("property: solve returns a solution whenever one exists") {
    Gen gen(13);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = gen.matrix(4, 5, 0.4);
        Vector x = gen.vector(5);
        Vector b = m.apply(x);
        auto s = solve(m, b);
        REQUIRE(s);
        CHECK(m.apply(*s) == b);
    }
}

TEST_CASE("property: square inverses") {
    Gen gen(14);
    int invertible = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = gen.matrix(4, 4, 0.6);
        auto inv = inverse(m);
        CHECK(inv.has_value() == (rank(m) == 4));
        if (inv) {
            ++invertible;
            CHECK(m * *inv == Matrix::identity(4));
            CHECK(*inv * m == Matrix::identity(4));
        }
    }
    CHECK(invertible > 0);
}

TEST_CASE("row reducer over F_p") {
    const Field f = Field::prime(3);
    RowReducer rr(3);
    CHECK(rr.add_row(Vector(3, {{0, f.one()}, {1, f.one()}})));
    CHECK(rr.add_row(Vector(3, {{1, f.one()}, {2, f.one()}})));
    // (1,1,0) + 2(0,1,1) = (1, 0, 2) over F_3
    CHECK_FALSE(rr.add_row(Vector(3, {{0, f.one()}, {2, f.from_int(2)}})));
    CHECK(rr.rank() == 2);
    CHECK(rr.kernel().size() == 1);
}
