#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle/dense.hpp"
#include "support.hpp"
#include "weakore/coderivation.hpp"
#include "weakore/fixtures.hpp"
#include "weakore/grouplike.hpp"

using namespace weakore;
using testing_support::Gen;
using testing_support::q;

namespace {

struct Z2 {
    WeakHopfAlgebra h = group_algebra(GroupPresentation::cyclic(2));
    Vector one = h.wb.algebra().basis(0);
    Vector t = h.wb.algebra().basis(1);
    Matrix sigma = map_from_images(2, {one, -t});
    // δ(1) = 0, δ(t) = t − 1
    Matrix delta = map_from_images(2, {Vector(2), t - one});
};

std::vector<oracle::Q> coords(const Vector& v) {
    std::vector<oracle::Q> out(v.dim(), 0);
    for (const auto& [i, c] : v.entries()) out[i] = c.rational();
    return out;
}

}  // namespace

TEST_CASE("σ-derivations on QZ_2") {
    Z2 z;
    const auto& A = z.h.wb.algebra();
    CHECK(is_sigma_derivation(A, z.sigma, Matrix(2, 2)));
    CHECK(is_sigma_derivation(A, z.sigma, z.delta));
    // σ = id, δ(t) = 1: δ(t²) = 0 but δ(t)t + tδ(t) = 2t.
    Matrix d1 = map_from_images(2, {Vector(2), z.one});
    CHECK_FALSE(is_sigma_derivation(A, Matrix::identity(2), d1));
    auto w = sigma_derivation_failure(A, Matrix::identity(2), d1);
    REQUIRE(w);
    CHECK(*w == std::pair<std::size_t, std::size_t>{1, 1});
}

TEST_CASE("coderivations on QZ_2 and M_2") {
    Z2 z;
    CHECK(is_coderivation(z.h.wb, Matrix(2, 2), z.t, z.one));
    CHECK(is_coderivation(z.h.wb, z.delta, z.t, z.one));
    CHECK(coderivation_failures(z.h.wb, z.delta, z.one, z.one) == std::vector<std::size_t>{1});
    auto m2 = matrix_algebra(2);
    Matrix some(4, 4, {{0, 1, q(1)}});
    CHECK_FALSE(is_coderivation(m2.wb, some, m2.wb.algebra().one(), m2.wb.algebra().one()));
}

TEST_CASE("coderivation spaces match the dense oracle") {
    for (std::size_t n = 2; n <= 3; ++n) {
        auto wb = matrix_algebra(n).wb;
        const Vector& one = wb.algebra().one();
        CHECK(coderivation_space(wb, one, one).empty());
        oracle::Groupoid G{1, n};
        auto sys = oracle::groupoid_coderivation_system(G, coords(one), coords(one));
        CHECK(oracle::nullity(sys, n * n * n * n) == 0);
        CHECK(rank(coderivation_constraint_matrix(wb, one, one)) == oracle::rank(sys));
    }
    Z2 z;
    auto space = coderivation_space(z.h.wb, z.t, z.one);
    CHECK(space.size() == 2);
    oracle::Groupoid G{2, 1};
    auto sys = oracle::groupoid_coderivation_system(G, coords(z.t), coords(z.one));
    CHECK(oracle::nullity(sys, 4) == 2);
    // Spanned by δ(1) = 1 − t, δ(t) = 0 and δ(1) = 0, δ(t) = 1 − t.
    Matrix a = map_from_images(2, {z.one - z.t, Vector(2)});
    Matrix b = map_from_images(2, {Vector(2), z.one - z.t});
    CHECK(is_coderivation(z.h.wb, a, z.t, z.one));
    CHECK(is_coderivation(z.h.wb, b, z.t, z.one));
    RowReducer rr(4);
    for (const auto& m : space) rr.add_row(Vector(4, {{0, m.at(0, 0)}, {1, m.at(1, 0)}, {2, m.at(0, 1)}, {3, m.at(1, 1)}}));
    CHECK(rr.in_span(Vector(4, {{0, q(1)}, {1, q(-1)}})));
    CHECK(rr.in_span(Vector(4, {{2, q(1)}, {3, q(-1)}})));
}

TEST_CASE("coderivation spaces of M_2(QZ_2) against the oracle") {
    auto h = groupoid_structure(GroupPresentation::cyclic(2), 2);
    const auto& wb = h.wb;
    oracle::Groupoid G{2, 2};
    Vector g = wb.algebra().basis(groupoid_index(2, 1, 0, 0)) + wb.algebra().basis(groupoid_index(2, 1, 1, 1));
    for (const Vector& gg : {wb.algebra().one(), g}) {
        auto sys = oracle::groupoid_coderivation_system(G, coords(gg), coords(wb.algebra().one()));
        CHECK(coderivation_space(wb, gg, wb.algebra().one()).size() == oracle::nullity(sys, 64));
    }
}

TEST_CASE("inner coderivations vanish on cocommutative inputs") {
    auto m2 = matrix_algebra(2);
    Functional chi(Vector(4, {{0, q(1)}, {1, q(2)}, {2, q(1, 2)}, {3, q(1)}}));
    CHECK(inner_coderivation(m2.wb, chi).is_zero());
    CHECK(inner_coderivation(m2.wb, m2.wb.coalgebra().counit()).is_zero());
    Z2 z;
    Functional sign(Vector(2, {{0, q(1)}, {1, q(-1)}}));
    CHECK(inner_coderivation(z.h.wb, sign).is_zero());
}

TEST_CASE("inner coderivations on a non-cocommutative algebra") {
    auto sw = sweedler_four();
    const auto& wb = sw.wb;
    Gen gen(41);
    for (int trial = 0; trial < 10; ++trial) {
        Functional chi(gen.vector(4, 0.8));
        Matrix d = inner_coderivation(wb, chi);
        CHECK(is_coderivation(wb, d, wb.algebra().one(), wb.algebra().one()));
    }
}

TEST_CASE("skew-primitive elements") {
    Z2 z;
    BialgebraContext ctx{z.h.wb};
    CHECK(is_skew_primitive(ctx, Vector(2), z.t, z.one));
    auto sw = sweedler_four();
    BialgebraContext sctx{sw.wb};
    // Basis 1, g, x, gx.
    Vector g = sw.wb.algebra().basis(1), x = sw.wb.algebra().basis(2);
    CHECK(is_skew_primitive(sctx, x, g, sw.wb.algebra().one()));
    auto r = skew_primitive_identity_report(sctx, x, g, sw.wb.algebra().one());
    CHECK(r.passed());
    CHECK(r.hypothesis_holds("x_gh_primitive"));
}

TEST_CASE("xE_ij is (E_ij, E_ij)-primitive in M_2 of the four-dimensional algebra") {
    auto sw = sweedler_four();
    auto m2 = matrix_algebra(2);
    auto p = tensor_product(m2, sw);  // basis E_ij ⊗ b
    BialgebraContext ctx{p.wb};
    for (std::size_t e = 0; e < 4; ++e) {
        Vector eij = m2.wb.algebra().basis(e);
        // x is (g,1)-primitive in the factor, so x E_ij is (gE_ij, E_ij)-primitive.
        Vector xe = tensor(eij, sw.wb.algebra().basis(2));
        Vector ge = tensor(eij, sw.wb.algebra().basis(1));
        Vector oe = tensor(eij, sw.wb.algebra().one());
        CHECK(is_skew_primitive(ctx, xe, ge, oe));
        auto r = skew_primitive_identity_report(ctx, xe, ge, oe);
        CHECK(r.passed());
    }
}

TEST_CASE("ε∘δ and ε(aδ(b))") {
    Z2 z;
    auto r = eps_delta_report(z.h.wb, z.delta, z.t, z.one, &z.sigma);
    CHECK(r.passed());
    CHECK(r.hypothesis_holds("delta_is_gh_coderivation"));
    CHECK(r.hypothesis_holds("eps_s_g_is_one"));
    CHECK(z.h.wb.epsilon(z.delta.apply(z.t)).is_zero());
    CHECK(kills_source_base(z.h.wb, z.delta));

    auto m2 = matrix_algebra(2);
    Vector e12 = m2.wb.algebra().basis(1);
    auto rm = eps_delta_report(m2.wb, Matrix(4, 4), e12, m2.wb.algebra().one());
    CHECK(rm.passed());
    CHECK_FALSE(rm.hypothesis_holds("eps_s_g_is_one"));
    CHECK_FALSE(rm.has("eps_delta_zero"));
}

TEST_CASE("property: coderivation spaces are closed and verified") {
    Gen gen(42);
    Z2 z;
    auto space = coderivation_space(z.h.wb, z.t, z.one);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix d(2, 2);
        for (const auto& m : space) d = d + gen.scalar() * m;
        CHECK(is_coderivation(z.h.wb, d, z.t, z.one));
    }
}
