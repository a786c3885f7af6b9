#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle/dense.hpp"
#include "support.hpp"
#include "weakore/fixtures.hpp"
#include "weakore/groups.hpp"

using namespace weakore;
using testing_support::Gen;
using testing_support::q;

namespace {

// M_2 with Δ(E_ij) = E_ij⊗E_ij but ε(E_ij) = [i = j].
WeakBialgebra m2_with_diagonal_counit() {
    auto m2 = matrix_algebra(2);
    const auto& c = m2.wb.coalgebra();
    Vector eps(4, {{0, q(1)}, {3, q(1)}});
    return WeakBialgebra(m2.wb.algebra(), Coalgebra::unchecked(Field::rationals(), 4, c.terms(), eps));
}

std::vector<WeakHopfAlgebra> all_fixtures() {
    std::vector<WeakHopfAlgebra> out;
    for (std::size_t n = 1; n <= 3; ++n) out.push_back(matrix_algebra(n));
    for (std::size_t m = 2; m <= 4; ++m) out.push_back(group_algebra(GroupPresentation::cyclic(m)));
    out.push_back(groupoid_structure(GroupPresentation::cyclic(2), 2));
    out.push_back(sweedler_four());
    return out;
}

}  // namespace

TEST_CASE("algebra construction rejects bad tables") {
    // e·e = f, f·f = e, ef = fe = 0, unit e
    std::vector<StructureTerm> mult{{0, 0, 1, q(1)}, {1, 1, 0, q(1)}};
    // (ee)f = ff = e but e(ef) = 0, and associativity is checked before the unit.
    try {
        Algebra::make(Field::rationals(), {"e", "f"}, mult, Vector::unit(2, 0));
        FAIL("expected an error");
    } catch (const AlgebraError& e) {
        CHECK(e.kind() == ErrorKind::NotAssociative);
        CHECK(e.witness() == std::vector<std::size_t>{0, 0, 1});
    }
}

TEST_CASE("unit failure is reported as UnitFails") {
    // b_0 b_0 = b_0, b_1 b_1 = b_1, cross products zero, unit b_0: associative, but b_0 b_1 = 0 ≠ b_1.
    std::vector<StructureTerm> mult{{0, 0, 0, q(1)}, {1, 1, 1, q(1)}};
    try {
        Algebra::make(Field::rationals(), {"e", "f"}, mult, Vector::unit(2, 0));
        FAIL("expected UnitFails");
    } catch (const AlgebraError& e) {
        CHECK(e.kind() == ErrorKind::UnitFails);
    }
}

TEST_CASE("standard fixtures pass every axiom") {
    for (const auto& h : all_fixtures()) {
        CAPTURE(h.wb.labels().size());
        CHECK(check_coalgebra(h.wb.coalgebra(), h.wb.labels()).passed());
        CHECK(check_weak_bialgebra(h.wb).passed());
        CHECK(check_antipode(h).passed());
        CHECK(check_counital_projections(h.wb).passed());
        CHECK(weak_counit_identities(h.wb).passed());
    }
}

TEST_CASE("diagonal counit on M_2 breaks weak multiplicativity at (E11,E12,E21)") {
    auto wb = m2_with_diagonal_counit();
    CHECK_FALSE(check_coalgebra(wb.coalgebra(), wb.labels()).passed("counit_left"));
    auto r = check_weak_bialgebra(wb);
    REQUIRE_FALSE(r.passed("counit_weak_mult_12"));
    const auto& w = r.find("counit_weak_mult_12")->failures.front();
    CHECK(w.labels == std::vector<std::string>{"E11", "E12", "E21"});
    // ε(E11 E12 E21) = ε(E11) = 1 while ε(E11 E12)ε(E12 E21) = 0.
    CHECK(w.lhs == "1");
    CHECK(w.rhs == "0");
    // (E11, E12, E22) does not separate the two sides.
    for (const auto& f : r.find("counit_weak_mult_12")->failures)
        CHECK_FALSE(f.labels == std::vector<std::string>{"E11", "E12", "E22"});
}

TEST_CASE("counital maps on M_2") {
    auto m2 = matrix_algebra(2);
    const auto& wb = m2.wb;
    Vector e11 = wb.algebra().basis(0), e12 = wb.algebra().basis(1), e21 = wb.algebra().basis(2),
           e22 = wb.algebra().basis(3);
    CHECK(wb.eps_t(e12) == e11);
    CHECK(wb.eps_s(e12) == e22);
    CHECK(wb.eps_t(e12 + e21) == wb.algebra().one());
    CHECK(wb.delta_one() == tensor(e11, e11) + tensor(e22, e22));
    auto base = base_subalgebras(wb);
    RowReducer t(4), s(4);
    for (const auto& v : base.target) t.add_row(v);
    for (const auto& v : base.source) s.add_row(v);
    CHECK(t.rank() == 2);
    CHECK(s.rank() == 2);
    CHECK(t.in_span(e11));
    CHECK(t.in_span(e22));
    CHECK(s.in_span(e11));
    CHECK(s.in_span(e22));
}

TEST_CASE("counital maps on group algebras collapse to the unit") {
    auto z2 = group_algebra(GroupPresentation::cyclic(2));
    Vector t = z2.wb.algebra().basis(1);
    CHECK(z2.wb.eps_t(t) == z2.wb.algebra().one());
    auto base = base_subalgebras(z2.wb);
    CHECK(base.target.size() == 1);
    CHECK(base.source.size() == 1);
}

TEST_CASE("base subalgebras of M_2(QZ_2) are the diagonal units") {
    auto h = groupoid_structure(GroupPresentation::cyclic(2), 2);
    auto base = base_subalgebras(h.wb);
    REQUIRE(base.target.size() == 2);
    RowReducer rr(8);
    for (const auto& v : base.target) rr.add_row(v);
    CHECK(rr.in_span(h.wb.algebra().basis(groupoid_index(2, 0, 0, 0))));
    CHECK(rr.in_span(h.wb.algebra().basis(groupoid_index(2, 0, 1, 1))));
    CHECK_FALSE(rr.in_span(h.wb.algebra().basis(groupoid_index(2, 1, 0, 0))));
}

TEST_CASE("S = id on M_2 fails the antipode axiom at E12") {
    auto m2 = matrix_algebra(2);
    WeakHopfAlgebra bad{m2.wb, Matrix::identity(4)};
    auto r = check_antipode(bad);
    REQUIRE_FALSE(r.passed("antipode_eps_t"));
    const auto& w = r.find("antipode_eps_t")->failures.front();
    CHECK(w.labels == std::vector<std::string>{"E12"});
    CHECK(w.lhs == "0");
    CHECK(w.rhs == "E11");
}

TEST_CASE("tensor products") {
    auto m2 = matrix_algebra(2);
    auto z2 = group_algebra(GroupPresentation::cyclic(2));
    auto p = tensor_product(m2, z2);
    CHECK(p.wb.dim() == 8);
    CHECK(check_weak_bialgebra(p.wb).passed());
    CHECK(check_antipode(p).passed());
    auto k = trivial_hopf_algebra();
    auto pk = tensor_product(m2, k);
    std::vector<std::size_t> id{0, 1, 2, 3};
    CHECK(check_basis_isomorphism(m2.wb, pk.wb, id).passed());
}

TEST_CASE("convolution: counit is the identity, χ_q multiply pointwise") {
    auto m2 = matrix_algebra(2);
    const auto& wb = m2.wb;
    auto chi_q = [](Scalar q1, Scalar q2) {
        // χ(E_ij) = q_i⁻¹ q_j
        const Scalar qs[2] = {q1, q2};
        std::vector<Vector::Entry> e;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) e.push_back({i * 2 + j, qs[j] / qs[i]});
        return Functional(Vector(4, e));
    };
    Functional eps = wb.coalgebra().counit();
    Functional f = chi_q(q(1), q(3));
    CHECK(convolution(wb, eps, f) == f);
    CHECK(convolution(wb, f, eps) == f);
    CHECK(convolution(wb, chi_q(q(1), q(2)), chi_q(q(1), q(5))) == chi_q(q(1), q(10)));
}

TEST_CASE("weak counit identities at chosen pairs") {
    auto m2 = matrix_algebra(2);
    const auto& wb = m2.wb;
    auto r = weak_counit_identities(wb, wb.algebra().basis(1), wb.algebra().basis(2));
    CHECK(r.passed());
    CHECK(r.infos().front().second == "1");
    auto z2 = group_algebra(GroupPresentation::cyclic(2));
    Vector t = z2.wb.algebra().basis(1);
    auto rz = weak_counit_identities(z2.wb, t, t);
    CHECK(rz.passed());
    CHECK(rz.infos().front().second == "1");
}

TEST_CASE("property: Δ multiplicative and ε weakly multiplicative on random elements") {
    Gen gen(21);
    auto fixtures = all_fixtures();
    for (const auto& h : fixtures) {
        const auto& wb = h.wb;
        const std::size_t n = wb.dim();
        for (int trial = 0; trial < 8; ++trial) {
            Vector a = gen.vector(n), b = gen.vector(n), c = gen.vector(n);
            CHECK(wb.delta(wb.multiply(a, b)) == wb.tensor_multiply(wb.delta(a), wb.delta(b)));
            // ε(abc) = ε(ab_1)ε(b_2c)
            Scalar rhs(0);
            const Vector db = wb.delta(b);
            for (const auto& [p, s] : db.entries())
                rhs += s * wb.epsilon(wb.multiply(a, wb.algebra().basis(p / n))) *
                       wb.epsilon(wb.multiply(wb.algebra().basis(p % n), c));
            CHECK(wb.epsilon(wb.multiply(wb.multiply(a, b), c)) == rhs);
            CHECK(weak_counit_identities(wb, a, b).passed());
            // S(ab) = S(b)S(a)
            CHECK(h.S(wb.multiply(a, b)) == wb.multiply(h.S(b), h.S(a)));
        }
    }
}

TEST_CASE("property: counital maps are idempotent projections onto commuting subalgebras") {
    Gen gen(22);
    for (const auto& h : all_fixtures()) {
        const auto& wb = h.wb;
        for (int trial = 0; trial < 6; ++trial) {
            Vector a = gen.vector(wb.dim());
            Vector t = wb.eps_t(a), s = wb.eps_s(a);
            CHECK(wb.eps_t(t) == t);
            CHECK(wb.eps_s(s) == s);
            // Elements of R_t and R_s commute.
            CHECK(wb.multiply(t, s) == wb.multiply(s, t));
        }
    }
}

TEST_CASE("groups") {
    auto z3 = GroupPresentation::cyclic(3);
    CHECK(z3.mul(1, 2) == 0);
    CHECK(z3.inverse(1) == 2);
    CHECK(z3.label(2) == "t^2");
    CHECK_THROWS_AS(z3.validate_character({q(1), q(-1), q(1)}), AlgebraError);
    CHECK_THROWS_AS(GroupPresentation::from_table("bad", {"e", "a"}, {{0, 1}, {1, 1}}), AlgebraError);
}
