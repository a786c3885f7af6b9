#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "weakore/catalog.hpp"
#include "weakore/fixtures.hpp"
#include "weakore/spec_io.hpp"

#ifndef WEAKORE_FIXTURE_DIR
#error "WEAKORE_FIXTURE_DIR must point at tests/fixtures"
#endif

using namespace weakore;
using testing_support::q;

namespace {

std::string fixture(const std::string& name) { return std::string(WEAKORE_FIXTURE_DIR) + "/" + name; }

ErrorKind parse_error_kind(const std::string& text) {
    try {
        auto spec = parse_spec(text);
        build_weak_bialgebra(spec);
    } catch (const AlgebraError& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("bundled fixtures load and validate") {
    auto m2 = load_spec(fixture("m2q.json"));
    CHECK(m2.dim() == 4);
    auto h = build_weak_hopf_algebra(m2);
    CHECK(check_weak_bialgebra(h.wb).passed());
    CHECK(check_antipode(h).passed());

    auto sw = load_spec(fixture("sweedler-data.json"));
    CHECK(sw.labels == std::vector<std::string>{"1", "t"});
    REQUIRE(sw.maps.count("sigma"));
    REQUIRE(sw.maps.count("delta"));
    REQUIRE(sw.elements.count("g"));
    CHECK(sw.maps.at("sigma").apply(Vector::unit(2, 1)) == Vector::unit(2, 1, q(-1)));
    CHECK(sw.maps.at("delta").is_zero());
    CHECK(sw.elements.at("g") == Vector::unit(2, 1));
    CHECK(same_spec(sw, sweedler_data_spec()));
    CHECK(same_spec(m2, matrix_spec(2)));
}

TEST_CASE("non-associative fixture is rejected") {
    auto spec = load_spec(fixture("nonassociative.json"));
    try {
        build_weak_bialgebra(spec);
        FAIL("expected ValidationError");
    } catch (const AlgebraError& e) {
        CHECK(e.kind() == ErrorKind::ValidationError);
        CHECK(std::string(e.what()).find("NotAssociative") != std::string::npos);
    }
}

TEST_CASE("parse errors carry a position") {
    try {
        parse_spec("{\"field\": ");
        FAIL("expected ParseError");
    } catch (const AlgebraError& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }
    try {
        parse_spec(R"({"field": {"kind": "rationals"}, "dimension": 1, "labels": ["1"], "mult": [[0, 0, 0, "x"]],
                       "unit": ["1"], "comult": [[0, 0, 0, "1"]], "counit": ["1"]})");
        FAIL("expected ParseError");
    } catch (const AlgebraError& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("mult") != std::string::npos);
    }
    CHECK(parse_error_kind(R"({"field": {"kind": "rationals"}, "dimension": 2, "labels": ["1"], "mult": [],
                               "unit": ["1"], "comult": [], "counit": ["1"]})") == ErrorKind::ParseError);
}

TEST_CASE("round trips") {
    for (const auto& spec : {matrix_spec(1), matrix_spec(3), groupoid_spec(2, 2), sweedler_data_spec(),
                             section5_spec(2, 1, {q(1), q(-1)}, {q(1)}),
                             section5_spec(2, 2, {q(1), q(-1)}, {q(1), q(2)})}) {
        const std::string text = emit_spec(spec);
        auto back = parse_spec(text);
        CHECK(same_spec(spec, back));
        CHECK(emit_spec(back) == text);
    }
    auto fp = spec_from(matrix_algebra(2, Field::prime(5)));
    auto back = parse_spec(emit_spec(fp));
    CHECK(back.field == Field::prime(5));
    CHECK(same_spec(fp, back));
    CHECK(check_weak_bialgebra(build_weak_bialgebra(back)).passed());
}

TEST_CASE("F_p scalars are integers in the file") {
    auto text = emit_spec(spec_from(group_algebra(GroupPresentation::cyclic(2), Field::prime(3))));
    CHECK(text.find("\"prime\"") != std::string::npos);
    CHECK(text.find("\"counit\": [1, 1]") != std::string::npos);
    CHECK(text.find("[1, 1, 0, 1]") != std::string::npos);
}

TEST_CASE("groupoid extension spec contents") {
    auto s = section5_spec(2, 1, {q(1), q(-1)}, {q(1)});
    REQUIRE(s.maps.count("delta"));
    // δ(t) = t − 1
    CHECK(s.maps.at("delta").apply(Vector::unit(2, 1)) == Vector(2, {{0, q(-1)}, {1, q(1)}}));
    REQUIRE(s.functionals.count("alpha"));
    CHECK(s.functionals.at("alpha")[0].is_zero());
}
