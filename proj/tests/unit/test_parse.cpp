#include "doctest.h"
#include "test_util.hpp"

using namespace lcskit;
using testutil::fm;
using testutil::sc;

TEST_CASE("scalar grammar examples") {
    Chart chart = testutil::angular_chart();
    CHECK(sc(chart, "-(1/t)") == -sc(chart, "t").inverse());
    CHECK(sc(chart, "a^2*(1 - cos(th)^2)") == sc(chart, "a^2*sin(th)^2"));
    CHECK_THROWS_AS(sc(testutil::r2(), "1/(x-x)"), Error);
}

TEST_CASE("form grammar: wedge, scalar multiplication, division") {
    Chart chart = testutil::r3();
    CHECK(fm(chart, "dx^dy") == wedge(DifferentialForm::differential(chart, 0),
                                      DifferentialForm::differential(chart, 1)));
    CHECK(fm(chart, "dy^dx") == -fm(chart, "dx^dy"));
    CHECK(fm(chart, "dz - y*dx") ==
          fm(chart, "dz") - fm(chart, "dx") * sc(chart, "y"));
    CHECK(fm(chart, "(dx + dy)^2").is_zero()); // odd forms square to zero
    Chart r4 = testutil::r4();
    CHECK(fm(r4, "(dx1^dy1 + dx2^dy2)^2") == fm(r4, "2*dx1^dy1^dx2^dy2"));
    CHECK(fm(chart, "dx/2") == fm(chart, "(1/2)*dx"));
}

TEST_CASE("parse errors carry byte offsets") {
    Chart chart = testutil::r2();
    try {
        parse_form(chart, "dx + $");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 5);
    }
    try {
        parse_form(chart, "dx ^ dq");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(parse_scalar(chart, "dx"), ParseError);
    CHECK_THROWS_AS(parse_form(chart, "sin(x)"), ParseError); // x is not angular
    CHECK_THROWS_AS(parse_form(chart, "dx^-2"), ParseError);
}

TEST_CASE("round-trip: parse(print(e)) == e") {
    Chart chart = testutil::angular_chart();
    std::mt19937_64 rng(42);
    for (int i = 0; i < 300; ++i) {
        ScalarExpr e = testutil::random_scalar(chart, rng, true);
        CHECK(sc(chart, e.to_string()) == e);
    }

    std::vector<std::string> samples = {
        "dz - y*dx",
        "-(1/t)*dt",
        "x + 1 + dx^dy",
        "(x^2 - y)/(x + 3)*dx + dz^dy",
    };
    Chart collar({{"t", CoordKind::collar},
                  {"x", CoordKind::cartesian},
                  {"y", CoordKind::cartesian},
                  {"z", CoordKind::cartesian}});
    for (const auto& s : samples) {
        DifferentialForm f = fm(collar, s);
        CHECK(fm(collar, f.to_string()) == f);
    }
}

TEST_CASE("chart files round-trip") {
    std::string text = "# collar chart\ncoord t collar\ncoord x\ncoord th angular\nparam a\n";
    Chart chart = parse_chart(text);
    CHECK(chart.dimension() == 3);
    CHECK(chart.coords()[0].kind == CoordKind::collar);
    CHECK(chart.coords()[2].kind == CoordKind::angular);
    CHECK(chart.params().size() == 1);
    CHECK(parse_chart(chart_to_string(chart)) == chart);
    CHECK_THROWS_AS(parse_chart("coord t weird\n"), ParseError);
}

TEST_CASE("structure files round-trip") {
    Chart chart = parse_chart("coord t collar\ncoord x\ncoord y\ncoord z\n");
    StructurePair s{fm(chart, "-(1/t)*dt^(dz - y*dx) - dx^dy"), fm(chart, "(1/t)*dt")};
    StructurePair back = parse_structure(chart, structure_to_string(s));
    CHECK(back.omega == s.omega);
    CHECK(back.theta == s.theta);
    CHECK_THROWS_AS(parse_structure(chart, "omega = dx^dy\n"), ParseError);
}
