#include "doctest.h"
#include "test_util.hpp"

#include "lcskit/lcs.hpp"

using namespace lcskit;
using testutil::fm;
using testutil::sc;

namespace {

ContactForm std_contact(const std::string& alpha) {
    Chart chart = testutil::r3();
    return ContactForm(chart, testutil::fm(chart, alpha));
}

} // namespace

TEST_CASE("verify_lcs: symplectic, collar, degenerate") {
    Chart r4 = testutil::r4();
    LcsStructure symplectic(r4, fm(r4, "dx1^dy1 + dx2^dy2"), DifferentialForm::zero(r4));
    VerificationReport r = verify_lcs(symplectic);
    CHECK(r.all_passed());
    CHECK(r.find("lee-sign")->witness == "any");
    CHECK(symplectic.lee_sign == 0);

    LcsStructure degenerate(r4, fm(r4, "dx1^dy1"), fm(r4, "dx2"));
    VerificationReport rd = verify_lcs(degenerate);
    CHECK_FALSE(rd.all_passed());
    CHECK(rd.find("nondegenerate")->status == CheckStatus::fail);

    CHECK_THROWS_AS(LcsStructure(testutil::r3(), DifferentialForm::zero(testutil::r3()),
                                 DifferentialForm::zero(testutil::r3())),
                    Error);
}

TEST_CASE("verify_contact examples") {
    CHECK(verify_contact(std_contact("dz - y*dx")).all_passed());
    CHECK_FALSE(verify_contact(std_contact("dz")).all_passed());
    CHECK(verify_contact(std_contact("dz + x*dy")).all_passed());

    // alpha ^ d(alpha) = dx^dy^dz for the standard form.
    ContactForm c = std_contact("dz - y*dx");
    DifferentialForm vol = wedge(c.alpha, exterior_derivative(c.alpha));
    CHECK(vol == fm(c.chart, "dx^dy^dz"));

    Chart r4 = testutil::r4();
    CHECK_THROWS_AS(ContactForm(r4, DifferentialForm::zero(r4)), Error);
}

TEST_CASE("build_collar: structure, lcs condition, volume identity") {
    LcsStructure s = build_collar(std_contact("dz - y*dx"));
    CHECK(s.chart.dimension() == 4);
    CHECK(s.chart.coords()[0].kind == CoordKind::collar);

    CHECK(s.theta == fm(s.chart, "(1/t)*dt"));
    CHECK(s.omega == fm(s.chart, "-(1/t)*dt^(dz - y*dx) - dx^dy"));

    VerificationReport r = verify_lcs(s);
    CHECK(r.all_passed());
    // The measured Lee sign: d(omega) = -theta^omega for this construction.
    CHECK(s.lee_sign == -1);

    // omega^2 = 2 theta ^ alpha ^ d(alpha) exactly (volume sign +1).
    Chart collar = s.chart;
    DifferentialForm alpha = fm(collar, "dz - y*dx");
    DifferentialForm expected =
        wedge(s.theta, wedge(alpha, exterior_derivative(alpha))) *
        sc(collar, "2");
    CHECK(wedge(s.omega, s.omega) == expected);

    CHECK_THROWS_AS(build_collar(std_contact("dz")), Error);
}

TEST_CASE("collar sign is constant across contact forms") {
    std::vector<std::string> alphas = {
        "dz - y*dx",
        "dz + x*dy",
        "dz + x*dy - y*dx",
        "dz - y*dx + 2*x*dy",
        "dz + (x + y)*dy - y*dx",
    };
    for (const auto& a : alphas) {
        LcsStructure s = build_collar(std_contact(a));
        CHECK(verify_lcs(s).all_passed());
        CHECK(s.lee_sign == -1);

        Chart collar = s.chart;
        DifferentialForm alpha = fm(collar, a);
        DifferentialForm expected =
            wedge(s.theta, wedge(alpha, exterior_derivative(alpha))) * sc(collar, "2");
        CHECK(wedge(s.omega, s.omega) == expected);
    }
}

TEST_CASE("verify_morphism conventions") {
    Chart r4 = testutil::r4();
    LcsStructure symplectic(r4, fm(r4, "dx1^dy1 + dx2^dy2"), DifferentialForm::zero(r4));

    LcsMorphism identity{CoordinateMap::identity(r4), ScalarExpr::one(r4), symplectic,
                         symplectic};
    VerificationReport r = verify_morphism(identity);
    CHECK(r.all_passed());
    CHECK(r.find("convention")->witness == "both");

    // Collar rescaling t -> 2t with u = 2 satisfies the conformal reading.
    LcsStructure collar = build_collar(std_contact("dz - y*dx"));
    std::vector<ScalarExpr> comps{sc(collar.chart, "2*t"), sc(collar.chart, "x"),
                                  sc(collar.chart, "y"), sc(collar.chart, "z")};
    CoordinateMap map(collar.chart, collar.chart, comps);
    // phi* omega = u * omega' wants omega' = (phi* omega)/u.
    LcsStructure scaled(collar.chart,
                        pullback(map, collar.omega) * sc(collar.chart, "1/2"),
                        pullback(map, collar.theta));
    LcsMorphism conformal{map, sc(collar.chart, "2"), scaled, collar};
    VerificationReport rc = verify_morphism(conformal);
    CHECK(rc.find("conformal-omega")->status == CheckStatus::pass);
    CHECK(rc.find("literal-omega")->status == CheckStatus::fail);

    // A map that matches neither convention with u = 1.
    LcsMorphism broken{CoordinateMap::identity(r4), ScalarExpr::one(r4), symplectic,
                       LcsStructure(r4, fm(r4, "2*dx1^dy1 + dx2^dy2"),
                                    DifferentialForm::zero(r4))};
    CHECK(verify_morphism(broken).find("literal-omega")->status == CheckStatus::fail);
}

TEST_CASE("restrict_to_boundary") {
    LcsStructure s = build_collar(std_contact("dz - y*dx"));
    auto [omega_b, theta_b] = restrict_to_boundary(s);
    Chart boundary = omega_b.chart();
    CHECK(boundary.dimension() == 3);
    CHECK(omega_b == -exterior_derivative(fm(boundary, "dz - y*dx")));
    CHECK(theta_b.is_zero());
    CHECK(exterior_derivative(omega_b).is_zero());

    Chart r4 = testutil::r4();
    LcsStructure flat(r4, fm(r4, "dx1^dy1 + dx2^dy2"), DifferentialForm::zero(r4));
    CHECK_THROWS_AS(restrict_to_boundary(flat), Error);
}

TEST_CASE("identity morphism passes for any valid structure") {
    LcsStructure collar = build_collar(std_contact("dz + x*dy"));
    LcsMorphism identity{CoordinateMap::identity(collar.chart),
                         ScalarExpr::one(collar.chart), collar, collar};
    CHECK(verify_morphism(identity).all_passed());
}
