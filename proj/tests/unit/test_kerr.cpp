#include "doctest.h"
#include "test_util.hpp"

#include <sstream>

#include "lcskit/kerr.hpp"

using namespace lcskit;

TEST_CASE("quartic evaluation") {
    CHECK(quartic_eval(ProjectivePoint::make(1, 1, 0, 1)) == 0);
    // Off-surface point: 1*(0+1) - 1*(1-1) = 1 by direct substitution.
    CHECK(quartic_eval(ProjectivePoint::make(1, 0, 1, 1)) == 1);
    // [0:0:1:1] is already canonical (first nonzero coordinate is z).
    CHECK(quartic_eval(ProjectivePoint::make(0, 0, 1, 1)) == 1);
    CHECK_THROWS_AS(ProjectivePoint::make(0, 0, 0, 0), Error);
}

TEST_CASE("quartic homogeneity on representatives") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> pick(-6, 6);
    for (int i = 0; i < 200; ++i) {
        Rational r(pick(rng)), x(pick(rng)), z(pick(rng)), a(pick(rng));
        if (r == 0 && x == 0 && z == 0 && a == 0) continue;
        Rational lambda(pick(rng), 1 + std::abs(pick(rng)));
        if (lambda == 0) continue;
        Rational direct = quartic_polynomial(lambda * r, lambda * x, lambda * z, lambda * a);
        Rational expected =
            lambda * lambda * lambda * lambda * quartic_polynomial(r, x, z, a);
        REQUIRE(direct == expected);
    }
}

TEST_CASE("normalization identity after clearing a^4") {
    Chart chart = Chart::cartesian({"r", "x", "z", "a"});
    ScalarExpr r = ScalarExpr::coordinate(chart, 0);
    ScalarExpr x = ScalarExpr::coordinate(chart, 1);
    ScalarExpr z = ScalarExpr::coordinate(chart, 2);
    ScalarExpr a = ScalarExpr::coordinate(chart, 3);
    ScalarExpr q = r * r * (x * x + z * z) - a * a * (r * r - z * z);

    ScalarExpr kappa = x / a, rho = r / a, zeta = z / a;
    ScalarExpr normalized = rho * rho * (kappa * kappa + zeta * zeta) -
                            (rho * rho - zeta * zeta);
    CHECK(q == normalized * a.pow(4));
}

TEST_CASE("fiber classification and eccentricity") {
    ConicReport quarter = fiber(Rational(1, 2));
    CHECK(quarter.type == ConicType::ellipse);
    CHECK(quarter.ecc2 == Rational(3, 4));
    CHECK(quarter.semi_axis_kappa2 == Rational(3, 4));
    CHECK(quarter.semi_axis_rho2 == Rational(3));

    ConicReport lines = fiber(Rational(0));
    CHECK(lines.type == ConicType::line_pair);
    CHECK(lines.ecc2 == Rational(1));

    ConicReport point = fiber(Rational(1));
    CHECK(point.type == ConicType::point);
    CHECK(point.ecc2 == Rational(0));

    CHECK_THROWS_AS(fiber(Rational(3, 2)), Error);
}

TEST_CASE("fiber membership cross-checks the quartic") {
    CHECK(fiber_membership(Rational(0), Rational(1), Rational(7)));
    // theta_p^2 = 1/2, kappa = 0 forces rho^2 = (1 - t2)/t2 = 1.
    CHECK(fiber_membership_sq(Rational(1, 2), Rational(0), Rational(1)));
    CHECK_FALSE(fiber_membership(Rational(1, 2), Rational(0), Rational(1)));
    // kappa = 2 makes 1 - kappa^2 negative: never a member.
    CHECK_FALSE(fiber_membership(Rational(1, 2), Rational(2), Rational(1, 5)));
    CHECK_FALSE(fiber_membership_sq(Rational(9, 10), Rational(2), Rational(3)));
    CHECK_THROWS_AS(fiber_membership(Rational(0), Rational(1), Rational(0)), Error);
}

TEST_CASE("a = 0 degeneration") {
    SplitQuartic q = degenerate_a0();
    Chart chart = q.full.chart();
    CHECK(q.full == testutil::sc(chart, "r^2*x^2 + r^2*z^2"));
    CHECK(q.full == q.factor_r2 * q.factor_sum);
    CHECK(q.degree_r2 == 2);
    CHECK(q.degree_sum == 2);
}

TEST_CASE("Kerr-Schild map identities") {
    CoordinateMap ks = kerr_schild_map();
    const Chart& src = ks.source();
    const Chart& tgt = ks.target();

    ScalarExpr x = ScalarExpr::coordinate(tgt, 0);
    ScalarExpr y = ScalarExpr::coordinate(tgt, 1);
    // x^2 + y^2 = (r^2 + a^2) sin^2(theta) identically.
    CHECK(ks.pull_scalar(x * x + y * y) ==
          testutil::sc(src, "(r^2 + a^2)*sin(th)^2"));
    ScalarExpr z = ScalarExpr::coordinate(tgt, 2);
    CHECK(ks.pull_scalar(z * z) == testutil::sc(src, "r^2*cos(th)^2"));

    IdentityReport report = verify_ks_identity();
    CHECK_FALSE(report.matches);
    CHECK(report.difference == "r^2");
}

TEST_CASE("kerr two-form report") {
    FormReport report = kerr_two_form();
    CHECK(report.closed);
    CHECK_FALSE(report.matches);
    CHECK_FALSE(report.difference.empty());
    // The degeneracy locus contains sin(theta) = 0.
    CHECK(report.degeneracy_locus.find("sin(th)") != std::string::npos);
}

TEST_CASE("sample_pencil determinism and exactness") {
    auto rows = sample_pencil(Rational(1), 25, 7);
    auto rows2 = sample_pencil(Rational(1), 25, 7);
    REQUIRE(rows.size() == 25);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const PencilRow& row = rows[i];
        CHECK(row.theta_p == rows2[i].theta_p);
        CHECK(row.kappa == rows2[i].kappa);
        // e^2 + theta_p^2 = 1 exactly.
        REQUIRE(row.ecc2 + row.theta_p * row.theta_p == 1);
        // Member point lies on the quartic.
        Rational zeta = row.theta_p * row.rho;
        REQUIRE(quartic_polynomial(row.rho, row.kappa, zeta, Rational(1)) == 0);
        REQUIRE(fiber_membership(row.theta_p, row.kappa, row.rho));
    }

    std::ostringstream csv1, csv2;
    write_pencil_csv(csv1, rows);
    write_pencil_csv(csv2, rows2);
    CHECK(csv1.str() == csv2.str());
    CHECK(csv1.str().rfind("index,theta_p_num,theta_p_den,ecc2_num,ecc2_den,"
                           "kappa_num,kappa_den,rho_num,rho_den\n",
                           0) == 0);
    CHECK_THROWS_AS(sample_pencil(Rational(1), 0, 1), Error);
}
