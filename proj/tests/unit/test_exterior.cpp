#include "doctest.h"
#include "test_util.hpp"

#include "lcskit/hodge.hpp"

using namespace lcskit;
using testutil::fm;
using testutil::sc;

TEST_CASE("wedge basics") {
    Chart chart = testutil::r3();
    DifferentialForm dx = DifferentialForm::differential(chart, 0);
    DifferentialForm dy = DifferentialForm::differential(chart, 1);
    DifferentialForm dz = DifferentialForm::differential(chart, 2);

    DifferentialForm dxdy = wedge(dx, dy);
    CHECK(dxdy.coefficient({0, 1}) == ScalarExpr::one(chart));
    CHECK(wedge(dy, dx) == -dxdy);
    CHECK(wedge(dxdy, wedge(dx, dz)).is_zero());
    CHECK(wedge(dx, dx).is_zero());
}

TEST_CASE("exterior derivative examples") {
    Chart chart = testutil::r3();
    CHECK(exterior_derivative(fm(chart, "x*dy")) == fm(chart, "dx^dy"));
    CHECK(exterior_derivative(fm(chart, "dz - y*dx")) == fm(chart, "dx^dy"));

    Chart collar = parse_chart("coord t collar\ncoord x\ncoord y\ncoord z\n");
    CHECK(exterior_derivative(fm(collar, "(1/t)*dt")).is_zero());
}

TEST_CASE("bivector contraction examples") {
    Chart r2 = testutil::r2();
    DifferentialForm omega2 = fm(r2, "dx^dy");
    CHECK(contract_bivector(omega2, fm(r2, "dx"), fm(r2, "dy")) == ScalarExpr::one(r2));
    CHECK(contract_bivector(omega2, fm(r2, "dx"), fm(r2, "dx")).is_zero());

    Chart r4 = testutil::r4();
    DifferentialForm omega4 = fm(r4, "dx1^dy1 + dx2^dy2");
    CHECK(contract_bivector(omega4, fm(r4, "dx1^dy1"), fm(r4, "dx1^dy1")) ==
          ScalarExpr::one(r4));
    CHECK_THROWS_AS(contract_bivector(fm(r4, "dx1^dy1"), fm(r4, "dx1"), fm(r4, "dy1")),
                    Error); // degenerate on R^4
    CHECK_THROWS_AS(contract_bivector(omega4, fm(r4, "dx1"), fm(r4, "dx1^dy1")), Error);
}

TEST_CASE("pullback examples") {
    Chart r3 = testutil::r3();
    CoordinateMap id = CoordinateMap::identity(r3);
    DifferentialForm a = fm(r3, "x*dy^dz + dz");
    CHECK(pullback(id, a) == a);

    // Collar rescaling t -> 2t preserves the log differential.
    Chart line({{"t", CoordKind::collar}});
    CoordinateMap doubling(line, line, {sc(line, "2*t")});
    CHECK(pullback(doubling, fm(line, "(1/t)*dt")) == fm(line, "(1/t)*dt"));
}

TEST_CASE("randomized exterior-calculus properties") {
    Chart charts[] = {testutil::r2(), testutil::r4()};
    std::mt19937_64 rng(1234);
    for (const Chart& chart : charts) {
        int dim = static_cast<int>(chart.dimension());
        for (int i = 0; i < 250; ++i) {
            int ka = static_cast<int>(rng() % (dim + 1));
            int kb = static_cast<int>(rng() % (dim + 1));
            DifferentialForm a = random_form(chart, ka, rng());
            DifferentialForm b = random_form(chart, kb, rng());

            // d^2 = 0
            REQUIRE(exterior_derivative(exterior_derivative(a)).is_zero());

            // graded commutativity
            DifferentialForm ab = wedge(a, b);
            DifferentialForm ba = wedge(b, a);
            if ((ka * kb) % 2 != 0) ba = -ba;
            REQUIRE(ab == ba);

            // Leibniz
            DifferentialForm lhs = exterior_derivative(ab);
            DifferentialForm rhs = wedge(exterior_derivative(a), b) +
                                   (ka % 2 == 0 ? wedge(a, exterior_derivative(b))
                                                : -wedge(a, exterior_derivative(b)));
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("pullback naturality on random polynomial maps") {
    Chart source = testutil::r2();
    Chart target = testutil::r3();
    std::mt19937_64 rng(777);
    for (int i = 0; i < 100; ++i) {
        std::vector<ScalarExpr> comps;
        for (int c = 0; c < 3; ++c) {
            Polynomial p(source.scalar_var_count());
            for (int t = 0; t < 2; ++t) {
                Exponents e(source.scalar_var_count(), 0);
                e[rng() % source.scalar_var_count()] += 1;
                if (rng() % 2) e[rng() % source.scalar_var_count()] += 1;
                p.add_term(e, Rational(static_cast<int>(rng() % 5) - 2));
            }
            comps.push_back(ScalarExpr::from_polynomial(source, p));
        }
        CoordinateMap f(source, target, comps);

        int ka = static_cast<int>(rng() % 3);
        int kb = static_cast<int>(rng() % 2);
        DifferentialForm a = random_form(target, ka, rng());
        DifferentialForm b = random_form(target, kb, rng());

        REQUIRE(pullback(f, wedge(a, b)) == wedge(pullback(f, a), pullback(f, b)));
        REQUIRE(pullback(f, exterior_derivative(a)) ==
                exterior_derivative(pullback(f, a)));
    }
}

TEST_CASE("pairing is (-1)^k symmetric") {
    Chart r4 = testutil::r4();
    DifferentialForm omega = fm(r4, "dx1^dy1 + dx2^dy2");
    BivectorPairing pairing(omega);
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 100; ++i) {
        int k = static_cast<int>(rng() % 5);
        DifferentialForm a = random_form(r4, k, rng());
        DifferentialForm b = random_form(r4, k, rng());
        if (a.is_zero() || b.is_zero()) continue;
        ScalarExpr left = pairing.pair(a, b);
        ScalarExpr right = pairing.pair(b, a);
        if (k % 2 != 0) right = -right;
        REQUIRE(left == right);
    }
}
