#pragma once

#include <random>

#include "lcskit/parse.hpp"

namespace testutil {

using namespace lcskit;

inline Chart r2() { return Chart::cartesian({"x", "y"}); }
inline Chart r3() { return Chart::cartesian({"x", "y", "z"}); }
inline Chart r4() { return Chart::cartesian({"x1", "y1", "x2", "y2"}); }

inline Chart angular_chart() {
    return Chart({{"t", CoordKind::cartesian},
                  {"th", CoordKind::angular},
                  {"a", CoordKind::cartesian}});
}

inline ScalarExpr sc(const Chart& chart, const std::string& text) {
    return parse_scalar(chart, text);
}

inline DifferentialForm fm(const Chart& chart, const std::string& text) {
    return parse_form(chart, text);
}

/// Random ScalarExpr: a fraction of small random polynomials.
inline ScalarExpr random_scalar(const Chart& chart, std::mt19937_64& rng,
                                bool with_denominator = false) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, chart.scalar_var_count() - 1);
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> mdeg(0, 2);
    auto rand_poly = [&] {
        Polynomial p(chart.scalar_var_count());
        int n = nterms(rng);
        for (int i = 0; i < n; ++i) {
            Exponents e(chart.scalar_var_count(), 0);
            int d = mdeg(rng);
            for (int j = 0; j < d; ++j) e[pick(rng)] += 1;
            p.add_term(e, Rational(coeff(rng)));
        }
        return p;
    };
    Polynomial num = rand_poly();
    Polynomial den = Polynomial::constant(chart.scalar_var_count(), 1);
    if (with_denominator) {
        Polynomial d = rand_poly();
        if (!trig_reduce(chart, d).is_zero()) den = d;
    }
    return ScalarExpr::fraction(chart, std::move(num), std::move(den));
}

} // namespace testutil
