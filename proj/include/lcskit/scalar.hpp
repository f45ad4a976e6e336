#pragma once

#include <string>
#include <vector>

#include "lcskit/chart.hpp"
#include "lcskit/polynomial.hpp"

namespace lcskit {

/// Exact scalar coefficient on a chart: an element of the fraction field of
/// Q[coordinates, parameters, sin/cos atoms] modulo sin^2 + cos^2 = 1.
///
/// Canonical form (equality is structural equality on it):
///   - numerator trig-reduced: every sin atom appears to degree <= 1 per
///     monomial (sin^2 rewritten as 1 - cos^2),
///   - denominator free of sin atoms (conjugate-rationalized) and monic
///     under degrevlex,
///   - numerator/denominator coprime as plain polynomials.
class ScalarExpr {
public:
    static ScalarExpr zero(const Chart& chart);
    static ScalarExpr one(const Chart& chart);
    static ScalarExpr constant(const Chart& chart, const Rational& c);
    static ScalarExpr coordinate(const Chart& chart, std::size_t coord);
    static ScalarExpr parameter(const Chart& chart, std::size_t param);
    static ScalarExpr sin_of(const Chart& chart, std::size_t coord);
    static ScalarExpr cos_of(const Chart& chart, std::size_t coord);
    /// Build num/den and canonicalize; throws DivisionByZero when den is 0.
    static ScalarExpr fraction(const Chart& chart, Polynomial num, Polynomial den);
    static ScalarExpr from_polynomial(const Chart& chart, Polynomial num);

    const Chart& chart() const { return chart_; }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const;
    Rational constant_value() const;

    ScalarExpr operator-() const;
    ScalarExpr operator+(const ScalarExpr& o) const;
    ScalarExpr operator-(const ScalarExpr& o) const;
    ScalarExpr operator*(const ScalarExpr& o) const;
    ScalarExpr operator/(const ScalarExpr& o) const;
    ScalarExpr inverse() const;
    ScalarExpr pow(int k) const;

    bool operator==(const ScalarExpr& o) const {
        return chart_ == o.chart_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const ScalarExpr& o) const { return !(*this == o); }

    /// Partial derivative along a chart coordinate (quotient rule; trig
    /// atoms follow d sin = cos, d cos = -sin). Parameters differentiate
    /// to zero only implicitly: asking for a parameter is UnknownSymbol.
    ScalarExpr differentiate(std::size_t coord) const;

    /// Compose: substitute one ScalarExpr (all on a common target chart)
    /// per scalar variable of this chart.
    ScalarExpr substitute(const std::vector<ScalarExpr>& images) const;

    /// Exact evaluation at rational values, one per scalar variable.
    Rational eval_rational(const std::vector<Rational>& values) const;

    std::string to_string() const;

private:
    ScalarExpr(Chart chart, Polynomial num, Polynomial den)
        : chart_(std::move(chart)), num_(std::move(num)), den_(std::move(den)) {}

    static ScalarExpr make_canonical(const Chart& chart, Polynomial num, Polynomial den);

    Chart chart_;
    Polynomial num_;
    Polynomial den_;
};

/// Rewrites sin^k (k >= 2) via sin^2 = 1 - cos^2 for every angular
/// coordinate of the chart.
Polynomial trig_reduce(const Chart& chart, Polynomial p);

std::string polynomial_to_string(const Chart& chart, const Polynomial& p);

inline void require_same_chart(const Chart& a, const Chart& b) {
    if (a != b)
        throw Error(ErrorKind::ChartMismatch, "operands live on different charts");
}

} // namespace lcskit
