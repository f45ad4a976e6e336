#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "lcskit/rational.hpp"

namespace lcskit {

/// Exponent vector of a monomial; one entry per scalar variable.
using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

/// Degree-reverse-lexicographic order over a fixed variable sequence.
/// Returns true when a < b.
inline bool degrevlex_less(const Exponents& a, const Exponents& b) {
    std::uint64_t da = total_degree(a);
    std::uint64_t db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

struct DegRevLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return degrevlex_less(b, a);
    }
};

/// Sparse multivariate polynomial over Q with a fixed number of variables.
/// Terms are kept sorted leading-first under degrevlex; zero coefficients
/// are never stored.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, DegRevLexGreater>;

    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }
    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial monomial(std::size_t nvars, Exponents e, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (zero polynomial gives 0).
    Rational constant_value() const;

    std::uint64_t degree() const;                  // total degree; 0 for zero poly
    std::uint32_t degree_in(std::size_t var) const;

    const Exponents& leading_exponents() const;
    const Rational& leading_coefficient() const;

    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(std::uint32_t k) const;

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Plain partial derivative with respect to one variable (variables are
    /// treated as independent; trig chain rules live in ScalarExpr).
    Polynomial derivative(std::size_t var) const;

    /// Exact division; throws Error(DivisionByZero) when the division does
    /// not come out even (callers only use it with known divisors).
    Polynomial exact_divide(const Polynomial& divisor) const;

    /// Rational content carrying the sign of the leading coefficient.
    Rational signed_content() const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

/// GCD in Q[x_1..x_n], normalized: integer-primitive with positive leading
/// coefficient. gcd(0,0) = 0; gcd with a nonzero constant is 1.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

} // namespace lcskit
