#include "lcskit/scalar.hpp"

#include <sstream>

namespace lcskit {

Polynomial trig_reduce(const Chart& chart, Polynomial p) {
    const auto& vars = chart.scalar_vars();
    for (std::size_t v = 0; v < vars.size(); ++v) {
        if (vars[v].role != ScalarVar::Role::sin) continue;
        std::size_t cos_v = v + 1;
        // 1 - cos^2, used as the image of sin^2.
        Polynomial pyth = Polynomial::constant(p.nvars(), 1);
        Exponents c2(p.nvars(), 0);
        c2[cos_v] = 2;
        pyth.add_term(c2, Rational(-1));

        Polynomial out(p.nvars());
        for (const auto& [e, c] : p.terms()) {
            if (e[v] < 2) {
                out.add_term(e, c);
                continue;
            }
            Exponents base = e;
            std::uint32_t half = e[v] / 2;
            base[v] = e[v] % 2;
            Polynomial rewritten =
                Polynomial::monomial(p.nvars(), base, c) * pyth.pow(half);
            out = out + rewritten;
        }
        p = std::move(out);
    }
    return p;
}

namespace {

// Splits p = lo + sin_v * hi, assuming sin-degree <= 1 in variable v.
void split_by_sin(const Polynomial& p, std::size_t v, Polynomial& lo, Polynomial& hi) {
    lo = Polynomial::zero(p.nvars());
    hi = Polynomial::zero(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] == 0) {
            lo.add_term(e, c);
        } else {
            Exponents r = e;
            r[v] = 0;
            hi.add_term(r, c);
        }
    }
}

} // namespace

ScalarExpr ScalarExpr::make_canonical(const Chart& chart, Polynomial num, Polynomial den) {
    num = trig_reduce(chart, std::move(num));
    den = trig_reduce(chart, std::move(den));
    if (den.is_zero())
        throw Error(ErrorKind::DivisionByZero, "division by canonical zero");

    // Clear sin atoms from the denominator by conjugation, one angular
    // coordinate at a time.
    const auto& vars = chart.scalar_vars();
    for (std::size_t v = 0; v < vars.size(); ++v) {
        if (vars[v].role != ScalarVar::Role::sin) continue;
        if (den.degree_in(v) == 0) continue;
        Polynomial lo(den.nvars()), hi(den.nvars());
        split_by_sin(den, v, lo, hi);
        Polynomial conj = lo - Polynomial::variable(den.nvars(), v) * hi;
        num = trig_reduce(chart, num * conj);
        den = trig_reduce(chart, den * conj);
    }

    if (num.is_zero())
        return ScalarExpr(chart, Polynomial::zero(num.nvars()),
                          Polynomial::constant(den.nvars(), 1));

    // gcd reduction is only needed when both sides are non-constant.
    if (!num.is_constant() && !den.is_constant()) {
        Polynomial g = poly_gcd(num, den);
        if (!g.is_constant()) {
            num = num.exact_divide(g);
            den = den.exact_divide(g);
        }
    }
    // Monic denominator pins the overall scale.
    Rational lc = den.leading_coefficient();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num = num * inv;
        den = den * inv;
    }
    return ScalarExpr(chart, std::move(num), std::move(den));
}

ScalarExpr ScalarExpr::zero(const Chart& chart) {
    std::size_t n = chart.scalar_var_count();
    return ScalarExpr(chart, Polynomial::zero(n), Polynomial::constant(n, 1));
}

ScalarExpr ScalarExpr::one(const Chart& chart) { return constant(chart, Rational(1)); }

ScalarExpr ScalarExpr::constant(const Chart& chart, const Rational& c) {
    std::size_t n = chart.scalar_var_count();
    return ScalarExpr(chart, Polynomial::constant(n, c), Polynomial::constant(n, 1));
}

ScalarExpr ScalarExpr::coordinate(const Chart& chart, std::size_t coord) {
    std::size_t n = chart.scalar_var_count();
    return ScalarExpr(chart, Polynomial::variable(n, chart.coord_var(coord)),
                      Polynomial::constant(n, 1));
}

ScalarExpr ScalarExpr::parameter(const Chart& chart, std::size_t param) {
    std::size_t n = chart.scalar_var_count();
    return ScalarExpr(chart, Polynomial::variable(n, chart.param_var(param)),
                      Polynomial::constant(n, 1));
}

ScalarExpr ScalarExpr::sin_of(const Chart& chart, std::size_t coord) {
    std::size_t n = chart.scalar_var_count();
    return ScalarExpr(chart, Polynomial::variable(n, chart.trig_vars(coord).first),
                      Polynomial::constant(n, 1));
}

ScalarExpr ScalarExpr::cos_of(const Chart& chart, std::size_t coord) {
    std::size_t n = chart.scalar_var_count();
    return ScalarExpr(chart, Polynomial::variable(n, chart.trig_vars(coord).second),
                      Polynomial::constant(n, 1));
}

ScalarExpr ScalarExpr::fraction(const Chart& chart, Polynomial num, Polynomial den) {
    return make_canonical(chart, std::move(num), std::move(den));
}

ScalarExpr ScalarExpr::from_polynomial(const Chart& chart, Polynomial num) {
    return make_canonical(chart, std::move(num),
                          Polynomial::constant(chart.scalar_var_count(), 1));
}

bool ScalarExpr::is_one() const {
    return num_.is_constant() && num_.constant_value() == 1 && den_.is_constant();
}

bool ScalarExpr::is_constant() const { return num_.is_constant() && den_.is_constant(); }

Rational ScalarExpr::constant_value() const {
    if (!is_constant())
        throw Error(ErrorKind::DegreeMismatch, "scalar is not constant");
    if (num_.is_zero()) return Rational(0);
    return num_.constant_value() / den_.constant_value();
}

ScalarExpr ScalarExpr::operator-() const { return ScalarExpr(chart_, -num_, den_); }

ScalarExpr ScalarExpr::operator+(const ScalarExpr& o) const {
    require_same_chart(chart_, o.chart_);
    return make_canonical(chart_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ScalarExpr ScalarExpr::operator-(const ScalarExpr& o) const { return *this + (-o); }

ScalarExpr ScalarExpr::operator*(const ScalarExpr& o) const {
    require_same_chart(chart_, o.chart_);
    return make_canonical(chart_, num_ * o.num_, den_ * o.den_);
}

ScalarExpr ScalarExpr::operator/(const ScalarExpr& o) const {
    require_same_chart(chart_, o.chart_);
    return make_canonical(chart_, num_ * o.den_, den_ * o.num_);
}

ScalarExpr ScalarExpr::inverse() const { return one(chart_) / *this; }

ScalarExpr ScalarExpr::pow(int k) const {
    ScalarExpr base = k < 0 ? inverse() : *this;
    int n = k < 0 ? -k : k;
    ScalarExpr r = one(chart_);
    for (int i = 0; i < n; ++i) r = r * base;
    return r;
}

ScalarExpr ScalarExpr::differentiate(std::size_t coord) const {
    if (coord >= chart_.dimension())
        throw Error(ErrorKind::UnknownSymbol, "coordinate index out of range");
    std::size_t n = chart_.scalar_var_count();

    auto poly_derivative = [&](const Polynomial& p) {
        Polynomial r = p.derivative(chart_.coord_var(coord));
        if (chart_.coords()[coord].kind == CoordKind::angular) {
            auto [s, c] = chart_.trig_vars(coord);
            r = r + p.derivative(s) * Polynomial::variable(n, c);
            r = r - p.derivative(c) * Polynomial::variable(n, s);
        }
        return r;
    };

    Polynomial dn = poly_derivative(num_);
    Polynomial dd = poly_derivative(den_);
    return make_canonical(chart_, dn * den_ - num_ * dd, den_ * den_);
}

namespace {

ScalarExpr compose_polynomial(const Polynomial& p, const Chart& target,
                              const std::vector<ScalarExpr>& images) {
    ScalarExpr acc = ScalarExpr::zero(target);
    for (const auto& [e, c] : p.terms()) {
        ScalarExpr term = ScalarExpr::constant(target, c);
        for (std::size_t v = 0; v < e.size(); ++v) {
            for (std::uint32_t k = 0; k < e[v]; ++k) term = term * images[v];
        }
        acc = acc + term;
    }
    return acc;
}

} // namespace

ScalarExpr ScalarExpr::substitute(const std::vector<ScalarExpr>& images) const {
    if (images.size() != chart_.scalar_var_count())
        throw Error(ErrorKind::SubstitutionError,
                    "substitution image count does not match variable count");
    const Chart& target = images.empty() ? chart_ : images.front().chart();
    ScalarExpr n = compose_polynomial(num_, target, images);
    ScalarExpr d = compose_polynomial(den_, target, images);
    return n / d;
}

Rational ScalarExpr::eval_rational(const std::vector<Rational>& values) const {
    if (values.size() != chart_.scalar_var_count())
        throw Error(ErrorKind::SubstitutionError,
                    "evaluation value count does not match variable count");
    auto eval_poly = [&](const Polynomial& p) {
        Rational acc(0);
        for (const auto& [e, c] : p.terms()) {
            Rational term = c;
            for (std::size_t v = 0; v < e.size(); ++v) {
                for (std::uint32_t k = 0; k < e[v]; ++k) term *= values[v];
            }
            acc += term;
        }
        return acc;
    };
    Rational d = eval_poly(den_);
    if (d == 0)
        throw Error(ErrorKind::DivisionByZero, "denominator vanishes at evaluation point");
    return eval_poly(num_) / d;
}

std::string polynomial_to_string(const Chart& chart, const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string factors;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += chart.var_name(v);
            if (e[v] > 1) factors += "^" + std::to_string(e[v]);
        }
        if (factors.empty()) {
            out << rat_to_string(mag);
        } else if (mag == 1) {
            out << factors;
        } else {
            out << rat_to_string(mag) << "*" << factors;
        }
    }
    return out.str();
}

std::string ScalarExpr::to_string() const {
    if (den_.is_constant())
        return polynomial_to_string(chart_, num_);
    return "(" + polynomial_to_string(chart_, num_) + ")/(" +
           polynomial_to_string(chart_, den_) + ")";
}

} // namespace lcskit
