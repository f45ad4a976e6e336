#include "lcskit/polynomial.hpp"

#include <algorithm>
#include <optional>

namespace lcskit {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e.at(index) = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(std::size_t nvars, Exponents e, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

std::uint64_t Polynomial::degree() const {
    if (terms_.empty()) return 0;
    return total_degree(terms_.begin()->first);
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

const Exponents& Polynomial::leading_exponents() const {
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    return terms_.begin()->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
    Polynomial r = constant(nvars_, 1);
    for (std::uint32_t i = 0; i < k; ++i) r = r * *this;
    return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * Rational(e[var]));
    }
    return r;
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
    if (divisor.is_zero())
        throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    Polynomial rem = *this;
    Polynomial quot(nvars_);
    const Exponents& dl = divisor.leading_exponents();
    while (!rem.is_zero()) {
        const Exponents& rl = rem.leading_exponents();
        Exponents q(nvars_);
        bool divisible = true;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (rl[i] < dl[i]) { divisible = false; break; }
            q[i] = rl[i] - dl[i];
        }
        if (!divisible)
            throw Error(ErrorKind::DivisionByZero, "inexact polynomial division");
        Rational c = rem.leading_coefficient() / divisor.leading_coefficient();
        Polynomial t = Polynomial::monomial(nvars_, q, c);
        quot = quot + t;
        rem = rem - t * divisor;
    }
    return quot;
}

Rational Polynomial::signed_content() const {
    if (terms_.empty()) return Rational(0);
    Rational g(0);
    for (const auto& [e, c] : terms_) g = rat_gcd(g, c);
    if (leading_coefficient() < 0) g = -g;
    return g;
}

namespace {

int main_variable(const Polynomial& p) {
    int v = -1;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) v = std::max(v, static_cast<int>(i));
        }
    }
    return v;
}

// View of p as a univariate polynomial in variable v with polynomial
// coefficients (exponent of v zeroed out inside the coefficients).
std::map<std::uint32_t, Polynomial> univariate_view(const Polynomial& p, std::size_t v) {
    std::map<std::uint32_t, Polynomial> coeffs;
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        std::uint32_t k = rest[v];
        rest[v] = 0;
        auto it = coeffs.find(k);
        if (it == coeffs.end())
            it = coeffs.emplace(k, Polynomial::zero(p.nvars())).first;
        it->second.add_term(rest, c);
    }
    return coeffs;
}

std::uint32_t degree_in_view(const std::map<std::uint32_t, Polynomial>& u) {
    return u.empty() ? 0 : u.rbegin()->first;
}

Polynomial shift_in_var(const Polynomial& p, std::size_t v, std::uint32_t k) {
    Polynomial r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponents s = e;
        s[v] += k;
        r.add_term(s, c);
    }
    return r;
}

// Pseudo-remainder of f by g with respect to variable v (classical
// incremental form; exactness is what matters here, not sparsity).
Polynomial pseudo_remainder(Polynomial f, const Polynomial& g, std::size_t v) {
    auto gv = univariate_view(g, v);
    std::uint32_t dg = degree_in_view(gv);
    const Polynomial& glc = gv.rbegin()->second;
    while (true) {
        if (f.is_zero()) return f;
        auto fv = univariate_view(f, v);
        std::uint32_t df = degree_in_view(fv);
        if (df < dg) return f;
        const Polynomial& flc = fv.rbegin()->second;
        // f <- glc*f - flc * x^(df-dg) * g
        f = f * glc - shift_in_var(g, v, df - dg) * flc;
    }
}

// Content of p with respect to variable v: gcd of its univariate-view
// coefficients (a polynomial in the remaining variables).
Polynomial content_wrt(const Polynomial& p, std::size_t v) {
    Polynomial g = Polynomial::zero(p.nvars());
    for (const auto& [k, coeff] : univariate_view(p, v)) g = poly_gcd(g, coeff);
    return g;
}

Polynomial normalize_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    Rational c = p.signed_content();
    return p * (Rational(1) / c);
}

} // namespace

namespace {

// Primitive PRS, the slow-but-safe fallback path.
Polynomial poly_gcd_prs(const Polynomial& a, const Polynomial& b) {
    int va = main_variable(a);
    int vb = main_variable(b);
    std::size_t v = static_cast<std::size_t>(std::max(va, vb));

    Polynomial ca = content_wrt(a, v);
    Polynomial cb = content_wrt(b, v);
    Polynomial f = a.exact_divide(ca);
    Polynomial g = b.exact_divide(cb);
    Polynomial c = poly_gcd(ca, cb);

    if (degree_in_view(univariate_view(f, v)) < degree_in_view(univariate_view(g, v)))
        std::swap(f, g);

    while (true) {
        Polynomial r = pseudo_remainder(f, g, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            // Coprime in the main variable.
            return normalize_primitive(c);
        }
        f = g;
        Polynomial rc = content_wrt(r, v);
        g = r.exact_divide(rc);
    }
    Polynomial gc = content_wrt(g, v);
    return normalize_primitive(c * g.exact_divide(gc));
}

bool try_exact_divide(const Polynomial& f, const Polynomial& d, Polynomial& quotient) {
    Polynomial rem = f;
    Polynomial quot(f.nvars());
    const Exponents& dl = d.leading_exponents();
    while (!rem.is_zero()) {
        const Exponents& rl = rem.leading_exponents();
        Exponents q(f.nvars());
        for (std::size_t i = 0; i < f.nvars(); ++i) {
            if (rl[i] < dl[i]) return false;
            q[i] = rl[i] - dl[i];
        }
        Rational c = rem.leading_coefficient() / d.leading_coefficient();
        Polynomial t = Polynomial::monomial(f.nvars(), q, c);
        quot = quot + t;
        rem = rem - t * d;
    }
    quotient = std::move(quot);
    return true;
}

Integer max_abs_coefficient(const Polynomial& p) {
    Integer m = 0;
    for (const auto& [e, c] : p.terms()) {
        Integer n = rat_num(c);
        if (n < 0) n = -n;
        if (n > m) m = n;
    }
    return m;
}

Polynomial eval_at_integer(const Polynomial& p, std::size_t v, const Integer& xi) {
    Polynomial r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        rest[v] = 0;
        Rational scaled = c;
        for (std::uint32_t k = 0; k < e[v]; ++k) scaled *= Rational(xi);
        r.add_term(rest, scaled);
    }
    return r;
}

// xi-adic digit reconstruction with balanced remainders; inverse of
// evaluation at xi for coefficients below xi/2.
Polynomial reconstruct_from_evaluation(Polynomial h, std::size_t v, const Integer& xi) {
    Polynomial gamma(h.nvars());
    std::uint32_t power = 0;
    while (!h.is_zero()) {
        Polynomial digit(h.nvars());
        Polynomial next(h.nvars());
        for (const auto& [e, c] : h.terms()) {
            Integer n = rat_num(c);
            Integer r = n % xi;
            if (r < 0) r += xi;
            if (2 * r > xi) r -= xi;
            if (r != 0) {
                Exponents shifted = e;
                shifted[v] += power;
                digit.add_term(shifted, Rational(r));
            }
            Integer q = (n - r) / xi;
            if (q != 0) next.add_term(e, Rational(q));
        }
        gamma = gamma + digit;
        h = std::move(next);
        ++power;
    }
    return gamma;
}

Integer integer_content(const Polynomial& p) {
    Integer g = 0;
    for (const auto& [e, c] : p.terms()) {
        Integer n = rat_num(c);
        if (n < 0) n = -n;
        g = boost::multiprecision::gcd(g, n);
        if (g == 1) break;
    }
    return g;
}

// Heuristic gcd (integer evaluation, xi-adic reconstruction, trial
// division). Inputs have integer coefficients. gcd(f,g) splits as
// igcd(content) * gcd(primitive parts); the primitive-part gcd is what the
// evaluation sees. Failure returns nullopt and the caller falls back to
// the PRS.
std::optional<Polynomial> gcd_heuristic(const Polynomial& f, const Polynomial& g,
                                        int depth) {
    if (depth > 16) return std::nullopt;
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    int vf = main_variable(f);
    int vg = main_variable(g);
    int v = std::max(vf, vg);
    if (v < 0) {
        Integer cf = rat_num(f.constant_value());
        Integer cg = rat_num(g.constant_value());
        return Polynomial::constant(f.nvars(), Rational(boost::multiprecision::gcd(cf, cg)));
    }

    Integer cf = integer_content(f);
    Integer cg = integer_content(g);
    Rational content(boost::multiprecision::gcd(cf, cg));
    Polynomial fp = f * (Rational(1) / Rational(cf));
    Polynomial gp = g * (Rational(1) / Rational(cg));

    Integer nf = max_abs_coefficient(fp);
    Integer ng = max_abs_coefficient(gp);
    Integer xi = 2 * (nf < ng ? nf : ng) + 2;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Polynomial fe = eval_at_integer(fp, static_cast<std::size_t>(v), xi);
        Polynomial ge = eval_at_integer(gp, static_cast<std::size_t>(v), xi);
        if (fe.is_zero() || ge.is_zero()) {
            // Unlucky evaluation point (possible when norms are imbalanced).
            xi = xi * 73794 / 27011 + 1;
            continue;
        }
        auto h = gcd_heuristic(fe, ge, depth + 1);
        if (h) {
            Polynomial gamma =
                reconstruct_from_evaluation(*h, static_cast<std::size_t>(v), xi);
            if (!gamma.is_zero()) {
                gamma = normalize_primitive(gamma);
                Polynomial q(f.nvars());
                if (try_exact_divide(fp, gamma, q) && try_exact_divide(gp, gamma, q))
                    return gamma * content;
            }
        }
        xi = xi * 73794 / 27011 + 1; // grow ~2.73x per retry
    }
    return std::nullopt;
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    if (a.is_constant() || b.is_constant())
        return Polynomial::constant(a.nvars(), Rational(1));

    Polynomial fa = normalize_primitive(a);
    Polynomial fb = normalize_primitive(b);
    if (auto h = gcd_heuristic(fa, fb, 0)) return normalize_primitive(*h);
    return poly_gcd_prs(fa, fb);
}

} // namespace lcskit
