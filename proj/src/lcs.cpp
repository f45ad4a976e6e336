#include "lcskit/lcs.hpp"

namespace lcskit {

namespace {

void require_degree(const DifferentialForm& f, int degree, const char* what) {
    if (!f.is_zero() && f.degree() != std::optional<int>(degree))
        throw Error(ErrorKind::DegreeMismatch,
                    std::string(what) + " must be homogeneous of degree " +
                        std::to_string(degree));
}

// The Zariski-closed degeneracy locus of a top-form coefficient: the
// numerator polynomial, or empty when it is a nonzero constant.
std::string locus_of(const ScalarExpr& coeff) {
    if (coeff.is_zero()) return "everything";
    if (coeff.num().is_constant()) return "";
    return polynomial_to_string(coeff.chart(), coeff.num()) + " = 0";
}

} // namespace

LcsStructure::LcsStructure(Chart c, DifferentialForm o, DifferentialForm t)
    : chart(std::move(c)), omega(std::move(o)), theta(std::move(t)) {
    require_same_chart(chart, omega.chart());
    require_same_chart(chart, theta.chart());
    if (chart.dimension() % 2 != 0)
        throw Error(ErrorKind::DimensionError,
                    "lcs structures need an even-dimensional chart");
    require_degree(omega, 2, "omega");
    require_degree(theta, 1, "theta");
    half_dim = chart.dimension() / 2;
}

ContactForm::ContactForm(Chart c, DifferentialForm a)
    : chart(std::move(c)), alpha(std::move(a)) {
    require_same_chart(chart, alpha.chart());
    if (chart.dimension() % 2 != 1)
        throw Error(ErrorKind::DimensionError,
                    "contact forms need an odd-dimensional chart");
    require_degree(alpha, 1, "alpha");
}

DifferentialForm volume_form(const LcsStructure& s) {
    DifferentialForm top = wedge_power(s.omega, static_cast<unsigned>(s.half_dim));
    Rational factorial(1);
    for (std::size_t i = 2; i <= s.half_dim; ++i) factorial *= Rational(i);
    return top * ScalarExpr::constant(s.chart, Rational(1) / factorial);
}

ScalarExpr volume_coefficient(const LcsStructure& s) {
    IndexTuple full;
    for (std::size_t i = 0; i < s.chart.dimension(); ++i)
        full.push_back(static_cast<std::uint8_t>(i));
    return volume_form(s).coefficient(full);
}

std::optional<int> measure_lee_sign(const DifferentialForm& omega,
                                    const DifferentialForm& theta) {
    DifferentialForm d_omega = exterior_derivative(omega);
    DifferentialForm tw = wedge(theta, omega);
    if (d_omega.is_zero() && tw.is_zero()) return 0;
    if (d_omega == tw) return 1;
    if (d_omega == -tw) return -1;
    return std::nullopt;
}

VerificationReport verify_lcs(LcsStructure& s) {
    VerificationReport r = verify_lcs(static_cast<const LcsStructure&>(s));
    if (const Check* c = r.find("lee-sign"); c && c->status == CheckStatus::pass) {
        if (c->witness == "+1") s.lee_sign = 1;
        else if (c->witness == "-1") s.lee_sign = -1;
        else s.lee_sign = 0;
    }
    return r;
}

VerificationReport verify_lcs(const LcsStructure& s) {
    VerificationReport r;
    r.subject = "lcs structure";

    DifferentialForm d_theta = exterior_derivative(s.theta);
    r.add("lee-closed", d_theta.is_zero(),
          d_theta.is_zero() ? "d(theta) = 0" : "d(theta) = " + d_theta.to_string());

    auto sign = measure_lee_sign(s.omega, s.theta);
    if (sign) {
        r.add("lee-sign", CheckStatus::pass,
              *sign == 0 ? "any" : (*sign > 0 ? "+1" : "-1"));
    } else {
        DifferentialForm defect = exterior_derivative(s.omega) - wedge(s.theta, s.omega);
        r.add("lee-sign", CheckStatus::fail,
              "no sign: d(omega) - theta^omega = " + defect.to_string());
    }

    ScalarExpr top = volume_coefficient(s);
    r.add("nondegenerate", !top.is_zero(), "omega^n/n! coefficient: " + top.to_string());
    std::string locus = locus_of(top);
    r.add("degeneracy-locus", CheckStatus::reported, locus.empty() ? "none" : locus);
    return r;
}

VerificationReport verify_contact(const ContactForm& c) {
    VerificationReport r;
    r.subject = "contact form";
    std::size_t m = c.chart.dimension() / 2;
    DifferentialForm vol =
        wedge(c.alpha, wedge_power(exterior_derivative(c.alpha), static_cast<unsigned>(m)));
    IndexTuple full;
    for (std::size_t i = 0; i < c.chart.dimension(); ++i)
        full.push_back(static_cast<std::uint8_t>(i));
    ScalarExpr top = vol.coefficient(full);
    r.add("contact-volume", !top.is_zero(),
          "alpha^(d alpha)^m = " + vol.to_string());
    std::string locus = locus_of(top);
    r.add("vanishing-locus", CheckStatus::reported, locus.empty() ? "none" : locus);
    return r;
}

LcsStructure build_collar(const ContactForm& c, const std::string& t_name) {
    VerificationReport contact = verify_contact(c);
    if (!contact.all_passed())
        throw Error(ErrorKind::InvalidContact,
                    "contact condition fails: " + contact.find("contact-volume")->witness);

    std::vector<CoordinateSymbol> coords;
    coords.push_back({t_name, CoordKind::collar});
    for (const auto& cs : c.chart.coords()) coords.push_back(cs);
    Chart collar(std::move(coords), c.chart.params());

    // Projection (0,1] x Y -> Y transports alpha to the collar chart.
    std::vector<ScalarExpr> comps;
    for (std::size_t i = 0; i < c.chart.dimension(); ++i)
        comps.push_back(ScalarExpr::coordinate(collar, i + 1));
    CoordinateMap projection(collar, c.chart, std::move(comps));
    DifferentialForm alpha = pullback(projection, c.alpha);

    ScalarExpr t = ScalarExpr::coordinate(collar, 0);
    DifferentialForm t_alpha = alpha * t;
    DifferentialForm omega = exterior_derivative(t_alpha) * (-t.inverse());
    DifferentialForm theta = DifferentialForm::differential(collar, 0) * t.inverse();

    LcsStructure s(collar, std::move(omega), std::move(theta));
    s.lee_sign = measure_lee_sign(s.omega, s.theta).value_or(0);
    return s;
}

VerificationReport verify_morphism(const LcsMorphism& m) {
    VerificationReport r;
    r.subject = "lcs morphism";
    require_same_chart(m.map.source(), m.source.chart);
    require_same_chart(m.map.target(), m.target.chart);
    require_same_chart(m.u.chart(), m.source.chart);

    DifferentialForm pulled_omega = pullback(m.map, m.target.omega);
    DifferentialForm pulled_theta = pullback(m.map, m.target.theta);
    DifferentialForm du = scalar_differential(m.u);

    bool literal_omega = pulled_omega == m.source.omega;
    bool literal_theta = pulled_theta == m.source.theta + du;
    r.add("literal-omega", literal_omega,
          literal_omega ? "" : "phi*omega = " + pulled_omega.to_string());
    r.add("literal-theta", literal_theta,
          literal_theta ? "" : "phi*theta = " + pulled_theta.to_string());

    bool u_nonzero = !m.u.is_zero();
    bool conformal_omega = u_nonzero && pulled_omega == m.source.omega * m.u;
    bool conformal_theta =
        u_nonzero && pulled_theta == m.source.theta + du * m.u.inverse();
    r.add("conformal-omega", conformal_omega,
          conformal_omega ? "u = " + m.u.to_string()
                          : "phi*omega = " + pulled_omega.to_string());
    r.add("conformal-theta", conformal_theta,
          conformal_theta ? "" : "phi*theta = " + pulled_theta.to_string());

    bool literal = literal_omega && literal_theta;
    bool conformal = conformal_omega && conformal_theta;
    r.add("convention",
          literal || conformal ? CheckStatus::pass : CheckStatus::fail,
          literal && conformal ? "both" : literal ? "literal" : conformal ? "conformal" : "neither");
    return r;
}

std::pair<DifferentialForm, DifferentialForm> restrict_to_boundary(const LcsStructure& s) {
    auto collar = s.chart.find_collar_coord();
    if (!collar)
        throw Error(ErrorKind::NotACollar, "chart has no collar-parameter coordinate");

    std::vector<CoordinateSymbol> coords;
    for (std::size_t i = 0; i < s.chart.dimension(); ++i)
        if (i != *collar) coords.push_back(s.chart.coords()[i]);
    Chart boundary(std::move(coords), s.chart.params());

    // Substitution images: collar coordinate to 1, the rest to themselves.
    std::vector<ScalarExpr> images;
    const auto& vars = s.chart.scalar_vars();
    for (const auto& v : vars) {
        switch (v.role) {
            case ScalarVar::Role::coordinate:
                if (v.owner == *collar) {
                    images.push_back(ScalarExpr::one(boundary));
                } else {
                    std::size_t shifted = v.owner > *collar ? v.owner - 1 : v.owner;
                    images.push_back(ScalarExpr::coordinate(boundary, shifted));
                }
                break;
            case ScalarVar::Role::sin:
            case ScalarVar::Role::cos: {
                std::size_t shifted = v.owner > *collar ? v.owner - 1 : v.owner;
                images.push_back(v.role == ScalarVar::Role::sin
                                     ? ScalarExpr::sin_of(boundary, shifted)
                                     : ScalarExpr::cos_of(boundary, shifted));
                break;
            }
            case ScalarVar::Role::parameter:
                images.push_back(ScalarExpr::parameter(boundary, v.owner));
                break;
        }
    }

    auto restrict_form = [&](const DifferentialForm& f) {
        DifferentialForm out(boundary);
        for (const auto& [tuple, coeff] : f.terms()) {
            bool has_dt = false;
            IndexTuple shifted;
            for (std::uint8_t idx : tuple) {
                if (idx == *collar) { has_dt = true; break; }
                shifted.push_back(static_cast<std::uint8_t>(idx > *collar ? idx - 1 : idx));
            }
            if (has_dt) continue;
            out.add_term(shifted, coeff.substitute(images));
        }
        return out;
    };
    return {restrict_form(s.omega), restrict_form(s.theta)};
}

} // namespace lcskit
