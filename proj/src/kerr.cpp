#include "lcskit/kerr.hpp"

#include <ostream>
#include <random>
#include <sstream>

namespace lcskit {

ProjectivePoint ProjectivePoint::make(Rational r, Rational x, Rational z, Rational a) {
    ProjectivePoint p{{std::move(r), std::move(x), std::move(z), std::move(a)}};
    if (p.v[0] == 0 && p.v[1] == 0 && p.v[2] == 0 && p.v[3] == 0)
        throw Error(ErrorKind::InvalidPoint, "projective point needs a nonzero coordinate");
    return p;
}

ProjectivePoint ProjectivePoint::canonical() const {
    for (const Rational& c : v) {
        if (c != 0) {
            ProjectivePoint p = *this;
            for (Rational& x : p.v) x /= c;
            return p;
        }
    }
    throw Error(ErrorKind::InvalidPoint, "zero vector");
}

bool ProjectivePoint::operator==(const ProjectivePoint& o) const {
    return canonical().v == o.canonical().v;
}

Rational quartic_polynomial(const Rational& r, const Rational& x, const Rational& z,
                            const Rational& a) {
    return r * r * (x * x + z * z) - a * a * (r * r - z * z);
}

Rational quartic_eval(const ProjectivePoint& p) {
    ProjectivePoint c = p.canonical();
    return quartic_polynomial(c.v[0], c.v[1], c.v[2], c.v[3]);
}

ConicReport fiber(const Rational& theta_p) {
    Rational t2 = theta_p * theta_p;
    if (t2 > 1)
        throw Error(ErrorKind::EmptyFiber, "no fiber for |theta_p| > 1");
    ConicReport r;
    r.ecc2 = 1 - t2;
    if (t2 == 1) {
        // kappa^2 + rho^2 = 0: the single point (0, 0).
        r.type = ConicType::point;
        r.semi_axis_kappa2 = 0;
        r.semi_axis_rho2 = 0;
    } else if (t2 == 0) {
        // kappa^2 = 1: the line pair kappa = +-1, rho free.
        r.type = ConicType::line_pair;
        r.semi_axis_kappa2 = 1;
        r.semi_axis_rho2 = 0;
        r.rho_unbounded = true;
    } else {
        r.type = ConicType::ellipse;
        r.semi_axis_kappa2 = 1 - t2;
        r.semi_axis_rho2 = (1 - t2) / t2;
    }
    return r;
}

bool fiber_membership_sq(const Rational& theta_sq, const Rational& kappa,
                         const Rational& rho) {
    if (rho == 0)
        throw Error(ErrorKind::InvalidFiberPoint, "rho must be nonzero");
    if (theta_sq < 0 || theta_sq > 1)
        throw Error(ErrorKind::EmptyFiber, "theta_p^2 must lie in [0, 1]");
    bool conic = kappa * kappa + theta_sq * rho * rho == 1 - theta_sq;
    // Q([rho : kappa : zeta : 1]) with zeta^2 = theta_sq rho^2 is rational
    // even when theta_p itself is not.
    Rational zeta2 = theta_sq * rho * rho;
    Rational quartic_value =
        rho * rho * (kappa * kappa + zeta2) - (rho * rho - zeta2);
    bool quartic = quartic_value == 0;
    if (conic != quartic)
        throw Error(ErrorKind::InvalidFiberPoint,
                    "conic and quartic membership disagree (internal inconsistency)");
    return conic;
}

bool fiber_membership(const Rational& theta_p, const Rational& kappa, const Rational& rho) {
    return fiber_membership_sq(theta_p * theta_p, kappa, rho);
}

namespace {

Chart quartic_chart() { return Chart::cartesian({"r", "x", "z", "a"}); }

} // namespace

SplitQuartic degenerate_a0() {
    Chart chart = quartic_chart();
    ScalarExpr r = ScalarExpr::coordinate(chart, 0);
    ScalarExpr x = ScalarExpr::coordinate(chart, 1);
    ScalarExpr z = ScalarExpr::coordinate(chart, 2);
    SplitQuartic q{
        r * r * (x * x + z * z),
        r * r,
        x * x + z * z,
        2,
        2,
    };
    return q;
}

CoordinateMap kerr_schild_map() {
    Chart source({{"r", CoordKind::cartesian},
                  {"th", CoordKind::angular},
                  {"ph", CoordKind::angular},
                  {"a", CoordKind::cartesian}});
    Chart target = Chart::cartesian({"x", "y", "z"});
    ScalarExpr r = ScalarExpr::coordinate(source, 0);
    ScalarExpr a = ScalarExpr::coordinate(source, 3);
    ScalarExpr sin_th = ScalarExpr::sin_of(source, 1);
    ScalarExpr cos_th = ScalarExpr::cos_of(source, 1);
    ScalarExpr sin_ph = ScalarExpr::sin_of(source, 2);
    ScalarExpr cos_ph = ScalarExpr::cos_of(source, 2);
    std::vector<ScalarExpr> comps{
        sin_th * (r * cos_ph + a * sin_ph),
        sin_th * (r * sin_ph - a * cos_ph),
        r * cos_th,
    };
    return CoordinateMap(std::move(source), std::move(target), std::move(comps));
}

IdentityReport verify_ks_identity() {
    CoordinateMap ks = kerr_schild_map();
    const Chart& src = ks.source();
    const Chart& tgt = ks.target();

    ScalarExpr x = ScalarExpr::coordinate(tgt, 0);
    ScalarExpr y = ScalarExpr::coordinate(tgt, 1);
    ScalarExpr z = ScalarExpr::coordinate(tgt, 2);
    ScalarExpr computed = ks.pull_scalar(x * x + y * y + z * z);

    // The printed right-hand side a^2 (1 - (z/r)^2), with z = r cos(theta).
    ScalarExpr a = ScalarExpr::coordinate(src, 3);
    ScalarExpr r = ScalarExpr::coordinate(src, 0);
    ScalarExpr zr = ks.pull_scalar(z) / r;
    ScalarExpr printed = a * a * (ScalarExpr::one(src) - zr * zr);

    IdentityReport report;
    report.computed = computed.to_string();
    report.printed = printed.to_string();
    report.difference = (computed - printed).to_string();
    report.matches = computed == printed;
    return report;
}

FormReport kerr_two_form() {
    Chart chart({{"up", CoordKind::cartesian},
                 {"um", CoordKind::cartesian},
                 {"th", CoordKind::angular},
                 {"ph", CoordKind::angular}},
                {"a"});
    ScalarExpr up = ScalarExpr::coordinate(chart, 0);
    ScalarExpr um = ScalarExpr::coordinate(chart, 1);
    ScalarExpr a = ScalarExpr::parameter(chart, 0);
    ScalarExpr sin_th = ScalarExpr::sin_of(chart, 2);
    ScalarExpr half = ScalarExpr::constant(chart, Rational(1, 2));

    ScalarExpr t = (up - um) * half;
    ScalarExpr big_theta = a * t * sin_th * sin_th;

    DifferentialForm dup = DifferentialForm::differential(chart, 0);
    DifferentialForm dum = DifferentialForm::differential(chart, 1);
    DifferentialForm dphi = DifferentialForm::differential(chart, 3);

    DifferentialForm lambda = dup + dphi * big_theta;
    DifferentialForm computed = exterior_derivative(lambda * t);

    DifferentialForm printed =
        wedge(dup, dum) * half + wedge(scalar_differential(big_theta), dphi);

    FormReport report;
    report.computed = computed.to_string();
    report.printed = printed.to_string();
    report.difference = (computed - printed).to_string();
    report.matches = computed == printed;
    report.closed = exterior_derivative(computed).is_zero();

    DifferentialForm square = wedge(computed, computed);
    IndexTuple top{0, 1, 2, 3};
    ScalarExpr coeff = square.coefficient(top);
    report.degeneracy_locus =
        coeff.is_zero() ? "everything"
                        : polynomial_to_string(chart, coeff.num()) + " = 0";
    return report;
}

std::vector<PencilRow> sample_pencil(const Rational& a, int count, std::uint64_t seed) {
    if (count < 1)
        throw Error(ErrorKind::UsageError, "sample count must be >= 1");
    if (a <= 0)
        throw Error(ErrorKind::UsageError, "ring radius a must be positive");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(1, 20);
    std::uniform_int_distribution<int> coin(0, 1);

    std::vector<PencilRow> rows;
    rows.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        // theta_p = (1-u^2)/(1+u^2) makes 1 - theta_p^2 = (2u/(1+u^2))^2 a
        // rational square, so the fiber carries rational points.
        int un = small(rng), ud = small(rng);
        while (un == ud) un = small(rng);
        Rational u(un, ud);
        Rational u2 = u * u;
        Rational theta_p = (1 - u2) / (1 + u2);
        if (coin(rng)) theta_p = -theta_p;
        Rational sigma = 2 * u / (1 + u2); // sigma^2 = 1 - theta_p^2

        // Rational point on kappa^2 + (theta_p rho)^2 = sigma^2.
        int mn = small(rng), md = small(rng);
        Rational m(mn, md);
        Rational m2 = m * m;
        Rational kappa = sigma * (1 - m2) / (1 + m2);
        Rational rho = sigma * 2 * m / ((1 + m2) * theta_p);
        if (rho < 0) rho = -rho; // the conic is even in rho


        ConicReport conic = fiber(theta_p);
        PencilRow row{i,     theta_p,
                      conic.ecc2,  kappa,
                      rho,   conic.semi_axis_kappa2,
                      conic.semi_axis_rho2};
        // Exact check: the emitted point lies on the quartic (scaled by a).
        Rational zeta = theta_p * rho;
        if (quartic_polynomial(rho * a, kappa * a, zeta * a, a) != 0)
            throw Error(ErrorKind::InvalidFiberPoint, "sampled point misses the quartic");
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_pencil_csv(std::ostream& out, const std::vector<PencilRow>& rows) {
    out << "index,theta_p_num,theta_p_den,ecc2_num,ecc2_den,"
           "kappa_num,kappa_den,rho_num,rho_den\n";
    for (const auto& r : rows) {
        out << r.index << "," << rat_num(r.theta_p).str() << "," << rat_den(r.theta_p).str()
            << "," << rat_num(r.ecc2).str() << "," << rat_den(r.ecc2).str() << ","
            << rat_num(r.kappa).str() << "," << rat_den(r.kappa).str() << ","
            << rat_num(r.rho).str() << "," << rat_den(r.rho).str() << "\n";
    }
}

std::string ConicReport::to_text() const {
    std::ostringstream out;
    switch (type) {
        case ConicType::ellipse: out << "ellipse"; break;
        case ConicType::line_pair: out << "line pair kappa = +-1"; break;
        case ConicType::point: out << "point (0, 0)"; break;
    }
    out << ", e^2 = " << rat_to_string(ecc2);
    out << ", kappa semi-axis^2 = " << rat_to_string(semi_axis_kappa2);
    if (rho_unbounded)
        out << ", rho unbounded";
    else
        out << ", rho semi-axis^2 = " << rat_to_string(semi_axis_rho2);
    return out.str();
}

std::string FormReport::to_text() const {
    std::ostringstream out;
    out << "d(t lambda) = " << computed << "\n";
    out << "printed form = " << printed << "\n";
    out << "difference   = " << difference << "\n";
    out << "closed: " << (closed ? "yes" : "no")
        << "; degeneracy locus: " << degeneracy_locus << "\n";
    return out.str();
}

} // namespace lcskit
