// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exits nonzero when any criterion fails.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lcskit/dga.hpp"
#include "lcskit/hodge.hpp"
#include "lcskit/kerr.hpp"
#include "lcskit/lcs.hpp"
#include "lcskit/parse.hpp"

using namespace lcskit;

namespace {

int failures = 0;

void criterion(int index, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << index << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

Chart r2() { return Chart::cartesian({"x", "y"}); }
Chart r4() { return Chart::cartesian({"x1", "y1", "x2", "y2"}); }

LcsStructure standard(const Chart& chart, const std::string& omega) {
    return LcsStructure(chart, parse_form(chart, omega), DifferentialForm::zero(chart));
}

std::vector<IndexTuple> all_tuples(std::size_t dim) {
    std::vector<IndexTuple> out{{}};
    for (std::size_t i = 0; i < dim; ++i) {
        std::size_t n = out.size();
        for (std::size_t j = 0; j < n; ++j) {
            IndexTuple t = out[j];
            t.push_back(static_cast<std::uint8_t>(i));
            out.push_back(std::move(t));
        }
    }
    return out;
}

// 1. Exterior-calculus core properties, >= 500 randomized cases each.
void criterion_exterior() {
    std::mt19937_64 rng(101);
    Chart charts[] = {r2(), r4()};
    bool d2 = true, graded = true, leibniz = true, natural = true;
    int cases = 0;
    while (cases < 500) {
        for (const Chart& chart : charts) {
            int dim = static_cast<int>(chart.dimension());
            int ka = static_cast<int>(rng() % (dim + 1));
            int kb = static_cast<int>(rng() % (dim + 1));
            DifferentialForm a = random_form(chart, ka, rng());
            DifferentialForm b = random_form(chart, kb, rng());
            if (!exterior_derivative(exterior_derivative(a)).is_zero()) d2 = false;
            DifferentialForm ba = wedge(b, a);
            if ((ka * kb) % 2 != 0) ba = -ba;
            if (!(wedge(a, b) == ba)) graded = false;
            DifferentialForm rhs = wedge(exterior_derivative(a), b) +
                                   (ka % 2 == 0 ? wedge(a, exterior_derivative(b))
                                                : -wedge(a, exterior_derivative(b)));
            if (!(exterior_derivative(wedge(a, b)) == rhs)) leibniz = false;
            ++cases;
        }
    }
    // Pullback naturality along random polynomial maps.
    Chart source = r2();
    Chart target = Chart::cartesian({"x", "y", "z"});
    for (int i = 0; i < 500; ++i) {
        std::vector<ScalarExpr> comps;
        for (int c = 0; c < 3; ++c) {
            Polynomial p(source.scalar_var_count());
            Exponents e(source.scalar_var_count(), 0);
            e[rng() % source.scalar_var_count()] += 1;
            p.add_term(e, Rational(static_cast<int>(rng() % 5) - 2));
            Exponents e2(source.scalar_var_count(), 0);
            e2[rng() % source.scalar_var_count()] += 1;
            e2[rng() % source.scalar_var_count()] += 1;
            p.add_term(e2, Rational(static_cast<int>(rng() % 3)));
            comps.push_back(ScalarExpr::from_polynomial(source, p));
        }
        CoordinateMap f(source, target, comps);
        DifferentialForm a = random_form(target, static_cast<int>(rng() % 3), rng());
        DifferentialForm b = random_form(target, static_cast<int>(rng() % 2), rng());
        if (!(pullback(f, wedge(a, b)) == wedge(pullback(f, a), pullback(f, b))))
            natural = false;
        if (!(pullback(f, exterior_derivative(a)) == exterior_derivative(pullback(f, a))))
            natural = false;
    }
    criterion(1, "exterior calculus core (d^2, graded commutativity, Leibniz, naturality)",
              d2 && graded && leibniz && natural);
}

// 2. Star defining identity and involutivity on all basis monomial pairs.
void criterion_star() {
    bool ok = true;
    for (LcsStructure s : {standard(r2(), "dx^dy"), standard(r4(), "dx1^dy1 + dx2^dy2")}) {
        HLContext ctx(s);
        DifferentialForm vol = volume_form(s);
        auto tuples = all_tuples(s.chart.dimension());
        for (const auto& ta : tuples) {
            DifferentialForm a =
                DifferentialForm::monomial(s.chart, ta, ScalarExpr::one(s.chart));
            if (!(ctx.star(ctx.star(a)) == a)) ok = false;
            for (const auto& tb : tuples) {
                if (ta.size() != tb.size()) continue;
                DifferentialForm b =
                    DifferentialForm::monomial(s.chart, tb, ScalarExpr::one(s.chart));
                if (!(wedge(a, ctx.star(b)) == vol * ctx.pairing().pair_monomials(ta, tb)))
                    ok = false;
            }
        }
    }
    criterion(2, "symplectic star defining identity and star^2 = id (R^2, R^4)", ok);
}

// 3. sl2 spectrum: scalar action, unit steps, zero at middle degree.
void criterion_spectrum() {
    bool ok = true;
    std::string measured;
    for (LcsStructure s : {standard(r2(), "dx^dy"), standard(r4(), "dx1^dy1 + dx2^dy2")}) {
        HLContext ctx(s);
        auto spectrum = ctx.commutator_spectrum();
        int n = static_cast<int>(s.half_dim);
        for (std::size_t k = 0; k < spectrum.size(); ++k) {
            if (!spectrum[k].scalar) ok = false;
            if (k + 1 < spectrum.size() &&
                !(spectrum[k].value - spectrum[k + 1].value == ScalarExpr::one(s.chart)))
                ok = false;
        }
        if (!spectrum[static_cast<std::size_t>(n)].value.is_zero()) ok = false;
        measured += "2n=" + std::to_string(2 * n) +
                    ": c_0 = " + spectrum[0].value.to_string() +
                    " (printed 2n-k gives " + std::to_string(2 * n) + "); ";
    }
    criterion(3, "sl2 commutator spectrum (scalar, unit steps, c_n = 0)", ok, measured);
}

// 4. Twisted differentials on the collar chart.
void criterion_twisted() {
    Chart y = Chart::cartesian({"x", "y", "z"});
    LcsStructure collar = build_collar(ContactForm(y, parse_form(y, "dz - y*dx")));
    HLContext ctx(collar);
    std::mt19937_64 rng(404);
    bool lich = true, delta2 = true, agree = true;
    for (int i = 0; i < 200; ++i) {
        int k = static_cast<int>(rng() % 5);
        DifferentialForm a = random_form(collar.chart, k, rng());
        for (int w = 0; w <= 4; ++w) {
            WeightedForm once = lichnerowicz_d(collar, {a, w});
            if (!lichnerowicz_d(collar, once).form.is_zero()) lich = false;
        }
        DifferentialForm da = ctx.symplectic_delta(a);
        if (!ctx.symplectic_delta(da).is_zero()) delta2 = false;
        if (!(da == ctx.symplectic_delta_commutator(a))) agree = false;
    }
    RelationReport scan = scan_relations(ctx, 20, 11);
    std::ostringstream offsets;
    for (const auto& [k, o1, o2] : scan.vanishing_offsets)
        offsets << "(deg " << k << ":" << o1 << "," << o2 << ")";
    criterion(4, "twisted differentials (d_k^2 = 0, delta^2 = 0, evaluators agree, scan nonempty)",
              lich && delta2 && agree && !scan.vanishing_offsets.empty(),
              "offsets " + offsets.str());
}

// 5. Collar construction with pinned signs.
void criterion_collar() {
    const int kExpectedLeeSign = -1;  // measured: d(omega) = -theta^omega
    const int kExpectedVolSign = +1;  // measured: omega^2 = +2 theta^alpha^d(alpha)
    Chart y = Chart::cartesian({"x", "y", "z"});
    std::vector<std::string> alphas = {
        "dz - y*dx",
        "dz + x*dy",
        "dz + x*dy - y*dx",
        "dz - y*dx + 2*x*dy",
        "dz + (x + y)*dy - y*dx",
        "dz - (y + x^2)*dx",
    };
    bool ok = true;
    for (const auto& text : alphas) {
        ContactForm alpha(y, parse_form(y, text));
        LcsStructure s = build_collar(alpha);
        if (!verify_lcs(s).all_passed()) ok = false;
        if (s.lee_sign != kExpectedLeeSign) ok = false;
        DifferentialForm alpha_c = parse_form(s.chart, text);
        DifferentialForm expected =
            wedge(s.theta, wedge(alpha_c, exterior_derivative(alpha_c))) *
            ScalarExpr::constant(s.chart, Rational(2 * kExpectedVolSign));
        if (!(wedge(s.omega, s.omega) == expected)) ok = false;
    }
    criterion(5, "collar construction (epsilon = -1, volume sign = +1, both constant)", ok);
}

// 6. DGA betti tables.
void criterion_dga() {
    auto family = [](const std::string& t) {
        return PresentedCDGA::parse("gen w1 : 1\ngen w2 : 2\nparam t = " + t +
                                    "\nd w1 = 0\nd w2 = t * w1 * w2\n");
    };
    bool ok = true;
    if (betti(family("0"), 10).ranks != std::vector<int>(11, 1)) ok = false;
    std::vector<int> twisted{1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    for (const std::string& t : {"1", "2", "-1/2"})
        if (betti(family(t), 10).ranks != twisted) ok = false;
    PresentedCDGA torus =
        PresentedCDGA::parse("gen e1 : 1\ngen e2 : 1\nd e1 = 0\nd e2 = 0\n");
    if (betti_twisted(torus, 0, 1, 2).ranks != std::vector<int>{0, 0, 0}) ok = false;
    criterion(6, "dga betti tables (t = 0 free model, t != 0 models, torus twist)", ok);
}

// 7. Kerr pencil checks with golden discrepancy expressions.
void criterion_kerr() {
    bool ok = true;
    std::string detail;

    Chart chart = Chart::cartesian({"r", "x", "z", "a"});
    ScalarExpr r = ScalarExpr::coordinate(chart, 0);
    ScalarExpr x = ScalarExpr::coordinate(chart, 1);
    ScalarExpr z = ScalarExpr::coordinate(chart, 2);
    ScalarExpr a = ScalarExpr::coordinate(chart, 3);
    ScalarExpr q = r * r * (x * x + z * z) - a * a * (r * r - z * z);
    ScalarExpr kappa = x / a, rho = r / a, zeta = z / a;
    ScalarExpr normalized =
        rho * rho * (kappa * kappa + zeta * zeta) - (rho * rho - zeta * zeta);
    if (!(q == normalized * a.pow(4))) ok = false;

    auto rows = sample_pencil(Rational(1), 100, 31337);
    for (const auto& row : rows) {
        if (row.ecc2 + row.theta_p * row.theta_p != 1) ok = false;
        Rational zval = row.theta_p * row.rho;
        if (quartic_polynomial(row.rho, row.kappa, zval, Rational(1)) != 0) ok = false;
    }

    SplitQuartic split = degenerate_a0();
    if (!(split.full == split.factor_r2 * split.factor_sum)) ok = false;
    Chart qc = split.full.chart();
    if (!(split.full == parse_scalar(qc, "r^2*x^2 + r^2*z^2"))) ok = false;

    IdentityReport ks = verify_ks_identity();
    if (ks.matches) ok = false; // the discrepancy is real and must be reported
    if (ks.difference != "r^2") {
        ok = false;
        detail += "ks difference: " + ks.difference + "; ";
    }
    IdentityReport ks2 = verify_ks_identity();
    if (ks.difference != ks2.difference) ok = false;

    FormReport tf = kerr_two_form();
    if (!tf.closed || tf.matches) ok = false;
    FormReport tf2 = kerr_two_form();
    if (tf.difference != tf2.difference || tf.difference.empty()) ok = false;
    if (tf.degeneracy_locus.find("sin(th)") == std::string::npos) ok = false;

    criterion(7, "kerr pencil (normalization, eccentricity, quartic membership, reports)",
              ok, detail);
}

// 8. CLI determinism: identical invocations give identical bytes.
#ifndef LCSKIT_CLI_PATH
#define LCSKIT_CLI_PATH "lcskit"
#endif

std::pair<int, std::string> run_cli(const std::string& args, const std::string& tag) {
    std::string out_path = "acceptance_cli_" + tag + ".out";
    std::string cmd = std::string(LCSKIT_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::remove(out_path.c_str());
    return {status, buf.str()};
}

void criterion_cli_determinism() {
    // Working files for the subcommands that read inputs.
    {
        std::ofstream chart("acceptance_r4.chart");
        chart << "coord x1\ncoord y1\ncoord x2\ncoord y2\n";
        std::ofstream pres("acceptance_family.dga");
        pres << "gen w1 : 1\ngen w2 : 2\nparam t = 1\nd w1 = 0\nd w2 = t * w1 * w2\n";
    }
    auto [cs, co] = run_cli("lcs collar \"dz - y*dx\" --chart-out acceptance_collar.chart "
                            "--structure-out acceptance_collar.lcs",
                            "collar");
    bool ok = cs == 0;

    std::vector<std::pair<std::string, std::string>> invocations = {
        {"check", "lcs check acceptance_r4.chart \"dx1^dy1 + dx2^dy2\" 0"},
        {"collar2", "lcs collar \"dz - y*dx\""},
        {"hl", "hl verify acceptance_collar.chart acceptance_collar.lcs --trials 10 --seed 3"},
        {"betti", "dga betti acceptance_family.dga --max-degree 10"},
        {"kerrv", "kerr verify"},
        {"kerrs", "kerr sample --a 1 --n 5 --seed 7"},
    };
    for (const auto& [tag, args] : invocations) {
        auto [s1, o1] = run_cli(args, tag + "_1");
        auto [s2, o2] = run_cli(args, tag + "_2");
        if (s1 != s2 || o1 != o2 || o1.empty()) ok = false;
    }

    // Exit-code contract samples.
    auto [bad_status, bad_out] = run_cli("lcs check acceptance_r4.chart \"dx1^^\" 0", "bad");
    (void)bad_out;
    bool exit2 = WEXITSTATUS(bad_status) == 2;
    auto [fail_status, fail_out] =
        run_cli("lcs check acceptance_r4.chart \"dx1^dy1\" 0", "degenerate");
    (void)fail_out;
    bool exit1 = WEXITSTATUS(fail_status) == 1;
    auto [zero_status, zero_out] = run_cli("kerr sample --a 1 --n 0", "zero");
    (void)zero_out;
    bool exit2b = WEXITSTATUS(zero_status) == 2;

    std::remove("acceptance_r4.chart");
    std::remove("acceptance_family.dga");
    std::remove("acceptance_collar.chart");
    std::remove("acceptance_collar.lcs");

    criterion(8, "CLI determinism and exit-code contract", ok && exit2 && exit1 && exit2b);
}

} // namespace

int main() {
    criterion_exterior();
    criterion_star();
    criterion_spectrum();
    criterion_twisted();
    criterion_collar();
    criterion_dga();
    criterion_kerr();
    criterion_cli_determinism();
    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return 1;
}
