#include "lcskit/hodge.hpp"

#include <random>
#include <sstream>

namespace lcskit {

namespace {

std::vector<IndexTuple> tuples_of_degree(std::size_t dim, int k) {
    std::vector<IndexTuple> out;
    IndexTuple cur;
    auto rec = [&](auto&& self, std::size_t start, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + static_cast<std::size_t>(left) <= dim; ++i) {
            cur.push_back(static_cast<std::uint8_t>(i));
            self(self, i + 1, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, k);
    return out;
}

// Sign of dx_A ^ dx_{A^c} relative to the full top monomial.
int complement_sign(const IndexTuple& a, std::size_t dim, IndexTuple& complement) {
    complement.clear();
    std::size_t ai = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        if (ai < a.size() && a[ai] == i) {
            ++ai;
        } else {
            complement.push_back(static_cast<std::uint8_t>(i));
        }
    }
    // Count inversions of the concatenation (a, complement).
    int inv = 0;
    for (std::uint8_t x : a)
        for (std::uint8_t y : complement)
            if (x > y) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

} // namespace

HLContext::HLContext(LcsStructure s)
    : s_(std::move(s)), pairing_(s_.omega), vol_coeff_(volume_coefficient(s_)) {
    if (vol_coeff_.is_zero())
        throw Error(ErrorKind::DegenerateStructure, "omega^n/n! vanishes identically");
    lee_sign_ = s_.lee_sign ? *s_.lee_sign
                            : measure_lee_sign(s_.omega, s_.theta).value_or(0);
    std::size_t dim = s_.chart.dimension();
    // Solve the defining identity on the monomial basis. Testing against
    // the degree-k basis monomial dx_A pins exactly the complementary
    // coefficient of star(dx_I), so the linear system is diagonal.
    for (int k = 0; k <= static_cast<int>(dim); ++k) {
        auto basis = tuples_of_degree(dim, k);
        for (const IndexTuple& target : basis) {
            DifferentialForm image(s_.chart);
            DifferentialForm target_form =
                DifferentialForm::monomial(s_.chart, target, ScalarExpr::one(s_.chart));
            IndexTuple complement;
            for (const IndexTuple& a : basis) {
                ScalarExpr p = pairing_.pair_monomials(a, target);
                if (p.is_zero()) continue;
                int sign = complement_sign(a, dim, complement);
                ScalarExpr u = p * vol_coeff_;
                if (sign < 0) u = -u;
                image.add_term(complement, u);
            }
            star_cache_.emplace(target, std::move(image));
        }
    }
}

DifferentialForm HLContext::star(const DifferentialForm& a) const {
    require_same_chart(a.chart(), s_.chart);
    DifferentialForm r(s_.chart);
    for (const auto& [tuple, coeff] : a.terms()) {
        r = r + star_cache_.at(tuple) * coeff;
    }
    return r;
}

DifferentialForm HLContext::lefschetz_L(const DifferentialForm& a) const {
    return wedge(s_.omega, a);
}

DifferentialForm HLContext::lefschetz_Lstar(const DifferentialForm& a) const {
    return -star(lefschetz_L(star(a)));
}

DifferentialForm HLContext::symplectic_delta(const DifferentialForm& a) const {
    DifferentialForm r(s_.chart);
    for (int k : a.degrees()) {
        DifferentialForm part = star(exterior_derivative(star(a.component(k))));
        if (k % 2 == 0) part = -part; // (-1)^{k+1}
        r = r + part;
    }
    return r;
}

DifferentialForm HLContext::symplectic_delta_commutator(const DifferentialForm& a) const {
    int n = static_cast<int>(s_.half_dim);
    DifferentialForm r(s_.chart);
    for (int j : a.degrees()) {
        DifferentialForm aj = a.component(j);
        int w_inner = -lee_sign_ * (n - j);
        int w_outer = -lee_sign_ * (n - j + 1);
        DifferentialForm part =
            lichnerowicz_d(s_, {lefschetz_Lstar(aj), w_outer}).form -
            lefschetz_Lstar(lichnerowicz_d(s_, {aj, w_inner}).form);
        r = r + part;
    }
    return r;
}

std::vector<HLContext::SpectrumEntry> HLContext::commutator_spectrum() const {
    std::vector<SpectrumEntry> out;
    std::size_t dim = s_.chart.dimension();
    for (int k = 0; k <= static_cast<int>(dim); ++k) {
        SpectrumEntry entry{k, true, ScalarExpr::zero(s_.chart), ""};
        bool first = true;
        for (const IndexTuple& t : tuples_of_degree(dim, k)) {
            DifferentialForm e =
                DifferentialForm::monomial(s_.chart, t, ScalarExpr::one(s_.chart));
            DifferentialForm commutator =
                lefschetz_L(lefschetz_Lstar(e)) - lefschetz_Lstar(lefschetz_L(e));
            ScalarExpr diag = commutator.coefficient(t);
            DifferentialForm offdiag =
                commutator - DifferentialForm::monomial(s_.chart, t, diag);
            if (!offdiag.is_zero()) {
                entry.scalar = false;
                entry.witness = DifferentialForm::monomial(s_.chart, t,
                                                           ScalarExpr::one(s_.chart))
                                    .to_string();
                break;
            }
            if (first) {
                entry.value = diag;
                first = false;
            } else if (!(entry.value == diag)) {
                entry.scalar = false;
                entry.witness = "eigenvalue varies across degree " + std::to_string(k);
                break;
            }
        }
        out.push_back(std::move(entry));
    }
    return out;
}

WeightedForm lichnerowicz_d(const LcsStructure& s, const WeightedForm& wf) {
    require_same_chart(s.chart, wf.form.chart());
    if (!exterior_derivative(s.theta).is_zero())
        throw Error(ErrorKind::InvalidLeeForm, "Lee form is not closed");
    DifferentialForm twisted =
        exterior_derivative(wf.form) -
        wedge(s.theta, wf.form) * ScalarExpr::constant(s.chart, Rational(wf.weight));
    return {std::move(twisted), wf.weight};
}

DifferentialForm random_form(const Chart& chart, int degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<std::size_t> pick_var(0, chart.scalar_var_count() - 1);
    std::uniform_int_distribution<int> n_monomials(1, 3);
    std::uniform_int_distribution<int> mono_degree(0, 2);

    DifferentialForm f(chart);
    for (const IndexTuple& t : [&] {
             std::vector<IndexTuple> ts;
             IndexTuple cur;
             auto rec = [&](auto&& self, std::size_t start, int left) -> void {
                 if (left == 0) {
                     ts.push_back(cur);
                     return;
                 }
                 for (std::size_t i = start; i < chart.dimension(); ++i) {
                     cur.push_back(static_cast<std::uint8_t>(i));
                     self(self, i + 1, left - 1);
                     cur.pop_back();
                 }
             };
             rec(rec, 0, degree);
             return ts;
         }()) {
        Polynomial p(chart.scalar_var_count());
        int terms = n_monomials(rng);
        for (int i = 0; i < terms; ++i) {
            Exponents e(chart.scalar_var_count(), 0);
            int d = mono_degree(rng);
            for (int j = 0; j < d; ++j) e[pick_var(rng)] += 1;
            p.add_term(e, Rational(coeff(rng)));
        }
        f.add_term(t, ScalarExpr::from_polynomial(chart, std::move(p)));
    }
    return f;
}

RelationReport scan_relations(const HLContext& ctx, int trials, std::uint64_t seed) {
    const LcsStructure& s = ctx.structure();
    RelationReport report;
    report.trials = trials;
    report.seed = seed;
    report.theta_zero = s.theta.is_zero();
    int dim = static_cast<int>(s.chart.dimension());

    // survivors[(k, o1, o2)]: the identity held on every degree-k trial.
    std::map<std::tuple<int, int, int>, bool> holds;
    for (int k = 0; k <= dim; ++k)
        for (int o1 = -2; o1 <= 2; ++o1)
            for (int o2 = -2; o2 <= 2; ++o2) holds[{k, o1, o2}] = true;
    std::vector<int> tested(static_cast<std::size_t>(dim) + 1, 0);

    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        int k = trial % (dim + 1); // round-robin: every degree gets trials
        DifferentialForm a = random_form(s.chart, k, rng());
        if (a.is_zero()) continue;
        ++tested[static_cast<std::size_t>(k)];
        DifferentialForm delta_a = ctx.symplectic_delta(a);
        for (int o1 = -2; o1 <= 2; ++o1) {
            WeightedForm da = lichnerowicz_d(s, {a, k + o1});
            DifferentialForm lhs = ctx.symplectic_delta(da.form);
            for (int o2 = -2; o2 <= 2; ++o2) {
                bool& ok = holds[{k, o1, o2}];
                if (!ok) continue;
                WeightedForm dd = lichnerowicz_d(s, {delta_a, k + o2});
                if (!(lhs + dd.form).is_zero()) ok = false;
            }
        }
    }
    for (const auto& [key, ok] : holds) {
        if (ok && tested[static_cast<std::size_t>(std::get<0>(key))] > 0)
            report.vanishing_offsets.push_back(key);
    }
    return report;
}

std::string RelationReport::to_text() const {
    std::ostringstream out;
    out << "relation scan: trials=" << trials << " seed=" << seed;
    if (theta_zero) out << " (theta = 0: weight-independent)";
    out << "\n";
    if (vanishing_offsets.empty()) {
        out << "  no vanishing offsets in window [-2,2]^2\n";
    } else {
        for (const auto& [k, o1, o2] : vanishing_offsets)
            out << "  deg " << k << ": delta d_{k" << (o1 >= 0 ? "+" : "") << o1
                << "} + d_{k" << (o2 >= 0 ? "+" : "") << o2 << "} delta = 0\n";
    }
    return out.str();
}

} // namespace lcskit
