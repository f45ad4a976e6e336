#include "lcskit/form.hpp"

#include <algorithm>
#include <sstream>

namespace lcskit {

DifferentialForm DifferentialForm::zero(const Chart& chart) {
    return DifferentialForm(chart);
}

DifferentialForm DifferentialForm::from_scalar(ScalarExpr s) {
    DifferentialForm f(s.chart());
    f.add_term({}, s);
    return f;
}

DifferentialForm DifferentialForm::differential(const Chart& chart, std::size_t coord) {
    if (coord >= chart.dimension())
        throw Error(ErrorKind::UnknownSymbol, "coordinate index out of range");
    DifferentialForm f(chart);
    f.add_term({static_cast<std::uint8_t>(coord)}, ScalarExpr::one(chart));
    return f;
}

DifferentialForm DifferentialForm::monomial(const Chart& chart, IndexTuple tuple,
                                            ScalarExpr c) {
    DifferentialForm f(chart);
    f.add_term(tuple, c);
    return f;
}

bool DifferentialForm::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

std::optional<int> DifferentialForm::degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return static_cast<int>(terms_.begin()->first.size());
}

int DifferentialForm::max_degree() const {
    if (terms_.empty()) return 0;
    return static_cast<int>(terms_.rbegin()->first.size());
}

DifferentialForm DifferentialForm::component(int degree) const {
    DifferentialForm r(chart_);
    for (const auto& [t, c] : terms_) {
        if (static_cast<int>(t.size()) == degree) r.terms_.emplace(t, c);
    }
    return r;
}

std::set<int> DifferentialForm::degrees() const {
    std::set<int> ds;
    for (const auto& [t, c] : terms_) ds.insert(static_cast<int>(t.size()));
    return ds;
}

ScalarExpr DifferentialForm::coefficient(const IndexTuple& tuple) const {
    auto it = terms_.find(tuple);
    if (it == terms_.end()) return ScalarExpr::zero(chart_);
    return it->second;
}

void DifferentialForm::add_term(const IndexTuple& tuple, const ScalarExpr& c) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i) {
        if (tuple[i] >= tuple[i + 1])
            throw Error(ErrorKind::DegreeMismatch,
                        "wedge monomial indices must be strictly increasing");
    }
    if (!tuple.empty() && tuple.back() >= chart_.dimension())
        throw Error(ErrorKind::UnknownSymbol, "wedge monomial index out of range");
    auto it = terms_.find(tuple);
    if (it == terms_.end()) {
        terms_.emplace(tuple, c);
    } else {
        ScalarExpr s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

DifferentialForm DifferentialForm::operator-() const {
    DifferentialForm r(chart_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
    require_same_chart(chart_, o.chart_);
    DifferentialForm r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& o) const {
    return *this + (-o);
}

DifferentialForm DifferentialForm::operator*(const ScalarExpr& s) const {
    require_same_chart(chart_, s.chart());
    DifferentialForm r(chart_);
    for (const auto& [t, c] : terms_) r.add_term(t, c * s);
    return r;
}

namespace {

// Merge two strictly increasing tuples; parity of the interleaving
// permutation goes to `sign`. Returns false on a repeated index.
bool merge_tuples(const IndexTuple& a, const IndexTuple& b, IndexTuple& out, int& sign) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    int inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a.
            inversions += static_cast<int>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    sign = (inversions % 2 == 0) ? 1 : -1;
    return true;
}

} // namespace

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    require_same_chart(a.chart(), b.chart());
    DifferentialForm r(a.chart());
    IndexTuple merged;
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            int sign = 1;
            if (!merge_tuples(ta, tb, merged, sign)) continue;
            ScalarExpr c = ca * cb;
            if (sign < 0) c = -c;
            r.add_term(merged, c);
        }
    }
    return r;
}

DifferentialForm wedge_power(const DifferentialForm& a, unsigned k) {
    DifferentialForm r = DifferentialForm::from_scalar(ScalarExpr::one(a.chart()));
    for (unsigned i = 0; i < k; ++i) r = wedge(r, a);
    return r;
}

DifferentialForm scalar_differential(const ScalarExpr& f) {
    const Chart& chart = f.chart();
    DifferentialForm r(chart);
    for (std::size_t c = 0; c < chart.dimension(); ++c) {
        r.add_term({static_cast<std::uint8_t>(c)}, f.differentiate(c));
    }
    return r;
}

DifferentialForm exterior_derivative(const DifferentialForm& a) {
    const Chart& chart = a.chart();
    DifferentialForm r(chart);
    for (const auto& [tuple, coeff] : a.terms()) {
        for (std::size_t c = 0; c < chart.dimension(); ++c) {
            if (std::binary_search(tuple.begin(), tuple.end(), c)) continue;
            ScalarExpr dc = coeff.differentiate(c);
            if (dc.is_zero()) continue;
            IndexTuple t = tuple;
            auto pos = std::lower_bound(t.begin(), t.end(), c);
            std::size_t idx = static_cast<std::size_t>(pos - t.begin());
            t.insert(pos, static_cast<std::uint8_t>(c));
            if (idx % 2 == 1) dc = -dc;
            r.add_term(t, dc);
        }
    }
    return r;
}

BivectorPairing::BivectorPairing(const DifferentialForm& omega)
    : chart_(omega.chart()) {
    if (!omega.is_zero() && omega.degree() != std::optional<int>(2))
        throw Error(ErrorKind::DegreeMismatch, "pairing needs a 2-form");
    std::size_t n = chart_.dimension();

    // Coefficient matrix of omega, then its inverse by Gauss-Jordan over
    // the rational-function field; Pi is the transpose of the inverse, so
    // that <dx, dy> = 1 for omega = dx^dy.
    std::vector<std::vector<ScalarExpr>> m(n, std::vector<ScalarExpr>(n, ScalarExpr::zero(chart_)));
    for (const auto& [t, c] : omega.terms()) {
        m[t[0]][t[1]] = c;
        m[t[1]][t[0]] = -c;
    }
    std::vector<std::vector<ScalarExpr>> inv(n, std::vector<ScalarExpr>(n, ScalarExpr::zero(chart_)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = ScalarExpr::one(chart_);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n)
            throw Error(ErrorKind::DegenerateStructure,
                        "2-form is degenerate: coefficient matrix is singular");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        ScalarExpr d = m[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] = m[col][j] * d;
            inv[col][j] = inv[col][j] * d;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            ScalarExpr f = m[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[row][j] = m[row][j] - f * m[col][j];
                inv[row][j] = inv[row][j] - f * inv[col][j];
            }
        }
    }
    pi_.assign(n, std::vector<ScalarExpr>(n, ScalarExpr::zero(chart_)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pi_[i][j] = inv[j][i];
}

namespace {

ScalarExpr determinant(std::vector<std::vector<ScalarExpr>> m, const Chart& chart) {
    std::size_t n = m.size();
    if (n == 0) return ScalarExpr::one(chart);
    // Fraction-field Gaussian elimination.
    ScalarExpr det = ScalarExpr::one(chart);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return ScalarExpr::zero(chart);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        ScalarExpr inv = m[col][col].inverse();
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            ScalarExpr f = m[row][col] * inv;
            for (std::size_t j = col; j < n; ++j)
                m[row][j] = m[row][j] - f * m[col][j];
        }
    }
    return det;
}

} // namespace

ScalarExpr BivectorPairing::pair_monomials(const IndexTuple& a, const IndexTuple& b) const {
    std::size_t k = a.size();
    std::vector<std::vector<ScalarExpr>> m(k, std::vector<ScalarExpr>(k, ScalarExpr::zero(chart_)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = pi_[a[i]][b[j]];
    return determinant(std::move(m), chart_);
}

ScalarExpr BivectorPairing::pair(const DifferentialForm& a, const DifferentialForm& b) const {
    require_same_chart(chart_, a.chart());
    require_same_chart(chart_, b.chart());
    auto da = a.degree();
    auto db = b.degree();
    if (a.is_zero() || b.is_zero()) return ScalarExpr::zero(chart_);
    if (!da || !db || *da != *db)
        throw Error(ErrorKind::DegreeMismatch,
                    "pairing needs homogeneous forms of equal degree");
    ScalarExpr acc = ScalarExpr::zero(chart_);
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms())
            acc = acc + ca * cb * pair_monomials(ta, tb);
    return acc;
}

ScalarExpr contract_bivector(const DifferentialForm& omega, const DifferentialForm& a,
                             const DifferentialForm& b) {
    return BivectorPairing(omega).pair(a, b);
}

CoordinateMap::CoordinateMap(Chart source, Chart target, std::vector<ScalarExpr> components)
    : source_(std::move(source)), target_(std::move(target)),
      components_(std::move(components)) {
    if (components_.size() != target_.dimension())
        throw Error(ErrorKind::SubstitutionError,
                    "coordinate map needs one component per target coordinate");
    for (const auto& c : components_) require_same_chart(c.chart(), source_);

    // Image of every target scalar variable under the map. Trig atoms of an
    // angular target coordinate require the component to be a bare angular
    // source coordinate.
    const auto& tvars = target_.scalar_vars();
    scalar_images_.reserve(tvars.size());
    for (const auto& v : tvars) {
        switch (v.role) {
            case ScalarVar::Role::coordinate:
                scalar_images_.push_back(components_[v.owner]);
                break;
            case ScalarVar::Role::sin:
            case ScalarVar::Role::cos: {
                const ScalarExpr& comp = components_[v.owner];
                std::optional<std::size_t> src;
                for (std::size_t c = 0; c < source_.dimension(); ++c) {
                    if (source_.coords()[c].kind == CoordKind::angular &&
                        comp == ScalarExpr::coordinate(source_, c)) {
                        src = c;
                        break;
                    }
                }
                if (!src)
                    throw Error(ErrorKind::SubstitutionError,
                                "angular coordinate '" + target_.coords()[v.owner].name +
                                    "' must map to a bare angular source coordinate");
                scalar_images_.push_back(v.role == ScalarVar::Role::sin
                                             ? ScalarExpr::sin_of(source_, *src)
                                             : ScalarExpr::cos_of(source_, *src));
                break;
            }
            case ScalarVar::Role::parameter: {
                auto p = source_.find_param(target_.params()[v.owner]);
                if (!p)
                    throw Error(ErrorKind::SubstitutionError,
                                "parameter '" + target_.params()[v.owner] +
                                    "' missing on the source chart");
                scalar_images_.push_back(ScalarExpr::parameter(source_, *p));
                break;
            }
        }
    }
}

CoordinateMap CoordinateMap::identity(const Chart& chart) {
    std::vector<ScalarExpr> comps;
    for (std::size_t c = 0; c < chart.dimension(); ++c)
        comps.push_back(ScalarExpr::coordinate(chart, c));
    return CoordinateMap(chart, chart, std::move(comps));
}

ScalarExpr CoordinateMap::pull_scalar(const ScalarExpr& f) const {
    require_same_chart(f.chart(), target_);
    return f.substitute(scalar_images_);
}

DifferentialForm pullback(const CoordinateMap& f, const DifferentialForm& a) {
    require_same_chart(a.chart(), f.target());
    DifferentialForm r(f.source());
    for (const auto& [tuple, coeff] : a.terms()) {
        DifferentialForm term = DifferentialForm::from_scalar(f.pull_scalar(coeff));
        for (std::uint8_t idx : tuple) {
            term = wedge(term, scalar_differential(f.components()[idx]));
            if (term.is_zero()) break;
        }
        r = r + term;
    }
    return r;
}

std::string DifferentialForm::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [tuple, coeff] : terms_) {
        std::string cs = coeff.to_string();
        std::string body;
        if (tuple.empty()) {
            body = cs;
        } else {
            std::string wedges;
            for (std::uint8_t idx : tuple) {
                if (!wedges.empty()) wedges += "^";
                wedges += "d" + chart_.coords()[idx].name;
            }
            if (coeff.is_one()) {
                body = wedges;
            } else if ((-coeff).is_one()) {
                body = "-" + wedges;
            } else {
                bool plain = coeff.den().is_constant() && coeff.num().terms().size() == 1;
                body = plain ? cs + "*" + wedges : "(" + cs + ")*" + wedges;
            }
        }
        if (first) {
            out << body;
            first = false;
        } else if (!body.empty() && body[0] == '-') {
            out << " - " << body.substr(1);
        } else {
            out << " + " << body;
        }
    }
    return out.str();
}

} // namespace lcskit
