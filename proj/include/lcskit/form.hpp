#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcskit/scalar.hpp"

namespace lcskit {

/// Strictly increasing coordinate indices of a wedge monomial dx_{i1} ^ ...
using IndexTuple = std::vector<std::uint8_t>;

struct TupleOrder {
    // Degree-major, then lexicographic: canonical listing order.
    bool operator()(const IndexTuple& a, const IndexTuple& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// A (graded sum of) differential form(s) on a chart. Terms map canonical
/// wedge monomials to nonzero ScalarExpr coefficients.
class DifferentialForm {
public:
    using TermMap = std::map<IndexTuple, ScalarExpr, TupleOrder>;

    explicit DifferentialForm(Chart chart) : chart_(std::move(chart)) {}

    static DifferentialForm zero(const Chart& chart);
    static DifferentialForm from_scalar(ScalarExpr s);
    static DifferentialForm differential(const Chart& chart, std::size_t coord);
    static DifferentialForm monomial(const Chart& chart, IndexTuple tuple, ScalarExpr c);

    const Chart& chart() const { return chart_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_homogeneous() const;
    /// Common degree of a homogeneous nonzero form.
    std::optional<int> degree() const;
    int max_degree() const;
    DifferentialForm component(int degree) const;
    std::set<int> degrees() const;

    /// Coefficient of a wedge monomial (zero scalar when absent).
    ScalarExpr coefficient(const IndexTuple& tuple) const;
    void add_term(const IndexTuple& tuple, const ScalarExpr& c);

    DifferentialForm operator-() const;
    DifferentialForm operator+(const DifferentialForm& o) const;
    DifferentialForm operator-(const DifferentialForm& o) const;
    DifferentialForm operator*(const ScalarExpr& s) const;

    bool operator==(const DifferentialForm& o) const {
        return chart_ == o.chart_ && terms_ == o.terms_;
    }
    bool operator!=(const DifferentialForm& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Chart chart_;
    TermMap terms_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm wedge_power(const DifferentialForm& a, unsigned k);
DifferentialForm exterior_derivative(const DifferentialForm& a);

/// d of a scalar function, as a 1-form.
DifferentialForm scalar_differential(const ScalarExpr& f);

/// The pairing <.,.>_k induced by the inverse of a nondegenerate 2-form,
/// extended to degree-k forms by determinants of pairwise pairings.
class BivectorPairing {
public:
    explicit BivectorPairing(const DifferentialForm& omega);

    const Chart& chart() const { return chart_; }
    /// Pi[i][j] = <dx_i, dx_j>.
    const std::vector<std::vector<ScalarExpr>>& pi() const { return pi_; }

    ScalarExpr pair_monomials(const IndexTuple& a, const IndexTuple& b) const;
    ScalarExpr pair(const DifferentialForm& a, const DifferentialForm& b) const;

private:
    Chart chart_;
    std::vector<std::vector<ScalarExpr>> pi_;
};

ScalarExpr contract_bivector(const DifferentialForm& omega, const DifferentialForm& a,
                             const DifferentialForm& b);

/// A smooth map between charts, given by one source-chart expression per
/// target coordinate.
class CoordinateMap {
public:
    CoordinateMap(Chart source, Chart target, std::vector<ScalarExpr> components);

    static CoordinateMap identity(const Chart& chart);

    const Chart& source() const { return source_; }
    const Chart& target() const { return target_; }
    const std::vector<ScalarExpr>& components() const { return components_; }

    ScalarExpr pull_scalar(const ScalarExpr& f) const;

private:
    Chart source_;
    Chart target_;
    std::vector<ScalarExpr> components_;
    std::vector<ScalarExpr> scalar_images_; // one per target scalar variable
};

DifferentialForm pullback(const CoordinateMap& f, const DifferentialForm& a);

} // namespace lcskit
