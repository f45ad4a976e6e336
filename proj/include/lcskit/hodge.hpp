#pragma once

#include <cstdint>
#include <map>

#include "lcskit/lcs.hpp"

namespace lcskit {

/// Evaluation context for the symplectic (Brylinski) Hodge star and the
/// sl2 operators of a nondegenerate structure. The star is solved once per
/// basis monomial from its defining identity
///     a ^ star(b) = <a,b>_k * omega^n/n!
/// and cached; everything downstream is field-linear in the cache.
/// Immutable after construction; safe for concurrent use.
class HLContext {
public:
    explicit HLContext(LcsStructure s);

    const LcsStructure& structure() const { return s_; }
    const BivectorPairing& pairing() const { return pairing_; }
    const ScalarExpr& volume_coeff() const { return vol_coeff_; }

    DifferentialForm star(const DifferentialForm& a) const;
    DifferentialForm lefschetz_L(const DifferentialForm& a) const;
    DifferentialForm lefschetz_Lstar(const DifferentialForm& a) const;

    /// delta = (-1)^{k+1} star d star on degree-k input, per homogeneous
    /// component. (The sign is the one consistent with the commutator
    /// form below under this engine's pairing conventions.)
    DifferentialForm symplectic_delta(const DifferentialForm& a) const;
    /// Independent commutator evaluator. For a vanishing Lee form this is
    /// the classical d L* - L* d; in general the differentials carry the
    /// twist weights forced by d(omega) = eps theta ^ omega, measured as
    ///   delta|_deg j  =  d_{-eps(n-j+1)} L*  -  L* d_{-eps(n-j)}.
    DifferentialForm symplectic_delta_commutator(const DifferentialForm& a) const;

    /// Measured Lee-form sign of the underlying structure (0 when both
    /// d(omega) and theta^omega vanish).
    int lee_sign() const { return lee_sign_; }

    struct SpectrumEntry {
        int degree;
        bool scalar;         // [L,L*] acts as a scalar on this degree
        ScalarExpr value;    // the scalar (meaningful when scalar is true)
        std::string witness; // offending monomial when not scalar
    };
    /// Measures [L, L*] on every basis monomial of every degree.
    std::vector<SpectrumEntry> commutator_spectrum() const;

private:
    LcsStructure s_;
    BivectorPairing pairing_;
    ScalarExpr vol_coeff_;
    int lee_sign_ = 0;
    std::map<IndexTuple, DifferentialForm, TupleOrder> star_cache_;
};

struct WeightedForm {
    DifferentialForm form;
    int weight = 0;
};

/// Lichnerowicz differential d_k = d - k theta ^ - at fixed twist weight k.
/// Requires a closed Lee form.
WeightedForm lichnerowicz_d(const LcsStructure& s, const WeightedForm& wf);

struct RelationReport {
    int trials = 0;
    std::uint64_t seed = 0;
    bool theta_zero = false; // all weights collapse when the Lee form is 0
    /// Entries (degree k, w1 - k, w2 - k) for which
    /// delta(d_{w1} a) + d_{w2}(delta a) = 0 held on every degree-k trial.
    /// The weight law is degree-dependent on lcs charts, so offsets are
    /// reported per degree.
    std::vector<std::tuple<int, int, int>> vanishing_offsets;

    std::string to_text() const;
};

/// Randomized scan for the weight offsets that make the anticommutator of
/// delta and the Lichnerowicz differential vanish. Deterministic per seed.
RelationReport scan_relations(const HLContext& ctx, int trials, std::uint64_t seed);

/// Seeded random form of the given degree with small polynomial
/// coefficients (total degree <= 2, integer coefficients in [-3, 3]).
DifferentialForm random_form(const Chart& chart, int degree, std::uint64_t seed);

} // namespace lcskit
