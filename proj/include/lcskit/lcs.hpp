#pragma once

#include <utility>

#include "lcskit/form.hpp"
#include "lcskit/report.hpp"

namespace lcskit {

/// A candidate locally conformally symplectic structure (omega, theta) on
/// an even-dimensional chart. Validity is established by verify_lcs; the
/// Lee-form sign epsilon in d(omega) = epsilon * theta ^ omega is measured,
/// never assumed.
struct LcsStructure {
    Chart chart;
    DifferentialForm omega;
    DifferentialForm theta;
    std::size_t half_dim = 0;
    std::optional<int> lee_sign;

    LcsStructure(Chart c, DifferentialForm o, DifferentialForm t);
};

struct ContactForm {
    Chart chart;
    DifferentialForm alpha;

    ContactForm(Chart c, DifferentialForm a);
};

struct LcsMorphism {
    CoordinateMap map;
    ScalarExpr u;
    LcsStructure source;
    LcsStructure target;
};

/// Top wedge power omega^n / n! and its single coefficient.
DifferentialForm volume_form(const LcsStructure& s);
ScalarExpr volume_coefficient(const LcsStructure& s);

/// Measures the sign in d(omega) = sign * theta ^ omega. 0 means both
/// sides vanish (sign arbitrary); nullopt means no sign works.
std::optional<int> measure_lee_sign(const DifferentialForm& omega,
                                    const DifferentialForm& theta);

VerificationReport verify_lcs(LcsStructure& s);
VerificationReport verify_lcs(const LcsStructure& s);

VerificationReport verify_contact(const ContactForm& c);

/// The collar structure on (0,1] x Y induced by a contact form on Y:
/// omega = -t^{-1} d(t alpha), theta = t^{-1} dt, with t prepended as a
/// collar coordinate. Throws InvalidContact for an invalid input.
LcsStructure build_collar(const ContactForm& c, const std::string& t_name = "t");

/// Checks both morphism conventions and reports each:
///   literal:    phi* omega = omega',  phi* theta = theta' + du
///   conformal:  phi* omega = u omega', phi* theta = theta' + u^{-1} du
VerificationReport verify_morphism(const LcsMorphism& m);

/// Restriction to the boundary face t = 1, dt = 0 of a collar chart.
/// Returns the induced (omega, theta) on the boundary chart.
std::pair<DifferentialForm, DifferentialForm> restrict_to_boundary(const LcsStructure& s);

} // namespace lcskit
