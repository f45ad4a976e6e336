#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lcskit/form.hpp"
#include "lcskit/rational.hpp"

namespace lcskit {

/// Point of P^3 in homogeneous coordinates [r : x : z : a]. The canonical
/// representative scales the first nonzero coordinate to 1.
struct ProjectivePoint {
    std::array<Rational, 4> v; // r, x, z, a

    static ProjectivePoint make(Rational r, Rational x, Rational z, Rational a);
    ProjectivePoint canonical() const;
    bool operator==(const ProjectivePoint& o) const;
};

/// The quartic r^2 (x^2 + z^2) - a^2 (r^2 - z^2) at the canonical
/// representative; zero exactly on the surface.
Rational quartic_eval(const ProjectivePoint& p);
Rational quartic_polynomial(const Rational& r, const Rational& x, const Rational& z,
                            const Rational& a);

enum class ConicType { ellipse, line_pair, point };

struct ConicReport {
    ConicType type;
    Rational ecc2;            // e^2 = 1 - theta_p^2
    Rational semi_axis_kappa2; // kappa semi-axis squared (minor)
    Rational semi_axis_rho2;   // rho semi-axis squared (major; 0 when degenerate)
    bool rho_unbounded = false;

    std::string to_text() const;
};

/// The pencil fiber kappa^2 + theta_p^2 rho^2 = 1 - theta_p^2 over the
/// parameter theta_p; |theta_p| > 1 gives EmptyFiber.
ConicReport fiber(const Rational& theta_p);

/// Membership of (kappa, rho, zeta = theta_p * rho) via the fiber conic,
/// cross-checked against vanishing of the denominator-cleared quartic.
/// Requires rho != 0.
bool fiber_membership(const Rational& theta_p, const Rational& kappa, const Rational& rho);

/// Same check parametrized by theta_p^2, which is all the fiber equation
/// uses; admits fibers whose parameter is an irrational square root.
bool fiber_membership_sq(const Rational& theta_sq, const Rational& kappa,
                         const Rational& rho);

struct SplitQuartic {
    ScalarExpr full;    // r^2 x^2 + r^2 z^2 on the (r,x,z,a) chart
    ScalarExpr factor_r2;
    ScalarExpr factor_sum;
    int degree_r2 = 2;
    int degree_sum = 2;
};

/// The a = 0 degeneration, factored as r^2 * (x^2 + z^2).
SplitQuartic degenerate_a0();

/// The Kerr-Schild chart map (r, theta, phi, a) -> (x, y, z):
///   x = sin(theta) (r cos(phi) + a sin(phi)),
///   y = sin(theta) (r sin(phi) - a cos(phi)),
///   z = r cos(theta).
CoordinateMap kerr_schild_map();

struct IdentityReport {
    std::string computed;   // engine expansion of x^2+y^2+z^2
    std::string printed;    // the source's right-hand side
    std::string difference; // canonical computed - printed
    bool matches = false;
};

IdentityReport verify_ks_identity();

struct FormReport {
    std::string computed;   // d(t lambda)
    std::string printed;    // (1/2) du+ ^ du- + dTheta ^ dphi
    std::string difference;
    bool closed = false;
    std::string degeneracy_locus; // where the top wedge power vanishes
    bool matches = false;

    std::string to_text() const;
};

/// The candidate symplectic 2-form d(t lambda) on the (u+, u-, theta, phi)
/// chart with t = (u+ - u-)/2, lambda = du+ + Theta dphi, Theta = a t sin^2(theta).
FormReport kerr_two_form();

struct PencilRow {
    int index;
    Rational theta_p;
    Rational ecc2;
    Rational kappa;
    Rational rho;
    Rational semi_axis_kappa2;
    Rational semi_axis_rho2;
};

/// Deterministic exact sampling of pencil fibers with one rational member
/// point each; every emitted point lies on the quartic.
std::vector<PencilRow> sample_pencil(const Rational& a, int count, std::uint64_t seed);

/// CSV with the fixed header
/// index,theta_p_num,theta_p_den,ecc2_num,ecc2_den,kappa_num,kappa_den,rho_num,rho_den
void write_pencil_csv(std::ostream& out, const std::vector<PencilRow>& rows);

} // namespace lcskit
