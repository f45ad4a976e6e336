#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lcskit/rational.hpp"

namespace lcskit {

/// Monomial in the generators of a presented algebra: one exponent per
/// generator (declaration order), odd-degree generators capped at 1.
using GenExponents = std::vector<std::uint16_t>;

/// Element of a free graded-commutative algebra over Q on a fixed
/// generator list. Products carry Koszul signs; squares of odd-degree
/// generators vanish.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(std::vector<int> degrees) : degrees_(std::move(degrees)) {}

    static AlgebraElement constant(std::vector<int> degrees, const Rational& c);
    static AlgebraElement generator(std::vector<int> degrees, std::size_t index);

    const std::map<GenExponents, Rational>& terms() const { return terms_; }
    const std::vector<int>& degrees() const { return degrees_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const GenExponents& e, const Rational& c);

    AlgebraElement operator-() const;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator*(const Rational& c) const;
    AlgebraElement pow(std::uint32_t k) const;

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

    int monomial_degree(const GenExponents& e) const;
    /// Total degree when homogeneous; -1 for zero; throws otherwise.
    int degree() const;
    bool is_homogeneous() const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::vector<int> degrees_;
    std::map<GenExponents, Rational> terms_;
};

struct GeneratorDecl {
    std::string name;
    int degree; // >= 1
};

/// Finitely presented graded-commutative differential algebra over Q.
/// The differential is given on generators (degree +1) and extended by
/// the graded Leibniz rule. Rational parameters are substituted into the
/// differential at construction time.
class PresentedCDGA {
public:
    PresentedCDGA(std::vector<GeneratorDecl> generators,
                  std::vector<AlgebraElement> differentials);

    static PresentedCDGA parse(std::string_view text);

    const std::vector<GeneratorDecl>& generators() const { return gens_; }
    const AlgebraElement& differential_of(std::size_t gen) const { return diff_[gen]; }

    std::vector<int> generator_degrees() const;

    /// All degree-k monomials, sorted by exponent vector.
    std::vector<GenExponents> enumerate_basis(int k) const;

    AlgebraElement d(const AlgebraElement& x) const;
    AlgebraElement monomial_element(const GenExponents& e) const;

    /// Verifies d(d(g)) = 0 on every generator; throws InvalidPresentation
    /// with the witness generator otherwise.
    void check_d_squared() const;

private:
    std::vector<GeneratorDecl> gens_;
    std::vector<AlgebraElement> diff_;
};

struct BettiTable {
    int max_degree = 0;
    std::vector<int> dims;  // chain-space dimension per degree 0..D
    std::vector<int> ranks; // b_0..b_D

    bool operator==(const BettiTable&) const = default;
    std::string to_text() const;
};

BettiTable betti(const PresentedCDGA& a, int max_degree);

/// Ranks of the twisted differential d - k * (lee ^ -). `lee` must be a
/// closed degree-1 generator.
BettiTable betti_twisted(const PresentedCDGA& a, std::size_t lee, int weight,
                         int max_degree);

} // namespace lcskit
