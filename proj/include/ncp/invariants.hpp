#pragma once

#include "ncp/algebra.hpp"
#include "ncp/characters.hpp"
#include "ncp/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ncp {

// Multiplicative polynomial-valued morphism determined by its rule on single
// partitions; extends to monomials by product and to elements linearly.
class PolynomialInvariant {
public:
    PolynomialInvariant() = default;
    PolynomialInvariant(std::string name,
                        std::function<RationalPolynomial(const NoncrossingPartition&)> rule);

    const std::string& name() const { return name_; }
    RationalPolynomial operator()(const NoncrossingPartition& p) const;
    RationalPolynomial operator()(const Monomial& m) const;
    RationalPolynomial operator()(const AlgebraElement& x) const;

private:
    std::string name_;
    std::function<RationalPolynomial(const NoncrossingPartition&)> rule_;
};

// ---- colorations ---------------------------------------------------------

// Number of maps from blocks to {1..colors} that increase strictly along
// strict nestings and, whenever two blocks b, b'' with max(b) < min(b'')
// share a color, have a block meeting the open leg gap between them with a
// smaller color.  Budget-guarded brute force.
Integer count_valid_colorations(const NoncrossingPartition& p, int colors);
Integer count_valid_colorations(const Monomial& m, int colors);

// Is the explicit block coloring valid (colors[i] for block i)?
bool is_valid_coloration(const NoncrossingPartition& p, const std::vector<int>& colors,
                         int palette);

// ---- the universal polynomial invariant ----------------------------------

enum class PhiAlgorithm { coproduct, recurrence, interpolation };

// The unique polynomial invariant compatible with both coproducts:
//   - coproduct: binomial-basis coefficients from iterated reduced
//     separation coproducts contracted by the fusion counit;
//   - recurrence: peel one base block, take the binomial-basis
//     antidifference of the resulting sum of products;
//   - interpolation: Lagrange through coloration counts at 0..blocks.
RationalPolynomial phi_ncp(const NoncrossingPartition& p,
                           PhiAlgorithm algo = PhiAlgorithm::recurrence);
RationalPolynomial phi_ncp(const Monomial& m,
                           PhiAlgorithm algo = PhiAlgorithm::recurrence);
RationalPolynomial phi_ncp(const AlgebraElement& x,
                           PhiAlgorithm algo = PhiAlgorithm::recurrence);

PolynomialInvariant phi_invariant(PhiAlgorithm algo = PhiAlgorithm::recurrence);

// ---- linear-extension counting invariants --------------------------------

// Binomial-basis coefficient k counts the surjective weak (resp. strict)
// order-preserving maps from the nesting poset onto {1..k}; evaluation at a
// nonnegative integer counts all such maps.
RationalPolynomial extension_invariant(const Monomial& m, bool strict);
Integer count_extensions(const Monomial& m, int levels, bool strict);

PolynomialInvariant lambda_invariant();         // weak
PolynomialInvariant lambda_strict_invariant();  // strict

// (linear extensions / blocks!) * X^blocks
RationalPolynomial phi_zero(const Monomial& m);
PolynomialInvariant phi_zero_invariant();

// ---- actions and the antipode -------------------------------------------

// Right action by a character through the fusion coproduct:
//   (f <- c)(p) = sum over contractible equivalences of
//                 f(quotient) * c(classwise restriction product).
PolynomialInvariant act_character(const PolynomialInvariant& f, const Character& c);

// Antipode: (mu_ncp (x) id) o fusion coproduct on single partitions,
// extended as an algebra morphism.
AlgebraElement antipode(const NoncrossingPartition& p);
AlgebraElement antipode(const Monomial& m);
AlgebraElement antipode(const AlgebraElement& x);

// ---- coefficient identities ---------------------------------------------

struct CoefficientCheck {
    std::string id;
    Rational expected;
    Rational actual;
    bool pass = false;
};

// Degree, leading coefficient, linear coefficient and subleading coefficient
// of phi against their closed combinatorial expressions.
std::vector<CoefficientCheck> coefficient_checks(const NoncrossingPartition& p);

} // namespace ncp
