#pragma once

#include "ncp/rational.hpp"

#include <string>
#include <vector>

namespace ncp {

enum class PolyBasis { monomial, binomial_falling };

// Univariate polynomial with exact rational coefficients.  Two coordinate
// systems: powers of X, or the integer-valued basis
//   H_k(X) = X(X-1)...(X-k+1)/k!,  H_0 = 1,
// which satisfies H_{k+1}(X+1) - H_{k+1}(X) = H_k(X) and H_k(0) = 0 (k>=1).
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    RationalPolynomial(std::vector<Rational> coeffs, PolyBasis basis);

    static RationalPolynomial zero(PolyBasis basis = PolyBasis::monomial);
    static RationalPolynomial constant(const Rational& c,
                                       PolyBasis basis = PolyBasis::monomial);
    static RationalPolynomial x();  // the monomial X

    PolyBasis basis() const { return basis_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const;

    Rational coefficient(int k) const;  // in the current basis

    RationalPolynomial to_basis(PolyBasis basis) const;

    RationalPolynomial operator+(const RationalPolynomial& o) const;
    RationalPolynomial operator-(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const RationalPolynomial& o) const;
    RationalPolynomial scaled(const Rational& c) const;

    // Exact equality as polynomials (basis independent).
    bool operator==(const RationalPolynomial& o) const;

    Rational evaluate(const Rational& x) const;

    // p(-X)
    RationalPolynomial reflected() const;

    // The polynomial q with q(X+1) - q(X) = p(X) and q(0) = 0
    // (index shift in the binomial basis).
    RationalPolynomial antidifference() const;

    // Ascending powers, zero terms skipped, e.g. "3/2*X - 5/2*X^2 + X^3";
    // binomial basis prints H1, H2, ... analogously.
    std::string text() const;
    static RationalPolynomial parse(const std::string& text);

private:
    void trim();
    std::vector<Rational> coeffs_;   // index k = coefficient of X^k or H_k
    PolyBasis basis_ = PolyBasis::monomial;
};

// Exact interpolation through (nodes[i], values[i]) with distinct nodes.
RationalPolynomial lagrange_interpolate(const std::vector<Rational>& nodes,
                                        const std::vector<Rational>& values);

} // namespace ncp
