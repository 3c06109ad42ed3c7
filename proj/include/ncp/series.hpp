#pragma once

#include "ncp/algebra.hpp"
#include "ncp/polynomial.hpp"
#include "ncp/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncp {

// Formal power series tangent to the identity:
//   f(x) = x + a_1 x^2 + a_2 x^3 + ...
// stored by its coefficient list (a_1, ..., a_order).
class FormalSeries {
public:
    FormalSeries() = default;
    explicit FormalSeries(std::vector<Rational> a);

    static FormalSeries identity(int order);

    int order() const { return static_cast<int>(a_.size()); }
    const std::vector<Rational>& coefficients() const { return a_; }
    Rational coefficient(int n) const;  // a_n, 1-based

    bool operator==(const FormalSeries& o) const = default;

private:
    std::vector<Rational> a_;
};

// f o g truncated to the shorter order.
FormalSeries compose(const FormalSeries& f, const FormalSeries& g);

// Compositional inverse by term-by-term solving (the oracle).
FormalSeries invert_oracle(const FormalSeries& f, int order);

// Size profile of a partition as an exponent vector (k_1,...,k_n):
// k_i blocks of size i, with sum i*k_i = n.
using Profile = std::vector<int>;

// Closed-form inversion coefficient attached to one profile:
//   (-1)^(k_1+...+k_n) * sum over partitions with that size census of the
//   product of Catalan numbers of the adjacency-class sizes.
Rational lambda_coefficient(const Profile& profile);

// Compositional inverse assembled from the profile coefficients.
FormalSeries invert_ncp(const FormalSeries& f, int order);

// Separation coproduct of the all-singleton partition of [n], written down
// directly from the multinomial composition rule (no ideal enumeration).
TensorElement faadibruno_separation(int n);

// ---- coefficient tables --------------------------------------------------

// Surjective-coloration table a[i][n] (i levels, ladder of n singletons):
//   a_{1,n} = [n == 1],  a_{i,n} = sum_k C(n-k+1, k) a_{i-1, n-k}.
// Returned as rows i = 1..max_i, columns n = 1..max_n.
std::vector<std::vector<Integer>> a_table(int max_i, int max_n);

// Ladder polynomial P_n in the binomial basis, from the a-table.
RationalPolynomial ladder_polynomial(int n);

// Harmonic-type sums zeta_n(1) = sum 1/i and zeta_n(1,1) = sum_{i<j} 1/(ij),
// over 1..n-1 style index ranges used by the closed forms below.
Rational zeta1(int n);
Rational zeta11(int n);

// Closed forms for the top three diagonals:
//   a_{n,n} = n!,
//   a_{n-1,n} = n!((n+1)/2 - zeta1(n)),
//   a_{n-2,n} = n!(zeta11(n) - n/2*zeta1(n) + (3n-2)(n^2+n+6)/(24n)).
Integer a_closed_diag0(int n);
Rational a_closed_diag1(int n);
Rational a_closed_diag2(int n);

// ---- the binomial Riordan route ------------------------------------------

// Lower-triangular rational matrices, 1-based logical indexing.
using TriMatrix = std::vector<std::vector<Rational>>;

// M_{k,l} = C(l, k-l), unit diagonal, size n x n.
TriMatrix riordan_matrix(int n);
TriMatrix tri_log(const TriMatrix& m);   // finite nilpotent series
TriMatrix tri_mul(const TriMatrix& a, const TriMatrix& b);

// P_0..P_{n-1} as the first column of exp(X log M): entry k of the result is
// the polynomial P_k in powers of X.
std::vector<RationalPolynomial> riordan_ladder_polynomials(int n);

// Ladder values of the fusion inverse of the all-one character:
//   l(1) = 1,  l(n) = -1/(n-1) * sum_{i=1..floor(n/2)} C(n-i+1, i+1) l(n-i).
Rational lambda_ncp_ladder(int n);

// ---- zero threshold ------------------------------------------------------

// P_k(n) computed exactly from the a-table.
Rational ladder_value(int k, int n);

// The explicit palindromic witness coloring with 2^n - 1 entries.
std::vector<int> threshold_witness(int n);

// Least n with P_k(n) > 0.
int chromatic_threshold(int k);

} // namespace ncp
