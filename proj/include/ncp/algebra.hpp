#pragma once

#include "ncp/combinatorics.hpp"
#include "ncp/partition.hpp"
#include "ncp/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncp {

// Commutative word in nonempty noncrossing partitions.  Factors are kept
// sorted by their canonical key; empty-partition factors are absorbed (they
// are the unit).  The empty monomial is the algebra unit 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(NoncrossingPartition p);
    explicit Monomial(std::vector<NoncrossingPartition> factors);

    const std::vector<NoncrossingPartition>& factors() const { return factors_; }
    int length() const { return static_cast<int>(factors_.size()); }
    bool is_unit() const { return factors_.empty(); }

    int total_blocks() const;
    int total_legs() const;

    Monomial operator*(const Monomial& o) const;

    // "(1,3|2).(1)" with factors in canonical order; "1" for the unit.
    std::string text() const;
    static Monomial parse(const std::string& text);

    // Term order: factor count ascending, then factor keys lexicographically.
    std::strong_ordering operator<=>(const Monomial& o) const;
    bool operator==(const Monomial& o) const = default;

private:
    std::vector<NoncrossingPartition> factors_;
};

// Finite rational linear combination of monomials.
class AlgebraElement {
public:
    AlgebraElement() = default;
    static AlgebraElement zero() { return {}; }
    static AlgebraElement unit();
    static AlgebraElement from(const NoncrossingPartition& p);
    static AlgebraElement from(const Monomial& m, const Rational& c = 1);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rational& c);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(const Rational& c) const;
    bool operator==(const AlgebraElement& o) const = default;

    // "c*(monomial)" terms joined by " + ", term order as in Monomial.
    std::string text() const;
    static AlgebraElement parse(const std::string& text);

private:
    std::map<Monomial, Rational> terms_;
};

// Element of a k-fold tensor power: keys are k-tuples of monomials.
// All keys of one object have the same order k.
class TensorElement {
public:
    explicit TensorElement(int order = 2) : order_(order) {}

    int order() const { return order_; }
    const std::map<std::vector<Monomial>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<Monomial>& key, const Rational& c);
    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement scaled(const Rational& c) const;
    // Componentwise product (same order required).
    TensorElement operator*(const TensorElement& o) const;
    bool operator==(const TensorElement& o) const = default;

    // Terms "c*left (x) right" joined by " + "; slots joined by " (x) ".
    std::string text() const;

private:
    int order_;
    std::map<std::vector<Monomial>, Rational> terms_;
};

// ---- coproducts ----------------------------------------------------------

// Separation coproduct: sum over nesting-order ideals J of
//   (class restriction to the complement)  (x)  (component split of J).
TensorElement coproduct_separation(const NoncrossingPartition& p);
TensorElement coproduct_separation(const Monomial& m);
TensorElement coproduct_separation(const AlgebraElement& x);

// Fusion coproduct: sum over contractible equivalences of
//   (quotient)  (x)  (product of classwise restrictions).
TensorElement coproduct_fusion(const NoncrossingPartition& p);
TensorElement coproduct_fusion(const Monomial& m);
TensorElement coproduct_fusion(const AlgebraElement& x);

// ---- counits -------------------------------------------------------------

// Counit of the separation coproduct: coefficient of the unit monomial.
Rational counit_separation(const AlgebraElement& x);

// Counit of the fusion coproduct: a monomial counts 1 exactly when every
// factor has a single block.
Rational counit_fusion(const Monomial& m);
Rational counit_fusion(const AlgebraElement& x);

// ---- iterated reduced coproduct -----------------------------------------

// (k+1)-fold tensor obtained by iterating the reduced separation coproduct
// on the first slot.  Requires counit_separation(x) == 0 (NotAugmentation).
TensorElement reduced_separation_iterate(const AlgebraElement& x, int k);

// ---- structure checks ----------------------------------------------------

// Apply a monomial-level coproduct to one slot of a tensor.
TensorElement apply_to_slot(const TensorElement& t, int slot,
                            TensorElement (*coproduct)(const Monomial&));

// a1 (x) a2 (x) a3 (x) a4  ->  a1 (x) a3 (x) a2*a4
TensorElement contract_1_3_24(const TensorElement& t);

// (separation (x) id) o fusion == contract o (fusion (x) fusion) o separation
bool check_cointeraction(const NoncrossingPartition& p);

// Gradings of a monomial: legs, blocks, length, degree = blocks - length.
struct Gradings {
    int legs = 0;
    int blocks = 0;
    int length = 0;
    int degree = 0;
    bool operator==(const Gradings&) const = default;
};
Gradings gradings(const Monomial& m);

} // namespace ncp
