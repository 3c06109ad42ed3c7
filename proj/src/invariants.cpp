#include "ncp/invariants.hpp"

#include "ncp/combinatorics.hpp"
#include "ncp/errors.hpp"
#include "ncp/guards.hpp"

#include <map>
#include <mutex>

namespace ncp {

PolynomialInvariant::PolynomialInvariant(
    std::string name, std::function<RationalPolynomial(const NoncrossingPartition&)> rule)
    : name_(std::move(name)), rule_(std::move(rule)) {}

RationalPolynomial PolynomialInvariant::operator()(const NoncrossingPartition& p) const {
    if (p.empty()) return RationalPolynomial::constant(1);
    return rule_(p);
}

RationalPolynomial PolynomialInvariant::operator()(const Monomial& m) const {
    RationalPolynomial r = RationalPolynomial::constant(1);
    for (const auto& f : m.factors()) r = r * (*this)(f);
    return r;
}

RationalPolynomial PolynomialInvariant::operator()(const AlgebraElement& x) const {
    RationalPolynomial r = RationalPolynomial::zero();
    for (const auto& [m, c] : x.terms()) r = r + (*this)(m).scaled(c);
    return r;
}

// ---- colorations ---------------------------------------------------------

namespace {

struct ColorConstraints {
    int blocks = 0;
    std::vector<std::pair<int, int>> strict;        // (outer, inner): f(o) < f(i)
    std::vector<std::pair<int, int>> gaps;          // (left, right): max(l) < min(r)
    std::vector<std::vector<int>> gap_blocks;       // witnesses per gap pair
};

ColorConstraints color_constraints(const NoncrossingPartition& p) {
    ColorConstraints cc;
    int k = p.block_count();
    cc.blocks = k;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            if (nesting_leq(p, i, j)) cc.strict.emplace_back(i, j);
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            int lo = p.block(i).back(), hi = p.block(j).front();
            if (lo >= hi) continue;
            std::vector<int> between;
            for (int b = 0; b < k; ++b) {
                if (b == i || b == j) continue;
                for (int leg : p.block(b))
                    if (leg > lo && leg < hi) {
                        between.push_back(b);
                        break;
                    }
            }
            cc.gaps.emplace_back(i, j);
            cc.gap_blocks.push_back(std::move(between));
        }
    return cc;
}

bool coloring_ok(const ColorConstraints& cc, const std::vector<int>& f) {
    for (auto [o, i] : cc.strict)
        if (f[o] >= f[i]) return false;
    for (std::size_t g = 0; g < cc.gaps.size(); ++g) {
        auto [l, r] = cc.gaps[g];
        if (f[l] != f[r]) continue;
        bool saved = false;
        for (int b : cc.gap_blocks[g])
            if (f[b] < f[l]) {
                saved = true;
                break;
            }
        if (!saved) return false;
    }
    return true;
}

Integer count_colorations_one(const NoncrossingPartition& p, int colors) {
    if (p.empty()) return 1;
    if (colors <= 0) return 0;
    ColorConstraints cc = color_constraints(p);
    double total = 1;
    for (int i = 0; i < cc.blocks; ++i) total *= colors;
    if (total > static_cast<double>(guards().coloration_budget))
        throw DegreeOverflow("coloration search space exceeds the configured budget");
    std::vector<int> f(cc.blocks, 1);
    Integer count = 0;
    while (true) {
        if (coloring_ok(cc, f)) ++count;
        int i = 0;
        while (i < cc.blocks && f[i] == colors) f[i++] = 1;
        if (i == cc.blocks) break;
        ++f[i];
    }
    return count;
}

} // namespace

Integer count_valid_colorations(const NoncrossingPartition& p, int colors) {
    return count_colorations_one(p, colors);
}

Integer count_valid_colorations(const Monomial& m, int colors) {
    Integer r = 1;
    for (const auto& f : m.factors()) r *= count_colorations_one(f, colors);
    return r;
}

bool is_valid_coloration(const NoncrossingPartition& p, const std::vector<int>& colors,
                         int palette) {
    if (static_cast<int>(colors.size()) != p.block_count()) return false;
    for (int c : colors)
        if (c < 1 || c > palette) return false;
    return coloring_ok(color_constraints(p), colors);
}

// ---- the universal polynomial invariant ----------------------------------

namespace {

RationalPolynomial phi_by_interpolation(const NoncrossingPartition& p) {
    int b = p.block_count();
    std::vector<Rational> nodes, values;
    for (int n = 0; n <= b; ++n) {
        nodes.emplace_back(n);
        values.emplace_back(count_valid_colorations(p, n));
    }
    return lagrange_interpolate(nodes, values);
}

RationalPolynomial phi_by_coproduct(const AlgebraElement& x) {
    Rational c0 = counit_separation(x);
    AlgebraElement y = x - AlgebraElement::from(Monomial(), c0);
    std::vector<Rational> coeffs{c0};

    TensorElement t(1);
    for (const auto& [m, c] : y.terms()) t.add_term({m}, c);
    while (!t.terms().empty()) {
        Rational ck = 0;
        for (const auto& [key, c] : t.terms()) {
            Rational v = c;
            for (const auto& slot : key) v *= counit_fusion(slot);
            ck += v;
        }
        coeffs.push_back(ck);

        TensorElement next(t.order() + 1);
        for (const auto& [key, c] : t.terms()) {
            TensorElement split = coproduct_separation(key[0]);
            for (const auto& [pair, c2] : split.terms()) {
                if (pair[0].is_unit() || pair[1].is_unit()) continue;
                if (counit_fusion(pair[1]) == 0) continue;  // slot freezes after this step
                std::vector<Monomial> k{pair[0], pair[1]};
                k.insert(k.end(), key.begin() + 1, key.end());
                next.add_term(k, c * c2);
            }
        }
        t = std::move(next);
    }
    return RationalPolynomial(std::move(coeffs), PolyBasis::binomial_falling);
}

RationalPolynomial phi_by_recurrence(const NoncrossingPartition& p);

RationalPolynomial phi_by_recurrence(const Monomial& m) {
    RationalPolynomial r = RationalPolynomial::constant(1);
    for (const auto& f : m.factors()) r = r * phi_by_recurrence(f);
    return r;
}

// phi(p)(X+1) - phi(p)(X) = sum over base blocks b of
//   phi(legs left of b) * phi(legs strictly inside b, component split)
//   * phi(legs right of b),
// inverted by the binomial-basis antidifference (which pins phi(p)(0) = 0).
RationalPolynomial phi_by_recurrence(const NoncrossingPartition& p) {
    static std::mutex mutex;
    static std::map<std::string, RationalPolynomial> memo;
    if (p.empty()) return RationalPolynomial::constant(1);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memo.find(p.text());
        if (it != memo.end()) return it->second;
    }

    int k = p.block_count();
    RationalPolynomial step = RationalPolynomial::zero();
    for (int b : base_blocks(p)) {
        int lo = p.block(b).front(), hi = p.block(b).back();
        std::vector<int> left, middle, right;
        for (int j = 0; j < k; ++j) {
            if (j == b) continue;
            if (p.block(j).back() < lo)
                left.push_back(j);
            else if (p.block(j).front() > hi)
                right.push_back(j);
            else
                middle.push_back(j);
        }
        RationalPolynomial term = phi_by_recurrence(restrict_class(p, left));
        term = term * phi_by_recurrence(Monomial(restrict_blocks(p, middle)));
        term = term * phi_by_recurrence(restrict_class(p, right));
        step = step + term;
    }
    RationalPolynomial result = step.antidifference();

    std::lock_guard<std::mutex> lock(mutex);
    memo.emplace(p.text(), result);
    return result;
}

} // namespace

RationalPolynomial phi_ncp(const NoncrossingPartition& p, PhiAlgorithm algo) {
    switch (algo) {
        case PhiAlgorithm::coproduct:
            return phi_by_coproduct(AlgebraElement::from(p));
        case PhiAlgorithm::recurrence:
            return phi_by_recurrence(p);
        case PhiAlgorithm::interpolation:
            return phi_by_interpolation(p);
    }
    throw Error("unknown phi algorithm");
}

RationalPolynomial phi_ncp(const Monomial& m, PhiAlgorithm algo) {
    if (algo == PhiAlgorithm::coproduct)
        return phi_by_coproduct(AlgebraElement::from(m));
    RationalPolynomial r = RationalPolynomial::constant(1);
    for (const auto& f : m.factors()) r = r * phi_ncp(f, algo);
    return r;
}

RationalPolynomial phi_ncp(const AlgebraElement& x, PhiAlgorithm algo) {
    if (algo == PhiAlgorithm::coproduct) return phi_by_coproduct(x);
    RationalPolynomial r = RationalPolynomial::zero();
    for (const auto& [m, c] : x.terms()) r = r + phi_ncp(m, algo).scaled(c);
    return r;
}

PolynomialInvariant phi_invariant(PhiAlgorithm algo) {
    return PolynomialInvariant(
        "phi", [algo](const NoncrossingPartition& p) { return phi_ncp(p, algo); });
}

// ---- linear-extension counting invariants --------------------------------

namespace {

// Nesting forest of the monomial: parent edges within each factor, with
// blocks of later factors offset.
struct ForestView {
    int blocks = 0;
    std::vector<std::pair<int, int>> covers;  // (outer, inner)
};

ForestView forest_view(const Monomial& m) {
    ForestView fv;
    for (const auto& f : m.factors()) {
        auto parents = nesting_parents(f);
        for (std::size_t j = 0; j < parents.size(); ++j)
            if (parents[j] >= 0)
                fv.covers.emplace_back(fv.blocks + parents[j],
                                       fv.blocks + static_cast<int>(j));
        fv.blocks += f.block_count();
    }
    return fv;
}

Integer count_maps(const ForestView& fv, int levels, bool strict) {
    if (fv.blocks == 0) return 1;
    if (levels <= 0) return 0;
    double total = 1;
    for (int i = 0; i < fv.blocks; ++i) {
        total *= levels;
        if (total > static_cast<double>(guards().coloration_budget))
            throw DegreeOverflow("order-preserving map search space exceeds the budget");
    }
    std::vector<int> f(fv.blocks, 1);
    Integer count = 0;
    while (true) {
        bool ok = true;
        for (auto [o, i] : fv.covers) {
            if (strict ? f[o] >= f[i] : f[o] > f[i]) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        int i = 0;
        while (i < fv.blocks && f[i] == levels) f[i++] = 1;
        if (i == fv.blocks) break;
        ++f[i];
    }
    return count;
}

} // namespace

Integer count_extensions(const Monomial& m, int levels, bool strict) {
    return count_maps(forest_view(m), levels, strict);
}

RationalPolynomial extension_invariant(const Monomial& m, bool strict) {
    ForestView fv = forest_view(m);
    int b = fv.blocks;
    std::vector<Integer> w(b + 1);
    for (int j = 0; j <= b; ++j) w[j] = count_maps(fv, j, strict);
    // binomial inversion: coefficient k counts the surjective maps onto {1..k}
    std::vector<Rational> coeffs(b + 1, 0);
    for (int k = 0; k <= b; ++k) {
        Integer lk = 0;
        for (int j = 0; j <= k; ++j) {
            Integer term = binomial(Integer(k), j) * w[j];
            if ((k - j) % 2 == 0)
                lk += term;
            else
                lk -= term;
        }
        coeffs[k] = lk;
    }
    return RationalPolynomial(std::move(coeffs), PolyBasis::binomial_falling);
}

PolynomialInvariant lambda_invariant() {
    return PolynomialInvariant("ext-weak", [](const NoncrossingPartition& p) {
        return extension_invariant(Monomial(p), false);
    });
}

PolynomialInvariant lambda_strict_invariant() {
    return PolynomialInvariant("ext-strict", [](const NoncrossingPartition& p) {
        return extension_invariant(Monomial(p), true);
    });
}

RationalPolynomial phi_zero(const Monomial& m) {
    Rational lead = 1;
    int b = 0;
    for (const auto& f : m.factors()) {
        if (f.block_count() > guards().extension_blocks)
            throw DegreeOverflow("linear-extension count exceeds the block guard");
        lead *= Rational(linear_extension_count(f)) / factorial(f.block_count());
        b += f.block_count();
    }
    std::vector<Rational> coeffs(b + 1, 0);
    coeffs[b] = lead;
    return RationalPolynomial(std::move(coeffs), PolyBasis::monomial);
}

PolynomialInvariant phi_zero_invariant() {
    return PolynomialInvariant(
        "phi0", [](const NoncrossingPartition& p) { return phi_zero(Monomial(p)); });
}

// ---- actions and the antipode -------------------------------------------

PolynomialInvariant act_character(const PolynomialInvariant& f, const Character& c) {
    return PolynomialInvariant(
        f.name() + "<-" + c.name(), [f, c](const NoncrossingPartition& p) {
            RationalPolynomial r = RationalPolynomial::zero();
            TensorElement fus = coproduct_fusion(p);
            for (const auto& [key, coeff] : fus.terms())
                r = r + f(key[0]).scaled(coeff * c(key[1]));
            return r;
        });
}

AlgebraElement antipode(const NoncrossingPartition& p) {
    Character mu = mu_ncp();
    AlgebraElement r;
    TensorElement fus = coproduct_fusion(p);
    for (const auto& [key, c] : fus.terms()) r.add_term(key[1], c * mu(key[0]));
    return r;
}

AlgebraElement antipode(const Monomial& m) {
    AlgebraElement r = AlgebraElement::unit();
    for (const auto& f : m.factors()) r = r * antipode(f);
    return r;
}

AlgebraElement antipode(const AlgebraElement& x) {
    AlgebraElement r;
    for (const auto& [m, c] : x.terms()) r = r + antipode(m).scaled(c);
    return r;
}

// ---- coefficient identities ---------------------------------------------

std::vector<CoefficientCheck> coefficient_checks(const NoncrossingPartition& p) {
    std::vector<CoefficientCheck> out;
    int b = p.block_count();
    RationalPolynomial phi = phi_ncp(p).to_basis(PolyBasis::monomial);

    auto push = [&out](std::string id, Rational expected, Rational actual) {
        CoefficientCheck c;
        c.id = std::move(id);
        c.expected = std::move(expected);
        c.actual = std::move(actual);
        c.pass = c.expected == c.actual;
        out.push_back(std::move(c));
    };

    push("degree", b, phi.degree());
    push("leading", Rational(linear_extension_count(p)) / factorial(b),
         phi.coefficient(b));
    push("linear", lambda_ncp()(p), phi.coefficient(1));

    Rational sub = 0;
    for (auto [i, j] : close_pairs(p))
        sub += Rational(linear_extension_count(merge_pair(p, i, j)));
    for (auto [i, j] : nested_pairs(p)) {
        Rational le = linear_extension_count(merge_pair(p, i, j));
        sub += le / 2;
    }
    sub = -sub / factorial(b - 1);
    push("subleading", sub, phi.coefficient(b - 1));
    return out;
}

} // namespace ncp
